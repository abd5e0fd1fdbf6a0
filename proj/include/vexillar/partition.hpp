#pragma once

#include <cstddef>
#include <vector>

namespace vexillar {

// Non-increasing sequence of positive integers. The empty partition is legal
// and denotes the trivial weight.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<unsigned> parts);

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned degree() const;            // |mu|, sum of parts
  std::size_t depth() const { return parts_.size(); }  // number of parts
  unsigned part(std::size_t t) const; // 1-based, 0 beyond depth

  Partition transpose() const;        // column lengths of the diagram

  bool operator==(const Partition& rhs) const { return parts_ == rhs.parts_; }
  bool operator<(const Partition& rhs) const { return parts_ < rhs.parts_; }

 private:
  std::vector<unsigned> parts_;
};

// Number of boxes weakly right of column t, i.e. sum of parts >= t clipped:
// kappa_t(mu) = sum_{k >= t} mu_k with rows of length < t contributing 0.
unsigned kappa_t(const Partition& mu, unsigned t);

// Shape criterion for ideal membership: a determinantal monomial of shape
// sigma lies in I^(mu)(X) iff kappa_t(sigma) >= kappa_t(mu) for all t.
bool shape_in_ideal(const Partition& sigma, const Partition& mu);

// Filling of a Ferrer diagram. rows[i] holds the entries of row i+1 (the
// row of length shape.parts()[i]); columns are read across rows.
class Tableau {
 public:
  Tableau() = default;
  Tableau(Partition shape, std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int at(std::size_t row, std::size_t col) const;  // 0-based

  // Entries of one column, row 1 first.
  std::vector<int> column(std::size_t col) const;

  // Columns strictly increasing, rows non-decreasing.
  bool is_standard() const;

  // Multiset of entry values as (value, count) pairs, values ascending.
  std::vector<std::pair<int, std::size_t>> content() const;

  bool operator==(const Tableau& rhs) const {
    return shape_ == rhs.shape_ && rows_ == rhs.rows_;
  }

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

struct Bitableau {
  Tableau left;
  Tableau right;

  bool same_shape() const { return left.shape() == right.shape(); }
  bool is_standard() const {
    return same_shape() && left.is_standard() && right.is_standard();
  }
};

// All standard tableaux of the given shape with entries in 1..max_entry,
// in lexicographic order of the row-major entry sequence.
std::vector<Tableau> standard_tableaux(const Partition& shape, int max_entry);

// Detects the combinatorial condition that excludes a standard tableau from
// the violation-free basis: some value v sits in two distinct columns with
// at least as many values below v repeated in both columns as are absent
// from both.
bool has_violation(const Tableau& t);

}  // namespace vexillar

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "vexillar/partition.hpp"
#include "vexillar/rational.hpp"

namespace vexillar {

// Variable x_{i,j}: row i, column j of the symbolic matrix, both 1-based.
using VarId = std::pair<unsigned, unsigned>;

// Exponent vector, sparse: only positive exponents stored.
using Monomial = std::map<VarId, unsigned>;

// Sparse multivariate polynomial over exact rationals in the x_{i,j}.
class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial constant(const Rat& c);
  static Polynomial variable(unsigned i, unsigned j);

  bool is_zero() const { return terms_.empty(); }
  unsigned total_degree() const;

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial scaled(const Rat& c) const;
  bool operator==(const Polynomial& rhs) const { return terms_ == rhs.terms_; }

  const std::map<Monomial, Rat>& terms() const { return terms_; }

  void add_term(const Monomial& mono, const Rat& coeff);

 private:
  std::map<Monomial, Rat> terms_;
};

// Euclidean form on polynomials: distinct monomials are orthogonal and
// <x^a, x^a> = a!/|a|!.
Rat scalar_product(const Polynomial& f, const Polynomial& g);

// Determinantal monomial of a bitableau: product over the diagram columns of
// the minor of X whose rows are picked by the left column and whose columns
// are picked by the right column. Entries must lie in 1..n / 1..m.
Polynomial det_monomial(const Bitableau& b, unsigned n, unsigned m);

// All partitions of d (any depth), lexicographically decreasing.
std::vector<Partition> partitions_of(unsigned d);

// Exact linear-independence check for the expansions of all standard
// bitableau monomials of total degree d over an n x m variable matrix.
// Guarded: throws std::invalid_argument past the configured size bound.
bool standard_monomials_independent(unsigned degree, unsigned n, unsigned m,
                                    unsigned max_degree_guard = 4,
                                    unsigned max_dim_guard = 3);

}  // namespace vexillar

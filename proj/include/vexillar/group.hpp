#pragma once

#include <vector>

#include "vexillar/design.hpp"
#include "vexillar/flag.hpp"
#include "vexillar/matrix.hpp"

namespace vexillar {

// Finite subgroup of O(n) given by exact rational matrices, fully enumerated.
class MatGroup {
 public:
  unsigned ambient() const { return ambient_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<RatMatrix>& elements() const { return elements_; }

  friend MatGroup close(const std::vector<RatMatrix>& generators,
                        std::size_t max_order);

 private:
  unsigned ambient_ = 0;
  std::vector<RatMatrix> elements_;
};

// Breadth-first closure of the generators. Throws std::invalid_argument on a
// non-orthogonal generator and std::runtime_error when the closure exceeds
// max_order. The element list is sorted canonically, so equal groups
// enumerate identically regardless of generator order.
MatGroup close(const std::vector<RatMatrix>& generators,
               std::size_t max_order = 1000000);

// Deduplicated orbit of a flag under the group, uniform weights.
FlagSet orbit(const Flag& f, const MatGroup& g);

// Dimension of the G-invariant subspace of Sym^k(Sym^2 R^n), k <= 3, by
// exact character averaging. The character at g is assembled from the power
// sums p_j = (tr(g^j)^2 + tr(g^{2j})) / 2 through the complete-homogeneous
// recursion k h_k = sum_j p_j h_{k-j}.
Int sym_sym_invariant_dim(const MatGroup& g, unsigned k);

// Same computation driven by conjugacy-class data for groups too large to
// enumerate: per class its size and the traces of g^j for j = 1..2k.
struct ConjClass {
  Int size;
  std::vector<Rat> power_traces;  // power_traces[j-1] = tr(g^j)
};
struct ClassData {
  Int order;
  std::vector<ConjClass> classes;
};
Int sym_sym_invariant_dim(const ClassData& cd, unsigned k);

// dim Inv_{O(n)} Sym^k(Sym^2 R^n): the number of partitions of k with parts
// of size <= n (the independent trace monomials tr(S), tr(S^2), ...).
unsigned reference_invariant_dim(unsigned n, unsigned k);

// True iff the group invariant dimensions match the O(n) reference for every
// k <= t/2 (t even, t <= 6); then every flag orbit of every shape is a
// t-design.
bool orbit_design_strength(const MatGroup& g, unsigned t);
bool orbit_design_strength(const ClassData& cd, unsigned n, unsigned t);

}  // namespace vexillar

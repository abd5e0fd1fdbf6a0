#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "vexillar/matrix.hpp"
#include "vexillar/partition.hpp"

namespace vexillar {

// Raised when an enumeration would exceed its configured budget. Budgets
// fail loudly: results are never silently truncated.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Full-rank integral lattice given by its Gram matrix. Positive definiteness
// is verified at construction.
class Lattice {
 public:
  Lattice(IntMatrix gram, std::string name = "");

  const IntMatrix& gram() const { return gram_; }
  unsigned dim() const { return static_cast<unsigned>(gram_.rows()); }
  const std::string& name() const { return name_; }
  const Int& determinant() const { return det_; }

  // Smallest nonzero Gram norm (computed on demand, cached).
  Int min_norm() const;

 private:
  IntMatrix gram_;
  std::string name_;
  Int det_;
  mutable Int min_norm_;  // 0 = not yet computed
};

// The weight partition: lambda with fewer than n parts; the transpose parts
// are the ranks of the chains.
struct Weight {
  Partition lambda;
  std::vector<unsigned> ranks;  // transpose parts, non-increasing

  Weight(Partition l, unsigned ambient_dim);
  unsigned degree() const { return lambda.degree(); }
};

struct ShortVector {
  std::vector<Int> coords;  // w.r.t. the lattice basis
  Int norm;
};

// All nonzero vectors of Gram norm <= bound, one of each +-v pair. Exact
// branch-and-bound over the LDL^T factorization of an LLL-reduced copy of
// the Gram matrix; no misses. Output sorted by (norm, coords) and identical
// for every thread count; threads > 1 splits the top enumeration level.
std::vector<ShortVector> short_vectors(const Lattice& l, const Int& bound,
                                       std::uint64_t node_budget = 0,
                                       unsigned threads = 1);

// Primitive rank-k sublattice in canonical form.
struct Sublattice {
  IntMatrix basis;  // k x n, HNF canonical, saturated
  Int det;          // det(basis G basis^T)
};

// Every primitive rank-k sublattice of determinant <= det_bound, each once.
// k <= 8 (the Minkowski search bound uses the exact Hermite constants).
std::vector<Sublattice> sublattices_upto(const Lattice& l, unsigned k,
                                         const Int& det_bound,
                                         std::uint64_t node_budget = 0);

// A chain of nested primitive sublattices; chain[i] has rank ranks[i], with
// repeated ranks repeating the same sublattice.
struct LatticeFlag {
  std::vector<Sublattice> chain;
};

// gamma(L) kept exact as (num, den, exponent): gamma = num / den^exponent.
struct GammaValue {
  Int num;       // product of the chain determinants, with multiplicity
  Int den;       // det(L)
  Rat exponent;  // |lambda| / n

  double approx() const;
};

struct MinimalFlagsResult {
  std::vector<LatticeFlag> flags;  // the complete set S_lambda(L)
  GammaValue gamma;
  std::size_t s_lambda() const { return flags.size(); }
};

// The complete set of chains minimizing the determinant product, with the
// exact Hermite invariant. Throws BudgetExceeded when a budget trips.
MinimalFlagsResult minimal_flags(const Lattice& l, const Weight& w,
                                 std::uint64_t node_budget = 0);

// Exact LLL reduction acting on the Gram matrix only.
struct LllResult {
  IntMatrix gram;       // u * G * u^T
  IntMatrix transform;  // unimodular u
};
LllResult lll_reduce_gram(const IntMatrix& gram);

// gamma_k^k for k = 1..8, the exact k-th powers of the Hermite constants,
// used for the Minkowski search bound.
Rat hermite_power(unsigned k);

}  // namespace vexillar

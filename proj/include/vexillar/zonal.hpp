#pragma once

#include <vector>

#include "vexillar/flag.hpp"
#include "vexillar/partition.hpp"
#include "vexillar/rational.hpp"

namespace vexillar {

// Coefficient vector over the explicit spanning set of an invariant space
// N^mu, mu in {(2), (4), (2,2)}. Coordinates are indexed by the block index
// (or by pairs of blocks for (4)).
struct InvariantVector {
  Partition mu;
  std::vector<Rat> coefficients;
};

// Dimension of the O(m_1) x ... x O(m_{l+1})-invariant space N^mu:
// l for (2), l(l+1)/2 for (4), l for (2,2), 0 for the remaining partitions
// of degree <= 4. Throws for |mu| > 4.
unsigned n_mu_dim(const Partition& mu, const FlagShape& shape);

// The basis vector Upsilon_{d_level} of N^(2): coefficients over the block
// spanning vectors, i.e. blocks l down to the given level set to 1.
// level is 1-based, 1 <= level <= l.
InvariantVector upsilon(const FlagShape& shape, unsigned level);

// Degree-2 zonal kernel between two flags, exact:
// tr(P_level(f) P_level2(g)) - d_level d_level2 / n.
Rat zonal2(const Flag& f, const Flag& g, std::size_t level,
           std::size_t level2);

// Single-column evaluation of the explicit degree-2 kernel expansion on
// float flags; summing over the first d_level columns of f and the first
// d_level2 columns of g reproduces zonal2 up to float error. Diagnostic
// only, never used in certification.
double zonal2_full(std::size_t col, std::size_t col2, const FloatFlag& xf,
                   const FloatFlag& xg);

// Column-summed version matching zonal2(f, g, level, level2).
double zonal2_float(const FloatFlag& xf, const FloatFlag& xg,
                    std::size_t level, std::size_t level2);

}  // namespace vexillar

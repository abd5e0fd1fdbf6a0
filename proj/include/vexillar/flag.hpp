#pragma once

#include <cstdint>
#include <vector>

#include "vexillar/matrix.hpp"

namespace vexillar {

// Dimension vector d_1 > ... > d_l of a flag in R^n.
struct FlagShape {
  unsigned ambient = 0;
  std::vector<unsigned> dims;

  FlagShape() = default;
  FlagShape(unsigned n, std::vector<unsigned> d);

  std::size_t levels() const { return dims.size(); }
  bool operator==(const FlagShape& rhs) const {
    return ambient == rhs.ambient && dims == rhs.dims;
  }

  // Block sizes m_1, ..., m_{l+1}: m_1 = d_l, m_i = d_{l+1-i} - d_{l+2-i},
  // m_{l+1} = n - d_1. Positive and summing to n.
  std::vector<unsigned> block_sizes() const;
};

// A flag stored as its stack of exact orthogonal projectors, one per level.
// The projectors are the basis-independent content of the flag, so equality
// of flags is entrywise equality of the stacks.
class Flag {
 public:
  Flag(FlagShape shape, std::vector<RatMatrix> projectors);

  const FlagShape& shape() const { return shape_; }
  const RatMatrix& projector(std::size_t level) const {  // 0-based
    return projectors_.at(level);
  }
  const std::vector<RatMatrix>& projectors() const { return projectors_; }

  // Flag with every subspace mapped by the exact orthogonal matrix q.
  Flag transformed(const RatMatrix& q) const;

  bool operator==(const Flag& rhs) const;
  bool operator<(const Flag& rhs) const;  // canonical order for dedup

 private:
  FlagShape shape_;
  std::vector<RatMatrix> projectors_;
};

// Builds the flag from nested rational spanning sets: bases[i] is n x k_i
// with columns spanning V_{i+1} ... V_1 from largest to smallest, i.e.
// bases[0] spans the d_1-dimensional space. Throws on dimension mismatch or
// when the spans are not nested.
Flag flag_from_bases(const FlagShape& shape,
                     const std::vector<RatMatrix>& bases);

// tr(P_level(f) . P_level2(g)), the sum of squared principal-angle cosines
// between the two subspaces.
Rat trace_pair(const Flag& f, const Flag& g, std::size_t level,
               std::size_t level2);

// Float flag for Monte Carlo diagnostics only: n x d_1 matrix with
// orthonormal columns, first d_i columns spanning the level-i space.
struct FloatFlag {
  FlagShape shape;
  std::vector<std::vector<double>> x;  // columns

  double entry(std::size_t i, std::size_t j) const { return x[j][i]; }
};

// Seedable deterministic Haar sampler: Gaussian columns orthonormalized by
// modified Gram-Schmidt. The distribution is invariant under left
// multiplication by any orthogonal matrix.
FloatFlag haar_sample(const FlagShape& shape, std::uint64_t seed);
FloatFlag haar_sample(const FlagShape& shape, class HaarRng& rng);

// Gaussian source shared across samples so batches stay reproducible.
class HaarRng {
 public:
  explicit HaarRng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b9ULL) {}
  double gaussian();

 private:
  std::uint64_t next();
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace vexillar

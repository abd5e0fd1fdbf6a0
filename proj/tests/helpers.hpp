#pragma once

// Shared helpers for the test suites: deterministic pseudo-random integers,
// exact orthogonal matrices built from signed permutations and Pythagorean
// rotations, and random rational flags.

#include <cstdint>
#include <vector>

#include "vexillar/flag.hpp"
#include "vexillar/matrix.hpp"

namespace testutil {

class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : s_(seed ? seed : 1) {}
  std::uint64_t next() {
    s_ = s_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return s_ >> 11;
  }
  // Uniform in [lo, hi].
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(
                                              hi - lo + 1));
  }

 private:
  std::uint64_t s_;
};

// Exact orthogonal matrix: a product of signed permutations and rational
// plane rotations from the (3,4,5) and (5,12,13) triangles.
inline vexillar::RatMatrix random_orthogonal(unsigned n, Lcg& rng) {
  using vexillar::Rat;
  using vexillar::RatMatrix;
  RatMatrix q = RatMatrix::identity(n);
  const std::pair<Rat, Rat> rots[] = {{Rat(3, 5), Rat(4, 5)},
                                      {Rat(5, 13), Rat(12, 13)}};
  for (unsigned step = 0; step < 2 * n; ++step) {
    RatMatrix g = RatMatrix::identity(n);
    if (rng.next() % 2 == 0 && n >= 2) {
      const auto a = static_cast<std::size_t>(rng.range(0, n - 1));
      auto b = static_cast<std::size_t>(rng.range(0, n - 1));
      if (a == b) b = (b + 1) % n;
      const auto& [c, s] = rots[rng.next() % 2];
      g(a, a) = c;
      g(b, b) = c;
      g(a, b) = s;
      g(b, a) = -s;
    } else {
      // Signed transposition.
      const auto a = static_cast<std::size_t>(rng.range(0, n - 1));
      const auto b = static_cast<std::size_t>(rng.range(0, n - 1));
      if (a != b) {
        g(a, a) = 0;
        g(b, b) = 0;
        g(a, b) = Rat(rng.next() % 2 ? 1 : -1);
        g(b, a) = Rat(rng.next() % 2 ? 1 : -1);
      } else {
        g(a, a) = Rat(rng.next() % 2 ? 1 : -1);
      }
    }
    q = q * g;
  }
  return q;
}

// Random rational flag of the given shape: one full-rank random integer
// matrix, nested prefixes of its columns.
inline vexillar::Flag random_flag(const vexillar::FlagShape& shape, Lcg& rng) {
  using vexillar::Rat;
  using vexillar::RatMatrix;
  const unsigned n = shape.ambient;
  const unsigned d1 = shape.dims.front();
  for (;;) {
    RatMatrix big(n, d1);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < d1; ++j) big(i, j) = Rat(rng.range(-3, 3));
    if (vexillar::rank(big) != d1) continue;
    std::vector<RatMatrix> bases;
    for (unsigned d : shape.dims) {
      RatMatrix b(n, d);
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < d; ++j) b(i, j) = big(i, j);
      bases.push_back(std::move(b));
    }
    return vexillar::flag_from_bases(shape, bases);
  }
}

}  // namespace testutil

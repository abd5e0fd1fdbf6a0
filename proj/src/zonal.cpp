#include "vexillar/zonal.hpp"

#include <stdexcept>

namespace vexillar {

unsigned n_mu_dim(const Partition& mu, const FlagShape& shape) {
  if (mu.degree() > 4)
    throw std::invalid_argument("n_mu_dim: |mu| > 4 unsupported");
  const unsigned l = static_cast<unsigned>(shape.levels());
  const auto& p = mu.parts();
  if (p == std::vector<unsigned>{2}) return l;
  if (p == std::vector<unsigned>{4}) return l * (l + 1) / 2;
  if (p == std::vector<unsigned>{2, 2}) return l;
  if (p.empty()) return 1;  // constants
  return 0;
}

InvariantVector upsilon(const FlagShape& shape, unsigned level) {
  const unsigned l = static_cast<unsigned>(shape.levels());
  if (level < 1 || level > l)
    throw std::out_of_range("upsilon: level out of range");
  // Block spanning vector i covers values d_i <= v < d_{i-1} (d_0 = +inf
  // capped at block top); Upsilon_{d_level} = sum of blocks with d_i <= d_level,
  // i.e. blocks level..l in flag-level indexing.
  InvariantVector out{Partition({2}), std::vector<Rat>(l, Rat(0))};
  for (unsigned i = level; i <= l; ++i) out.coefficients[i - 1] = 1;
  return out;
}

Rat zonal2(const Flag& f, const Flag& g, std::size_t level,
           std::size_t level2) {
  if (f.shape().ambient != g.shape().ambient)
    throw std::invalid_argument("zonal2: ambient mismatch");
  const Rat d1(f.shape().dims.at(level));
  const Rat d2(g.shape().dims.at(level2));
  return trace_pair(f, g, level, level2) - d1 * d2 / Rat(f.shape().ambient);
}

double zonal2_full(std::size_t col, std::size_t col2, const FloatFlag& xf,
                   const FloatFlag& xg) {
  const std::size_t n = xf.shape.ambient;
  if (n != xg.shape.ambient)
    throw std::invalid_argument("zonal2_full: ambient mismatch");
  auto a = [&](std::size_t i) {
    return xf.entry(i, col) * xf.entry(i, col) -
           xf.entry(0, col) * xf.entry(0, col);
  };
  auto b = [&](std::size_t i) {
    return xg.entry(i, col2) * xg.entry(i, col2) -
           xg.entry(0, col2) * xg.entry(0, col2);
  };
  double s1 = 0, sa = 0, sb = 0, s3 = 0;
  for (std::size_t i = 1; i < n; ++i) {
    s1 += a(i) * b(i);
    sa += a(i);
    sb += b(i);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t i2 = 0; i2 < n; ++i2) {
      if (i == i2) continue;
      s3 += xf.entry(i, col) * xf.entry(i2, col) * xg.entry(i, col2) *
            xg.entry(i2, col2);
    }
  return s1 - sa * sb / static_cast<double>(n) + s3;
}

double zonal2_float(const FloatFlag& xf, const FloatFlag& xg,
                    std::size_t level, std::size_t level2) {
  const unsigned d1 = xf.shape.dims.at(level);
  const unsigned d2 = xg.shape.dims.at(level2);
  double s = 0;
  for (unsigned j = 0; j < d1; ++j)
    for (unsigned j2 = 0; j2 < d2; ++j2) s += zonal2_full(j, j2, xf, xg);
  return s;
}

}  // namespace vexillar

#include "vexillar/flag.hpp"

#include <cmath>
#include <stdexcept>

namespace vexillar {

FlagShape::FlagShape(unsigned n, std::vector<unsigned> d)
    : ambient(n), dims(std::move(d)) {
  if (dims.empty()) throw std::invalid_argument("FlagShape: empty dims");
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] == 0 || dims[i] >= ambient)
      throw std::invalid_argument("FlagShape: dims must lie in (0, n)");
    if (i > 0 && dims[i] >= dims[i - 1])
      throw std::invalid_argument("FlagShape: dims must strictly decrease");
  }
}

std::vector<unsigned> FlagShape::block_sizes() const {
  const std::size_t l = dims.size();
  std::vector<unsigned> m(l + 1);
  m[0] = dims[l - 1];
  for (std::size_t i = 2; i <= l; ++i) m[i - 1] = dims[l - i] - dims[l + 1 - i];
  m[l] = ambient - dims[0];
  return m;
}

Flag::Flag(FlagShape shape, std::vector<RatMatrix> projectors)
    : shape_(std::move(shape)), projectors_(std::move(projectors)) {
  if (projectors_.size() != shape_.levels())
    throw std::invalid_argument("Flag: projector count mismatch");
  for (std::size_t i = 0; i < projectors_.size(); ++i) {
    const RatMatrix& p = projectors_[i];
    if (p.rows() != shape_.ambient || p.cols() != shape_.ambient)
      throw std::invalid_argument("Flag: projector dimension mismatch");
    if (p.trace() != Rat(shape_.dims[i]))
      throw std::invalid_argument("Flag: projector trace != level dimension");
  }
}

Flag Flag::transformed(const RatMatrix& q) const {
  std::vector<RatMatrix> ps;
  ps.reserve(projectors_.size());
  const RatMatrix qt = q.transpose();
  for (const RatMatrix& p : projectors_) ps.push_back(q * p * qt);
  return Flag(shape_, std::move(ps));
}

bool Flag::operator==(const Flag& rhs) const {
  return shape_ == rhs.shape_ && projectors_ == rhs.projectors_;
}

bool Flag::operator<(const Flag& rhs) const {
  if (!(shape_ == rhs.shape_)) {
    if (shape_.ambient != rhs.shape_.ambient)
      return shape_.ambient < rhs.shape_.ambient;
    return shape_.dims < rhs.shape_.dims;
  }
  for (std::size_t k = 0; k < projectors_.size(); ++k) {
    const auto& a = projectors_[k].entries();
    const auto& b = rhs.projectors_[k].entries();
    for (std::size_t i = 0; i < a.size(); ++i) {
      const int c = cmp(a[i], b[i]);
      if (c != 0) return c < 0;
    }
  }
  return false;
}

Flag flag_from_bases(const FlagShape& shape,
                     const std::vector<RatMatrix>& bases) {
  if (bases.size() != shape.levels())
    throw std::invalid_argument("flag_from_bases: level count mismatch");
  std::vector<RatMatrix> ps;
  ps.reserve(bases.size());
  for (std::size_t i = 0; i < bases.size(); ++i) {
    const RatMatrix& b = bases[i];
    if (b.rows() != shape.ambient)
      throw std::invalid_argument("flag_from_bases: ambient mismatch");
    if (rank(b) != shape.dims[i])
      throw std::invalid_argument("flag_from_bases: span dimension mismatch");
    // Keep an independent subset of the columns so spanning sets are legal.
    std::vector<std::size_t> keep;
    std::vector<std::vector<Rat>> colspace;  // kept columns, pivot-normalized
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::vector<Rat> col(b.rows());
      for (std::size_t ii = 0; ii < b.rows(); ++ii) col[ii] = b(ii, j);
      for (const auto& kc : colspace) {
        std::size_t piv = 0;
        while (piv < kc.size() && kc[piv] == 0) ++piv;
        if (piv < kc.size() && col[piv] != 0) {
          const Rat f = col[piv];
          for (std::size_t ii = 0; ii < col.size(); ++ii)
            col[ii] -= f * kc[ii];
        }
      }
      std::size_t piv = 0;
      while (piv < col.size() && col[piv] == 0) ++piv;
      if (piv == col.size()) continue;
      const Rat lead = col[piv];
      for (auto& v : col) v /= lead;
      colspace.push_back(std::move(col));
      keep.push_back(j);
    }
    RatMatrix indep(b.rows(), keep.size());
    for (std::size_t jj = 0; jj < keep.size(); ++jj)
      for (std::size_t ii = 0; ii < b.rows(); ++ii)
        indep(ii, jj) = b(ii, keep[jj]);
    ps.push_back(projector(indep));
  }
  for (std::size_t i = 0; i + 1 < ps.size(); ++i)
    if (!(ps[i] * ps[i + 1] == ps[i + 1]))
      throw std::invalid_argument("flag_from_bases: spans are not nested");
  return Flag(shape, std::move(ps));
}

Rat trace_pair(const Flag& f, const Flag& g, std::size_t level,
               std::size_t level2) {
  if (f.shape().ambient != g.shape().ambient)
    throw std::invalid_argument("trace_pair: ambient mismatch");
  const RatMatrix& p = f.projector(level);
  const RatMatrix& q = g.projector(level2);
  Rat t = 0;
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j) t += p(i, j) * q(j, i);
  return t;
}

std::uint64_t HaarRng::next() {
  // splitmix64: fixed across platforms so seeds give bit-identical streams.
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double HaarRng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * (static_cast<double>(next() >> 11) * 0x1.0p-53) - 1.0;
    v = 2.0 * (static_cast<double>(next() >> 11) * 0x1.0p-53) - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * f;
  have_spare_ = true;
  return u * f;
}

FloatFlag haar_sample(const FlagShape& shape, HaarRng& rng) {
  const std::size_t n = shape.ambient;
  const std::size_t m = shape.dims[0];
  std::vector<std::vector<double>> cols(m, std::vector<double>(n));
  for (auto& c : cols)
    for (auto& v : c) v = rng.gaussian();
  // Modified Gram-Schmidt.
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      double dot = 0;
      for (std::size_t i = 0; i < n; ++i) dot += cols[j][i] * cols[k][i];
      for (std::size_t i = 0; i < n; ++i) cols[j][i] -= dot * cols[k][i];
    }
    double norm = 0;
    for (std::size_t i = 0; i < n; ++i) norm += cols[j][i] * cols[j][i];
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) cols[j][i] /= norm;
  }
  return FloatFlag{shape, std::move(cols)};
}

FloatFlag haar_sample(const FlagShape& shape, std::uint64_t seed) {
  HaarRng rng(seed);
  return haar_sample(shape, rng);
}

}  // namespace vexillar

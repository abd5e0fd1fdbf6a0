#include "vexillar/matrix.hpp"

#include <algorithm>

namespace vexillar {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matmul: dim mismatch");
  RatMatrix out(rows_, rhs.cols_);
  Rat t;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& aik = (*this)(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        if (rhs(k, j) == 0) continue;
        t = aik * rhs(k, j);
        out(i, j) += t;
      }
    }
  return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matadd: dim mismatch");
  RatMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + rhs.a_[i];
  return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matsub: dim mismatch");
  RatMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - rhs.a_[i];
  return out;
}

RatMatrix RatMatrix::scaled(const Rat& c) const {
  RatMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * c;
  return out;
}

bool RatMatrix::operator==(const RatMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_;
}

Rat RatMatrix::trace() const {
  Rat t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool RatMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::operator<(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_) return rows_ < rhs.rows_;
  if (cols_ != rhs.cols_) return cols_ < rhs.cols_;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    const int c = cmp(a_[i], rhs.a_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

RatMatrix IntMatrix::to_rational() const {
  RatMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = Rat((*this)(i, j));
  return out;
}

namespace {

// Row echelon reduction in place; returns pivot columns. When detp is
// non-null accumulates the determinant sign/pivot product for square input.
std::vector<std::size_t> echelonize(RatMatrix& m, Rat* detp = nullptr) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  Rat d = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
      d = -d;
    }
    const Rat piv = m(r, c);
    d *= piv;
    for (std::size_t j = c; j < cols; ++j) m(r, j) /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rat f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  if (detp) *detp = (pivots.size() == rows && rows == cols) ? d : Rat(0);
  return pivots;
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
  RatMatrix work = m;
  return echelonize(work).size();
}

Rat det(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
  RatMatrix work = m;
  Rat d;
  echelonize(work, &d);
  return d;
}

std::optional<std::vector<Rat>> solve(const RatMatrix& m,
                                      const std::vector<Rat>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: dim mismatch");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const auto pivots = echelonize(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<Rat> x(m.cols(), Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
  return x;
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = echelonize(aug);
  if (pivots.size() != n || pivots.back() != n - 1)
    throw std::domain_error("inverse: singular matrix");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

LdlResult ldl(const RatMatrix& g) {
  if (!g.is_symmetric()) throw std::domain_error("ldl: not symmetric");
  const std::size_t n = g.rows();
  RatMatrix l = RatMatrix::identity(n);
  std::vector<Rat> d(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rat dj = g(j, j);
    for (std::size_t k = 0; k < j; ++k) dj -= l(j, k) * l(j, k) * d[k];
    if (dj <= 0) throw std::domain_error("ldl: not positive definite");
    d[j] = dj;
    for (std::size_t i = j + 1; i < n; ++i) {
      Rat v = g(i, j);
      for (std::size_t k = 0; k < j; ++k) v -= l(i, k) * l(j, k) * d[k];
      l(i, j) = v / dj;
    }
  }
  return {std::move(l), std::move(d)};
}

RatMatrix projector(const RatMatrix& b) {
  const RatMatrix bt = b.transpose();
  const RatMatrix gram = bt * b;
  RatMatrix ginv;
  try {
    ginv = inverse(gram);
  } catch (const std::domain_error&) {
    throw std::domain_error("projector: columns are linearly dependent");
  }
  return b * ginv * bt;
}

namespace {

void hnf_core(IntMatrix& h, IntMatrix* u, std::size_t& out_rank) {
  const std::size_t rows = h.rows(), cols = h.cols();
  auto row_sub = [&](std::size_t dst, std::size_t src, const Int& q) {
    // row[dst] -= q * row[src]
    if (q == 0) return;
    for (std::size_t j = 0; j < cols; ++j) h(dst, j) -= q * h(src, j);
    if (u)
      for (std::size_t j = 0; j < u->cols(); ++j)
        (*u)(dst, j) -= q * (*u)(src, j);
  };
  auto row_swap = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols; ++j) std::swap(h(a, j), h(b, j));
    if (u)
      for (std::size_t j = 0; j < u->cols(); ++j)
        std::swap((*u)(a, j), (*u)(b, j));
  };
  auto row_negate = [&](std::size_t a) {
    for (std::size_t j = 0; j < cols; ++j) h(a, j) = -h(a, j);
    if (u)
      for (std::size_t j = 0; j < u->cols(); ++j) (*u)(a, j) = -(*u)(a, j);
  };

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Reduce the column below row r to a single nonzero by gcd row ops.
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        if (best == rows ||
            cmp(abs(h(i, c)), abs(h(best, c))) < 0)
          best = i;
      }
      if (best == rows) break;
      row_swap(r, best);
      bool others = false;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
        row_sub(i, r, q);
        if (h(i, c) != 0) others = true;
      }
      if (!others) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) row_negate(r);
    // Reduce entries above the pivot into [0, pivot).
    for (std::size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      row_sub(i, r, q);
    }
    ++r;
  }
  out_rank = r;
}

}  // namespace

IntMatrix hnf(const IntMatrix& m) {
  IntMatrix h = m;
  std::size_t rk = 0;
  hnf_core(h, nullptr, rk);
  IntMatrix out(rk, m.cols());
  for (std::size_t i = 0; i < rk; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = h(i, j);
  return out;
}

HnfTransform hnf_with_transform(const IntMatrix& m) {
  HnfTransform t{m, IntMatrix::identity(m.rows()), 0};
  hnf_core(t.h, &t.u, t.rank);
  return t;
}

IntMatrix int_kernel(const IntMatrix& m) {
  const std::size_t n = m.cols();
  if (m.rows() == 0) return IntMatrix::identity(n);
  // Left kernel of m^T: rows y of U with (U m^T) row zero satisfy m y^T = 0.
  IntMatrix mt(n, m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) mt(j, i) = m(i, j);
  const HnfTransform t = hnf_with_transform(mt);
  IntMatrix out(n - t.rank, n);
  for (std::size_t i = t.rank; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i - t.rank, j) = t.u(i, j);
  return out;
}

IntMatrix saturate(const IntMatrix& m) { return hnf(int_kernel(int_kernel(m))); }

}  // namespace vexillar

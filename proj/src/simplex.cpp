#include "vexillar/simplex.hpp"

#include <stdexcept>

namespace vexillar {

namespace {

// Dense tableau: rows 0..m-1 are constraints, row m is the objective in the
// form z - sum(reduced costs) = -value; column n is the right-hand side.
struct Tableau {
  std::size_t m, n;
  std::vector<std::vector<Rat>> t;  // (m + 1) x (n + 1)
  std::vector<std::size_t> basis;   // basic variable of each row

  Tableau(std::size_t m_, std::size_t n_)
      : m(m_), n(n_), t(m_ + 1, std::vector<Rat>(n_ + 1, Rat(0))), basis(m_) {}

  void pivot(std::size_t r, std::size_t c) {
    const Rat p = t[r][c];
    for (auto& e : t[r]) e /= p;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == r || t[i][c] == 0) continue;
      const Rat f = t[i][c];
      for (std::size_t j = 0; j <= n; ++j) t[i][j] -= f * t[r][j];
    }
    basis[r] = c;
  }

  // Bland's rule: entering = lowest-index column with positive reduced cost
  // (we store the objective row negated, so "improving" means t[m][j] < 0);
  // leaving = row of minimum ratio, ties by lowest basic variable index.
  // Returns false at optimality, throws on an unbounded ray.
  bool step() {
    std::size_t enter = n;
    for (std::size_t j = 0; j < n; ++j)
      if (t[m][j] < 0) {
        enter = j;
        break;
      }
    if (enter == n) return false;
    std::size_t leave = m;
    Rat best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = t[i][n] / t[i][enter];
      if (leave == m || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) throw LpStatus::kUnbounded;
    pivot(leave, enter);
    return true;
  }

  void run() {
    while (step()) {
    }
  }
};

}  // namespace

LpResult lp_maximize(const RatMatrix& a, const std::vector<Rat>& b,
                     const std::vector<Rat>& c) {
  const std::size_t m = a.rows(), n = a.cols();
  if (b.size() != m || c.size() != n)
    throw std::invalid_argument("lp_maximize: dimension mismatch");

  // Phase 1: minimize the sum of artificial variables.
  Tableau t1(m, n + m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool neg = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t1.t[i][j] = neg ? -a(i, j) : a(i, j);
    t1.t[i][n + i] = 1;
    t1.t[i][n + m] = neg ? -b[i] : b[i];
    t1.basis[i] = n + i;
  }
  // Objective row for maximize(-sum artificials): price out the basis.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n + m; ++j)
      if (j < n || j == n + m) t1.t[m][j] -= t1.t[i][j];
  t1.run();

  LpResult out;
  if (t1.t[m][n + m] != 0) {
    out.status = LpStatus::kInfeasible;
    return out;
  }
  // Drive leftover artificials out of the basis; a row with no real pivot
  // candidate is a redundant constraint and is cleared.
  std::vector<bool> dead(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    if (t1.basis[i] < n) continue;
    std::size_t c2 = n;
    for (std::size_t j = 0; j < n; ++j)
      if (t1.t[i][j] != 0) {
        c2 = j;
        break;
      }
    if (c2 < n)
      t1.pivot(i, c2);
    else
      dead[i] = true;
  }

  // Phase 2: real objective on the feasible tableau, artificials frozen.
  Tableau t2(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t2.t[i][j] = t1.t[i][j];
    t2.t[i][n] = t1.t[i][n + m];
    t2.basis[i] = dead[i] ? n : t1.basis[i];
  }
  for (std::size_t j = 0; j < n; ++j) t2.t[m][j] = -c[j];
  for (std::size_t i = 0; i < m; ++i) {
    if (t2.basis[i] >= n) continue;
    const Rat f = t2.t[m][t2.basis[i]];
    if (f == 0) continue;
    for (std::size_t j = 0; j <= n; ++j) t2.t[m][j] -= f * t2.t[i][j];
  }
  try {
    t2.run();
  } catch (LpStatus s) {
    out.status = s;
    return out;
  }
  out.status = LpStatus::kOptimal;
  out.objective = t2.t[m][n];
  out.x.assign(n, Rat(0));
  for (std::size_t i = 0; i < m; ++i)
    if (t2.basis[i] < n) out.x[t2.basis[i]] = t2.t[i][n];
  return out;
}

}  // namespace vexillar

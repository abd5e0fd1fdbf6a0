#include "vexillar/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "vexillar/matrix.hpp"

namespace vexillar {

Polynomial Polynomial::constant(const Rat& c) {
  Polynomial p;
  p.add_term(Monomial{}, c);
  return p;
}

Polynomial Polynomial::variable(unsigned i, unsigned j) {
  Polynomial p;
  p.add_term(Monomial{{{i, j}, 1u}}, Rat(1));
  return p;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& [mono, coeff] : terms_) {
    unsigned t = 0;
    for (const auto& [var, e] : mono) t += e;
    d = std::max(d, t);
  }
  return d;
}

void Polynomial::add_term(const Monomial& mono, const Rat& coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_.emplace(mono, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  Polynomial out = *this;
  for (const auto& [mono, coeff] : rhs.terms_) out.add_term(mono, coeff);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  Polynomial out = *this;
  for (const auto& [mono, coeff] : rhs.terms_) out.add_term(mono, -coeff);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  Polynomial out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      Monomial prod = ma;
      for (const auto& [var, e] : mb) prod[var] += e;
      out.add_term(prod, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::scaled(const Rat& c) const {
  Polynomial out;
  if (c == 0) return out;
  for (const auto& [mono, coeff] : terms_) out.add_term(mono, coeff * c);
  return out;
}

Rat scalar_product(const Polynomial& f, const Polynomial& g) {
  Rat s = 0;
  const auto& a = f.terms();
  const auto& b = g.terms();
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      Int num = 1;
      unsigned long total = 0;
      for (const auto& [var, e] : ia->first) {
        num *= factorial(e);
        total += e;
      }
      s += ia->second * ib->second * Rat(num) / Rat(factorial(total));
      ++ia;
      ++ib;
    }
  }
  return s;
}

namespace {

// Leibniz expansion of det(x_{rows[p], cols[q]})_{p,q}.
Polynomial symbolic_minor(const std::vector<int>& rows,
                          const std::vector<int>& cols) {
  const std::size_t k = rows.size();
  std::vector<std::size_t> perm(k);
  for (std::size_t i = 0; i < k; ++i) perm[i] = i;
  Polynomial out;
  do {
    int sign = 1;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    Monomial mono;
    for (std::size_t i = 0; i < k; ++i)
      ++mono[{static_cast<unsigned>(rows[i]),
              static_cast<unsigned>(cols[perm[i]])}];
    out.add_term(mono, Rat(sign));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

Polynomial det_monomial(const Bitableau& b, unsigned n, unsigned m) {
  if (!b.same_shape())
    throw std::invalid_argument("det_monomial: shapes differ");
  const Partition cols_shape = b.left.shape().transpose();
  Polynomial out = Polynomial::constant(Rat(1));
  for (std::size_t c = 0; c < cols_shape.depth(); ++c) {
    const std::vector<int> rows = b.left.column(c);
    const std::vector<int> cols = b.right.column(c);
    for (int r : rows)
      if (r < 1 || static_cast<unsigned>(r) > n)
        throw std::out_of_range("det_monomial: left entry out of range");
    for (int cc : cols)
      if (cc < 1 || static_cast<unsigned>(cc) > m)
        throw std::out_of_range("det_monomial: right entry out of range");
    out = out * symbolic_minor(rows, cols);
  }
  return out;
}

namespace {

void partitions_rec(unsigned remaining, unsigned max_part,
                    std::vector<unsigned>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(unsigned d) {
  std::vector<Partition> out;
  std::vector<unsigned> cur;
  partitions_rec(d, d == 0 ? 1 : d, cur, out);
  return out;
}

bool standard_monomials_independent(unsigned degree, unsigned n, unsigned m,
                                    unsigned max_degree_guard,
                                    unsigned max_dim_guard) {
  if (degree > max_degree_guard || n > max_dim_guard || m > max_dim_guard)
    throw std::invalid_argument(
        "standard_monomials_independent: size guard exceeded");
  std::vector<Polynomial> expansions;
  for (const Partition& sigma : partitions_of(degree)) {
    if (sigma.depth() > 0 && sigma.transpose().part(1) > std::min(n, m))
      continue;  // a column longer than min(n,m) admits no standard filling
    const auto lefts = standard_tableaux(sigma, static_cast<int>(n));
    const auto rights = standard_tableaux(sigma, static_cast<int>(m));
    for (const Tableau& tl : lefts)
      for (const Tableau& tr : rights)
        expansions.push_back(det_monomial({tl, tr}, n, m));
  }
  // Exact rank of the coefficient matrix.
  std::map<Monomial, std::size_t> col_of;
  for (const Polynomial& p : expansions)
    for (const auto& [mono, coeff] : p.terms())
      col_of.emplace(mono, col_of.size());
  RatMatrix mat(expansions.size(), col_of.size());
  for (std::size_t i = 0; i < expansions.size(); ++i)
    for (const auto& [mono, coeff] : expansions[i].terms())
      mat(i, col_of[mono]) = coeff;
  return rank(mat) == expansions.size();
}

}  // namespace vexillar

#include "vexillar/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <map>

namespace vexillar {

Lattice::Lattice(IntMatrix gram, std::string name)
    : gram_(std::move(gram)), name_(std::move(name)), min_norm_(0) {
  if (gram_.rows() != gram_.cols())
    throw std::invalid_argument("Lattice: Gram matrix not square");
  const RatMatrix g = gram_.to_rational();
  if (!g.is_symmetric())
    throw std::invalid_argument("Lattice: Gram matrix not symmetric");
  ldl(g);  // throws when not positive definite
  const Rat d = det(g);
  det_ = d.get_num();
}

Weight::Weight(Partition l, unsigned ambient_dim) : lambda(std::move(l)) {
  if (lambda.depth() == 0)
    throw std::invalid_argument("Weight: empty partition");
  if (lambda.depth() >= ambient_dim)
    throw std::invalid_argument("Weight: depth must be < n");
  ranks = lambda.transpose().parts();
}

Rat hermite_power(unsigned k) {
  switch (k) {
    case 1: return Rat(1);
    case 2: return Rat(4, 3);
    case 3: return Rat(2);
    case 4: return Rat(4);
    case 5: return Rat(8);
    case 6: return Rat(64, 3);
    case 7: return Rat(64);
    case 8: return Rat(256);
    default:
      throw std::invalid_argument("hermite_power: only k <= 8 supported");
  }
}

// ---------------------------------------------------------------------------
// LLL on the Gram matrix, exact arithmetic, delta = 3/4.

namespace {

struct Gso {
  std::vector<std::vector<Rat>> mu;  // mu[i][j], j < i
  std::vector<Rat> b;                // squared GSO norms
};

Gso compute_gso(const RatMatrix& g) {
  const std::size_t n = g.rows();
  Gso out;
  out.mu.assign(n, std::vector<Rat>(n, Rat(0)));
  out.b.assign(n, Rat(0));
  std::vector<std::vector<Rat>> r(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      Rat v = g(i, j);
      for (std::size_t k = 0; k < j; ++k) v -= out.mu[j][k] * r[i][k];
      r[i][j] = v;
      if (j < i) out.mu[i][j] = v / out.b[j];
    }
    out.b[i] = r[i][i];
  }
  return out;
}

Int round_nearest(const Rat& q) {
  Rat shifted = q + Rat(1, 2);
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), shifted.get_num().get_mpz_t(),
             shifted.get_den().get_mpz_t());
  return f;
}

}  // namespace

LllResult lll_reduce_gram(const IntMatrix& gram) {
  const std::size_t n = gram.rows();
  IntMatrix u = IntMatrix::identity(n);
  IntMatrix g0 = gram;
  auto current_gram = [&]() {
    RatMatrix ur = u.to_rational();
    return ur * g0.to_rational() * ur.transpose();
  };
  auto row_sub = [&](std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t j = 0; j < n; ++j) u(dst, j) -= q * u(src, j);
  };
  auto row_swap = [&](std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < n; ++j) std::swap(u(a, j), u(b, j));
  };

  RatMatrix g = current_gram();
  Gso gso = compute_gso(g);
  const Rat delta(3, 4);
  std::size_t k = 1;
  while (k < n) {
    bool changed = false;
    for (std::size_t j = k; j-- > 0;) {
      const Int q = round_nearest(gso.mu[k][j]);
      if (q != 0) {
        row_sub(k, j, q);
        changed = true;
      }
    }
    if (changed) {
      g = current_gram();
      gso = compute_gso(g);
    }
    const Rat lhs = gso.b[k];
    const Rat rhs =
        (delta - gso.mu[k][k - 1] * gso.mu[k][k - 1]) * gso.b[k - 1];
    if (lhs >= rhs) {
      ++k;
    } else {
      row_swap(k, k - 1);
      g = current_gram();
      gso = compute_gso(g);
      k = k > 1 ? k - 1 : 1;
    }
  }
  RatMatrix gfinal = current_gram();
  IntMatrix gi(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gi(i, j) = gfinal(i, j).get_num();
  return {std::move(gi), std::move(u)};
}

// ---------------------------------------------------------------------------
// Fincke-Pohst enumeration.

namespace {

class Enumerator {
 public:
  Enumerator(const RatMatrix& l, const std::vector<Rat>& d, const Rat& bound,
             std::uint64_t node_budget, unsigned part = 0, unsigned parts = 1)
      : n_(d.size()), l_(l), d_(d), bound_(bound), budget_(node_budget),
        part_(part), parts_(parts) {
    cs_.assign(n_ + 1, std::vector<Rat>(n_, Rat(0)));
    x_.assign(n_, 0);
  }

  // Collected coordinate vectors (w.r.t. the reduced basis) with norms.
  std::vector<std::pair<std::vector<long>, Rat>> run() {
    descend(static_cast<long>(n_) - 1, bound_, true);
    return std::move(found_);
  }

 private:
  void bump() {
    ++nodes_;
    if (budget_ && nodes_ > budget_)
      throw BudgetExceeded("short vector enumeration budget exceeded");
  }

  // Integer range with (x + c)^2 <= t; double guess fixed up exactly.
  std::pair<long, long> range(const Rat& c, const Rat& t) const {
    const double cd = -c.get_d();
    const double sd = std::sqrt(std::max(0.0, t.get_d()));
    long lo = static_cast<long>(std::floor(cd - sd)) - 1;
    long hi = static_cast<long>(std::ceil(cd + sd)) + 1;
    auto inside = [&](long x) {
      Rat v = Rat(x) + c;
      return v * v <= t;
    };
    while (lo <= hi && !inside(lo)) ++lo;
    while (hi >= lo && !inside(hi)) --hi;
    if (lo <= hi) {
      while (inside(lo - 1)) --lo;
      while (inside(hi + 1)) ++hi;
    }
    return {lo, hi};
  }

  void descend(long lvl, const Rat& remaining, bool all_zero) {
    bump();
    if (lvl < 0) {
      if (!all_zero) found_.emplace_back(x_, bound_ - remaining);
      return;
    }
    const std::size_t ul = static_cast<std::size_t>(lvl);
    const Rat& c = cs_[ul + 1][ul];
    const Rat t = remaining / d_[ul];
    auto [lo, hi] = range(c, t);
    if (all_zero && lo < 0) lo = 0;
    Rat v, val, rem2;
    for (long x = lo; x <= hi; ++x) {
      // Workers split the top-level values round-robin.
      if (parts_ > 1 && ul + 1 == n_ &&
          static_cast<unsigned long>(x - lo) % parts_ != part_)
        continue;
      x_[ul] = x;
      v = Rat(x) + c;
      val = d_[ul] * v * v;
      rem2 = remaining - val;
      for (std::size_t i = 0; i < ul; ++i) {
        cs_[ul][i] = cs_[ul + 1][i];
        if (x != 0) cs_[ul][i] += l_(ul, i) * Rat(x);
      }
      descend(lvl - 1, rem2, all_zero && x == 0);
    }
    x_[ul] = 0;
  }

  std::size_t n_;
  const RatMatrix& l_;
  const std::vector<Rat>& d_;
  Rat bound_;
  std::uint64_t budget_;
  unsigned part_;
  unsigned parts_;
  std::uint64_t nodes_ = 0;
  std::vector<std::vector<Rat>> cs_;
  std::vector<long> x_;
  std::vector<std::pair<std::vector<long>, Rat>> found_;
};

}  // namespace

Int Lattice::min_norm() const {
  if (min_norm_ != 0) return min_norm_;
  // Upper bound from the reduced diagonal, then a tight enumeration.
  const LllResult red = lll_reduce_gram(gram_);
  Int ub = red.gram(0, 0);
  for (std::size_t i = 1; i < red.gram.rows(); ++i)
    ub = std::min(ub, red.gram(i, i));
  const auto vecs = short_vectors(*this, ub);
  Int best = ub;
  for (const auto& v : vecs) best = std::min(best, v.norm);
  min_norm_ = best;
  return min_norm_;
}

std::vector<ShortVector> short_vectors(const Lattice& l, const Int& bound,
                                       std::uint64_t node_budget,
                                       unsigned threads) {
  if (bound <= 0) throw std::invalid_argument("short_vectors: bound <= 0");
  if (threads == 0) threads = 1;
  const LllResult red = lll_reduce_gram(l.gram());
  const LdlResult f = ldl(red.gram.to_rational());
  std::vector<std::pair<std::vector<long>, Rat>> raw;
  if (threads == 1) {
    Enumerator en(f.l, f.diag, Rat(bound), node_budget);
    raw = en.run();
  } else {
    using Part = std::vector<std::pair<std::vector<long>, Rat>>;
    std::vector<std::future<Part>> futs;
    for (unsigned tid = 0; tid < threads; ++tid)
      futs.push_back(std::async(std::launch::async, [&, tid]() {
        Enumerator en(f.l, f.diag, Rat(bound), node_budget, tid, threads);
        return en.run();
      }));
    for (auto& fu : futs) {
      Part p = fu.get();  // rethrows budget trips
      raw.insert(raw.end(), std::make_move_iterator(p.begin()),
                 std::make_move_iterator(p.end()));
    }
  }
  const std::size_t n = l.dim();
  std::vector<ShortVector> out;
  out.reserve(raw.size());
  for (auto& [coords, norm] : raw) {
    // Map back to the original basis: orig = x * U.
    std::vector<Int> orig(n, Int(0));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i)
        orig[j] += Int(coords[i]) * red.transform(i, j);
    // Canonical sign: first nonzero coordinate positive.
    for (std::size_t j = 0; j < n; ++j) {
      if (orig[j] == 0) continue;
      if (orig[j] < 0)
        for (auto& c : orig) c = -c;
      break;
    }
    if (norm.get_den() != 1)
      throw std::logic_error("short_vectors: non-integral norm");
    out.push_back(ShortVector{std::move(orig), norm.get_num()});
  }
  std::sort(out.begin(), out.end(), [](const ShortVector& a,
                                       const ShortVector& b) {
    if (a.norm != b.norm) return a.norm < b.norm;
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
      const int c = cmp(a.coords[i], b.coords[i]);
      if (c != 0) return c < 0;
    }
    return false;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Sublattice enumeration.

namespace {

Int sublattice_det(const IntMatrix& basis, const IntMatrix& gram) {
  const RatMatrix b = basis.to_rational();
  const Rat d = det(b * gram.to_rational() * b.transpose());
  if (d.get_den() != 1)
    throw std::logic_error("sublattice_det: non-integral determinant");
  return d.get_num();
}

}  // namespace

std::vector<Sublattice> sublattices_upto(const Lattice& l, unsigned k,
                                         const Int& det_bound,
                                         std::uint64_t node_budget) {
  if (k == 0 || k >= l.dim())
    throw std::invalid_argument("sublattices_upto: need 1 <= k < n");
  if (det_bound <= 0) return {};
  const Int minn = l.min_norm();

  // Minkowski search bound: a reduced basis of a target sublattice has
  // prod ||b_i||^2 <= sigma_k gamma_k^k det, every factor >= min(L); the
  // sigma_k slack covers reduced-basis vs successive-minima gaps for k >= 5.
  Rat slack(1);
  if (k >= 5) {
    for (unsigned i = 0; i < k * (k - 4); ++i) slack *= Rat(5, 4);
  }
  Rat norm_cap_r = slack * hermite_power(k) * Rat(det_bound);
  for (unsigned i = 0; i + 1 < k; ++i) norm_cap_r /= Rat(minn);
  Int norm_cap;
  mpz_fdiv_q(norm_cap.get_mpz_t(), norm_cap_r.get_num().get_mpz_t(),
             norm_cap_r.get_den().get_mpz_t());
  if (norm_cap < minn) return {};

  const auto cands = short_vectors(l, norm_cap, node_budget);
  const std::size_t nc = cands.size();
  const std::size_t n = l.dim();

  std::map<IntMatrix, Int> seen;
  std::uint64_t nodes = 0;

  // DFS over index-increasing subsets; candidate list is sorted by norm, so
  // chosen norms are non-decreasing like a reduced basis.
  std::vector<std::size_t> pick;
  std::vector<std::vector<Rat>> echelon;  // span of picked vectors, reduced

  auto reduce_against = [&](std::vector<Rat> v) {
    for (const auto& e : echelon) {
      std::size_t piv = 0;
      while (piv < e.size() && e[piv] == 0) ++piv;
      if (piv < e.size() && v[piv] != 0) {
        const Rat f = v[piv];
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= f * e[i];
      }
    }
    return v;
  };

  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (node_budget && ++nodes > node_budget)
      throw BudgetExceeded("sublattice enumeration budget exceeded");
    if (pick.size() == k) {
      IntMatrix basis(k, n);
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < n; ++c)
          basis(r, c) = cands[pick[r]].coords[c];
      const Int d = sublattice_det(basis, l.gram());
      if (d > det_bound) return;
      IntMatrix sat = saturate(basis);
      const Int dsat = sublattice_det(sat, l.gram());
      if (dsat <= det_bound) seen.emplace(std::move(sat), dsat);
      return;
    }
    for (std::size_t i = start; i < nc; ++i) {
      std::vector<Rat> v(n);
      for (std::size_t c = 0; c < n; ++c) v[c] = Rat(cands[i].coords[c]);
      v = reduce_against(std::move(v));
      std::size_t piv = 0;
      while (piv < n && v[piv] == 0) ++piv;
      if (piv == n) continue;  // dependent
      const Rat lead = v[piv];
      for (auto& e : v) e /= lead;
      echelon.push_back(std::move(v));
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
      echelon.pop_back();
    }
  };
  rec(0);

  std::vector<Sublattice> out;
  out.reserve(seen.size());
  for (auto& [basis, d] : seen) out.push_back(Sublattice{basis, d});
  return out;
}

// ---------------------------------------------------------------------------
// Minimal flags.

namespace {

// det(Lambda) >= min(L)^r / gamma_r^r for a rank-r sublattice.
Rat rank_det_lower_bound(const Int& minn, unsigned r) {
  Rat lb(1);
  for (unsigned i = 0; i < r; ++i) lb *= Rat(minn);
  lb /= hermite_power(r);
  if (lb < 1) lb = 1;
  return lb;
}

bool spans_contain(const IntMatrix& big, const IntMatrix& small) {
  // Q-span containment; for saturated sublattices this is containment.
  IntMatrix stacked(big.rows() + small.rows(), big.cols());
  for (std::size_t i = 0; i < big.rows(); ++i)
    for (std::size_t j = 0; j < big.cols(); ++j) stacked(i, j) = big(i, j);
  for (std::size_t i = 0; i < small.rows(); ++i)
    for (std::size_t j = 0; j < big.cols(); ++j)
      stacked(big.rows() + i, j) = small(i, j);
  return rank(stacked.to_rational()) == big.rows();
}

}  // namespace

double GammaValue::approx() const {
  return num.get_d() / std::pow(den.get_d(), exponent.get_d());
}

MinimalFlagsResult minimal_flags(const Lattice& l, const Weight& w,
                                 std::uint64_t node_budget) {
  const unsigned n = l.dim();
  for (unsigned r : w.ranks)
    if (r >= n) throw std::invalid_argument("minimal_flags: rank >= n");

  // Distinct ranks descending with multiplicities.
  std::vector<unsigned> ranks;     // distinct, descending
  std::vector<unsigned> mult;
  for (unsigned r : w.ranks) {
    if (!ranks.empty() && ranks.back() == r)
      ++mult.back();
    else {
      ranks.push_back(r);
      mult.push_back(1);
    }
  }
  const std::size_t q = ranks.size();
  const Int minn = l.min_norm();

  // Incumbent chain from the prefixes of an LLL-reduced basis.
  const LllResult red = lll_reduce_gram(l.gram());
  Rat incumbent(1);
  for (std::size_t s = 0; s < q; ++s) {
    IntMatrix prefix(ranks[s], n);
    for (unsigned i = 0; i < ranks[s]; ++i)
      for (unsigned j = 0; j < n; ++j) prefix(i, j) = red.transform(i, j);
    const Int d = sublattice_det(prefix, l.gram());
    for (unsigned m = 0; m < mult[s]; ++m) incumbent *= Rat(d);
  }

  // Candidate sets, complete for any chain with product <= incumbent.
  std::vector<std::vector<Sublattice>> cands(q);
  for (std::size_t s = 0; s < q; ++s) {
    Rat others(1);
    for (std::size_t s2 = 0; s2 < q; ++s2) {
      if (s2 == s) continue;
      for (unsigned m = 0; m < mult[s2]; ++m)
        others *= rank_det_lower_bound(minn, ranks[s2]);
    }
    for (unsigned m = 0; m + 1 < mult[s]; ++m)
      others *= rank_det_lower_bound(minn, ranks[s]);
    Rat cap = incumbent / others;
    Int capi;
    mpz_fdiv_q(capi.get_mpz_t(), cap.get_num().get_mpz_t(),
               cap.get_den().get_mpz_t());
    cands[s] = sublattices_upto(l, ranks[s], capi, node_budget);
    std::sort(cands[s].begin(), cands[s].end(),
              [](const Sublattice& a, const Sublattice& b) {
                if (a.det != b.det) return a.det < b.det;
                return a.basis < b.basis;
              });
  }

  // Branch and bound over nested chains, collecting every chain that
  // achieves the running minimum.
  Rat best = incumbent;
  std::vector<std::vector<const Sublattice*>> winners;
  std::vector<const Sublattice*> current;
  std::uint64_t nodes = 0;

  std::function<void(std::size_t, const Rat&)> rec = [&](std::size_t s,
                                                         const Rat& prod) {
    if (node_budget && ++nodes > node_budget)
      throw BudgetExceeded("minimal flag search budget exceeded");
    if (s == q) {
      if (prod < best) {
        best = prod;
        winners.clear();
      }
      if (prod == best) winners.push_back(current);
      return;
    }
    Rat tail(1);
    for (std::size_t s2 = s + 1; s2 < q; ++s2)
      for (unsigned m = 0; m < mult[s2]; ++m)
        tail *= rank_det_lower_bound(minn, ranks[s2]);
    for (const Sublattice& cand : cands[s]) {
      Rat p = prod;
      for (unsigned m = 0; m < mult[s]; ++m) p *= Rat(cand.det);
      if (p * tail > best) break;  // dets ascend, nothing better follows
      if (s > 0 && !spans_contain(current.back()->basis, cand.basis))
        continue;
      current.push_back(&cand);
      rec(s + 1, p);
      current.pop_back();
    }
  };
  rec(0, Rat(1));

  MinimalFlagsResult out;
  for (const auto& chain : winners) {
    LatticeFlag f;
    for (std::size_t s = 0; s < q; ++s)
      for (unsigned m = 0; m < mult[s]; ++m) f.chain.push_back(*chain[s]);
    out.flags.push_back(std::move(f));
  }
  if (best.get_den() != 1)
    throw std::logic_error("minimal_flags: non-integral determinant product");
  out.gamma.num = best.get_num();
  out.gamma.den = l.determinant();
  out.gamma.exponent = Rat(w.degree()) / Rat(n);
  return out;
}

}  // namespace vexillar

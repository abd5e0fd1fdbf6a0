#include "vexillar/design.hpp"

#include <future>
#include <stdexcept>

namespace vexillar {

FlagSet::FlagSet(std::vector<Flag> flags) : flags_(std::move(flags)) {
  if (flags_.empty()) throw std::invalid_argument("FlagSet: empty");
  for (const Flag& f : flags_)
    if (!(f.shape() == flags_.front().shape()))
      throw std::invalid_argument("FlagSet: mixed shapes");
  const Rat w = Rat(1) / Rat(static_cast<unsigned long>(flags_.size()));
  weights_.assign(flags_.size(), w);
}

FlagSet::FlagSet(std::vector<Flag> flags, std::vector<Rat> weights)
    : flags_(std::move(flags)), weights_(std::move(weights)) {
  if (flags_.empty()) throw std::invalid_argument("FlagSet: empty");
  if (weights_.size() != flags_.size())
    throw std::invalid_argument("FlagSet: weight count mismatch");
  Rat total = 0;
  for (const Rat& w : weights_) {
    if (w <= 0) throw std::invalid_argument("FlagSet: weights must be positive");
    total += w;
  }
  if (total != 1) throw std::invalid_argument("FlagSet: weights must sum to 1");
  for (const Flag& f : flags_)
    if (!(f.shape() == flags_.front().shape()))
      throw std::invalid_argument("FlagSet: mixed shapes");
}

RatMatrix haar_moment2(unsigned n, unsigned d) {
  if (d == 0 || d >= n) throw std::invalid_argument("haar_moment2: need 1 <= d < n");
  return RatMatrix::identity(n).scaled(Rat(d) / Rat(n));
}

Moment4 haar_moment4(unsigned n, unsigned d, unsigned d2) {
  if (d >= n || d2 >= n || d == 0 || d2 == 0)
    throw std::invalid_argument("haar_moment4: need 1 <= d, d' < n");
  const unsigned mn = d < d2 ? d : d2;
  const Rat kappa = Rat(n) * Rat(mn) - Rat(d) * Rat(d2);
  const Rat b = kappa / (Rat(n) * Rat(n - 1) * Rat(n + 2));
  const Rat a = (Rat(d) * Rat(d2) - 2 * b * Rat(n)) / (Rat(n) * Rat(n));
  return {a, b};
}

namespace {

std::optional<DesignFailure> check_degree2(const FlagSet& ds) {
  const unsigned n = ds.shape().ambient;
  for (std::size_t lvl = 0; lvl < ds.shape().levels(); ++lvl) {
    RatMatrix mean(n, n);
    for (std::size_t k = 0; k < ds.size(); ++k)
      mean = mean + ds.flags()[k].projector(lvl).scaled(ds.weights()[k]);
    const Rat diag = Rat(ds.shape().dims[lvl]) / Rat(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Rat expected = i == j ? diag : Rat(0);
        if (mean(i, j) != expected)
          return DesignFailure{2, lvl, lvl, {i, j}, mean(i, j), expected};
      }
  }
  return std::nullopt;
}

std::optional<DesignFailure> check_degree4(const FlagSet& ds) {
  const unsigned n = ds.shape().ambient;
  const std::size_t levels = ds.shape().levels();
  for (std::size_t l1 = 0; l1 < levels; ++l1) {
    for (std::size_t l2 = l1; l2 < levels; ++l2) {
      const Moment4 m = haar_moment4(n, ds.shape().dims[l1],
                                     ds.shape().dims[l2]);
      // Accumulate the mean of P_l1 (x) P_l2 as an n^2 x n^2 table.
      std::vector<Rat> tensor(static_cast<std::size_t>(n) * n * n * n, Rat(0));
      auto at = [n](std::size_t i, std::size_t j, std::size_t k,
                    std::size_t l) {
        return ((i * n + j) * n + k) * n + l;
      };
      for (std::size_t s = 0; s < ds.size(); ++s) {
        const RatMatrix& p = ds.flags()[s].projector(l1);
        const RatMatrix& q = ds.flags()[s].projector(l2);
        const Rat& w = ds.weights()[s];
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            if (p(i, j) == 0) continue;
            const Rat wp = w * p(i, j);
            for (std::size_t k = 0; k < n; ++k)
              for (std::size_t l = 0; l < n; ++l) {
                if (q(k, l) == 0) continue;
                tensor[at(i, j, k, l)] += wp * q(k, l);
              }
          }
      }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l) {
              Rat expected = 0;
              if (i == j && k == l) expected += m.a;
              if (i == k && j == l) expected += m.b;
              if (i == l && j == k) expected += m.b;
              const Rat& actual = tensor[at(i, j, k, l)];
              if (actual != expected)
                return DesignFailure{4, l1, l2, {i, j, k, l}, actual,
                                     expected};
            }
    }
  }
  return std::nullopt;
}

}  // namespace

DesignCertificate is_design(const FlagSet& d, unsigned t) {
  if (t < 1 || t > 5) throw std::invalid_argument("is_design: t in 1..5");
  DesignCertificate cert;
  cert.strength_requested = t;
  cert.strength_verified = 1;  // no odd invariants at degree 1
  cert.pass = true;
  cert.odd_collapse_used = (t == 3 || t == 5);
  if (t >= 2) {
    if (auto fail = check_degree2(d)) {
      cert.pass = false;
      cert.failure = fail;
      return cert;
    }
    cert.strength_verified = 3;  // degree-3 invariants vanish as well
  }
  if (t >= 4) {
    if (auto fail = check_degree4(d)) {
      cert.pass = false;
      cert.failure = fail;
      return cert;
    }
    cert.strength_verified = 5;
  }
  if (cert.strength_verified > t) cert.strength_verified = t;
  return cert;
}

Rat sphere_moment(unsigned n, unsigned t) {
  if (t == 0 || t % 2 != 0)
    throw std::invalid_argument("sphere_moment: t must be even and positive");
  Rat m = 1;
  for (unsigned i = 1, j = 0; i + 1 <= t; i += 2, j += 2)
    m *= Rat(i) / Rat(n + j);
  return m;
}

bool sphere_pair_sum_test(const std::vector<std::vector<Int>>& vectors,
                          const IntMatrix& gram, unsigned t, bool half_set,
                          unsigned threads) {
  if (t == 0 || t % 2 != 0)
    throw std::invalid_argument("sphere_pair_sum_test: t must be even");
  if (threads == 0) threads = 1;
  if (vectors.empty())
    throw std::invalid_argument("sphere_pair_sum_test: empty set");
  const std::size_t n = gram.rows();
  auto gmul = [&](const std::vector<Int>& v) {
    std::vector<Int> w(n, Int(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) w[i] += gram(i, j) * v[j];
    return w;
  };
  auto dot = [&](const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s = 0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
  };
  std::vector<std::vector<Int>> gw;
  gw.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != n)
      throw std::invalid_argument("sphere_pair_sum_test: dim mismatch");
    gw.push_back(gmul(v));
  }
  const Int norm2 = dot(vectors[0], gw[0]);
  for (std::size_t i = 1; i < vectors.size(); ++i)
    if (dot(vectors[i], gw[i]) != norm2)
      throw std::invalid_argument("sphere_pair_sum_test: unequal norms");

  // Fast path: small entries keep every product inside 64/128 bits.
  const Int entry_cap = Int(1) << 20;
  auto small_int = [&entry_cap](const Int& c) { return abs(c) < entry_cap; };
  bool small = small_int(norm2) && n < (1u << 20);
  if (small) {
    // The whole pair sum must fit in 128 bits: |sum| <= N^2 * norm2^t.
    const std::size_t bits_norm = mpz_sizeinbase(norm2.get_mpz_t(), 2);
    std::size_t bits_n = 0;
    for (std::size_t c = vectors.size(); c; c >>= 1) ++bits_n;
    if (t * bits_norm + 2 * bits_n + 4 >= 126) small = false;
  }
  if (small) {
    for (const auto& w : gw)
      for (const Int& c : w)
        if (!small_int(c)) { small = false; break; }
    for (const auto& v : vectors)
      for (const Int& c : v)
        if (!small_int(c)) { small = false; break; }
  }

  Int total = 0;
  if (small) {
    std::vector<std::vector<long>> vs, ws;
    vs.reserve(vectors.size());
    ws.reserve(gw.size());
    for (const auto& v : vectors) {
      std::vector<long> r(n);
      for (std::size_t i = 0; i < n; ++i) r[i] = v[i].get_si();
      vs.push_back(std::move(r));
    }
    for (const auto& w : gw) {
      std::vector<long> r(n);
      for (std::size_t i = 0; i < n; ++i) r[i] = w[i].get_si();
      ws.push_back(std::move(r));
    }
    // |x.y| <= norm2, so powers stay small; partial sums use 128 bits.
    // The pair matrix is symmetric, so only i <= j is visited. Workers take
    // rows round-robin; integer addition keeps the total thread-invariant.
    auto rows = [&](unsigned part, unsigned parts) {
      __int128 off_diag = 0, diag = 0;
      for (std::size_t i = part; i < vs.size(); i += parts) {
        __int128 partial = 0;
        const long* vi = vs[i].data();
        for (std::size_t j = i + 1; j < ws.size(); ++j) {
          const long* wj = ws[j].data();
          long long d = 0;
          for (std::size_t k = 0; k < n; ++k) d += vi[k] * wj[k];
          __int128 p = d;
          for (unsigned e = 1; e < t; ++e) p *= d;
          partial += p;
        }
        off_diag += partial;
        long long d = 0;
        const long* wi = ws[i].data();
        for (std::size_t k = 0; k < n; ++k) d += vi[k] * wi[k];
        __int128 p = d;
        for (unsigned e = 1; e < t; ++e) p *= d;
        diag += p;
      }
      return std::pair<__int128, __int128>{off_diag, diag};
    };
    __int128 off_diag = 0, diag = 0;
    if (threads == 1) {
      const auto pr = rows(0, 1);
      off_diag = pr.first;
      diag = pr.second;
    } else {
      std::vector<std::future<std::pair<__int128, __int128>>> futs;
      for (unsigned tid = 0; tid < threads; ++tid)
        futs.push_back(std::async(std::launch::async, rows, tid, threads));
      for (auto& fu : futs) {
        auto [o, d] = fu.get();
        off_diag += o;
        diag += d;
      }
    }
    const __int128 grand = 2 * off_diag + diag;
    // Fold the 128-bit total into an mpz.
    const bool neg = grand < 0;
    unsigned __int128 mag =
        neg ? static_cast<unsigned __int128>(-grand)
            : static_cast<unsigned __int128>(grand);
    Int hi(static_cast<unsigned long>(mag >> 64));
    Int lo(static_cast<unsigned long>(mag & 0xffffffffffffffffULL));
    total = (hi << 64) + lo;
    if (neg) total = -total;
  } else {
    auto rows = [&](unsigned part, unsigned parts) {
      Int sum = 0;
      for (std::size_t i = part; i < vectors.size(); i += parts) {
        for (std::size_t j = 0; j < vectors.size(); ++j) {
          Int d = dot(vectors[i], gw[j]);
          Int p = d;
          for (unsigned e = 1; e < t; ++e) p *= d;
          sum += p;
        }
      }
      return sum;
    };
    if (threads == 1) {
      total = rows(0, 1);
    } else {
      std::vector<std::future<Int>> futs;
      for (unsigned tid = 0; tid < threads; ++tid)
        futs.push_back(std::async(std::launch::async, rows, tid, threads));
      for (auto& fu : futs) total += fu.get();
    }
  }

  Int count(static_cast<unsigned long>(vectors.size()));
  if (half_set) {
    total *= 4;  // (+-x, +-y) all contribute equally at even t
    count *= 2;
  }
  const Rat mt = sphere_moment(static_cast<unsigned>(n), t);
  Rat expected = Rat(count) * Rat(count) * mt;
  Int rpow = 1;
  for (unsigned e = 0; e < t; ++e) rpow *= norm2;
  expected *= Rat(rpow);
  return Rat(total) == expected;
}

}  // namespace vexillar

#include "vexillar/group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace vexillar {

namespace {

struct MatLess {
  bool operator()(const RatMatrix& a, const RatMatrix& b) const {
    const auto& x = a.entries();
    const auto& y = b.entries();
    if (x.size() != y.size()) return x.size() < y.size();
    for (std::size_t i = 0; i < x.size(); ++i) {
      const int c = cmp(x[i], y[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }
};

bool is_orthogonal(const RatMatrix& m) {
  if (m.rows() != m.cols()) return false;
  return m.transpose() * m == RatMatrix::identity(m.rows());
}

}  // namespace

MatGroup close(const std::vector<RatMatrix>& generators,
               std::size_t max_order) {
  if (generators.empty()) throw std::invalid_argument("close: no generators");
  const std::size_t n = generators.front().rows();
  for (const RatMatrix& g : generators) {
    if (g.rows() != n || g.cols() != n)
      throw std::invalid_argument("close: generator dimension mismatch");
    if (!is_orthogonal(g))
      throw std::invalid_argument("close: generator is not orthogonal");
  }
  std::set<RatMatrix, MatLess> seen;
  std::vector<RatMatrix> frontier{RatMatrix::identity(n)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<RatMatrix> next;
    for (const RatMatrix& e : frontier) {
      for (const RatMatrix& g : generators) {
        RatMatrix prod = e * g;
        if (seen.insert(prod).second) {
          if (seen.size() > max_order)
            throw std::runtime_error("close: group order exceeds max_order");
          next.push_back(std::move(prod));
        }
      }
    }
    frontier = std::move(next);
  }
  MatGroup out;
  out.ambient_ = static_cast<unsigned>(n);
  out.elements_.assign(seen.begin(), seen.end());
  return out;
}

FlagSet orbit(const Flag& f, const MatGroup& g) {
  if (f.shape().ambient != g.ambient())
    throw std::invalid_argument("orbit: ambient mismatch");
  std::set<Flag> images;
  for (const RatMatrix& q : g.elements()) images.insert(f.transformed(q));
  if (g.order() % images.size() != 0)
    throw std::logic_error("orbit: size does not divide group order");
  return FlagSet(std::vector<Flag>(images.begin(), images.end()));
}

namespace {

// Character of Sym^k(Sym^2 R^n) from the traces tr(g^j), j = 1..2k.
Rat sym_sym_character(const std::vector<Rat>& traces, unsigned k) {
  std::vector<Rat> p(k + 1);  // p[j] = character of Sym^2 at g^j
  for (unsigned j = 1; j <= k; ++j)
    p[j] = (traces.at(j - 1) * traces.at(j - 1) + traces.at(2 * j - 1)) / 2;
  std::vector<Rat> h(k + 1);
  h[0] = 1;
  for (unsigned kk = 1; kk <= k; ++kk) {
    Rat s = 0;
    for (unsigned j = 1; j <= kk; ++j) s += p[j] * h[kk - j];
    h[kk] = s / Rat(kk);
  }
  return h[k];
}

Int as_exact_integer(const Rat& r, const char* what) {
  if (r.get_den() != 1)
    throw std::logic_error(std::string(what) + ": non-integral average");
  return r.get_num();
}

}  // namespace

Int sym_sym_invariant_dim(const MatGroup& g, unsigned k) {
  if (k == 0 || k > 3)
    throw std::invalid_argument("sym_sym_invariant_dim: k in 1..3");
  if (g.order() == 0)
    throw std::invalid_argument("sym_sym_invariant_dim: group not enumerated");
  Rat sum = 0;
  for (const RatMatrix& e : g.elements()) {
    std::vector<Rat> traces(2 * k);
    RatMatrix power = e;
    traces[0] = power.trace();
    for (unsigned j = 2; j <= 2 * k; ++j) {
      power = power * e;
      traces[j - 1] = power.trace();
    }
    sum += sym_sym_character(traces, k);
  }
  return as_exact_integer(sum / Rat(static_cast<unsigned long>(g.order())),
                          "sym_sym_invariant_dim");
}

Int sym_sym_invariant_dim(const ClassData& cd, unsigned k) {
  if (k == 0 || k > 3)
    throw std::invalid_argument("sym_sym_invariant_dim: k in 1..3");
  if (cd.order <= 0 || cd.classes.empty())
    throw std::invalid_argument("sym_sym_invariant_dim: empty class data");
  Rat sum = 0;
  Int total = 0;
  for (const ConjClass& c : cd.classes) {
    if (c.power_traces.size() < 2 * k)
      throw std::invalid_argument(
          "sym_sym_invariant_dim: class data needs traces up to g^(2k)");
    sum += Rat(c.size) * sym_sym_character(c.power_traces, k);
    total += c.size;
  }
  if (total != cd.order)
    throw std::invalid_argument(
        "sym_sym_invariant_dim: class sizes do not sum to the order");
  return as_exact_integer(sum / Rat(cd.order), "sym_sym_invariant_dim");
}

unsigned reference_invariant_dim(unsigned n, unsigned k) {
  // Partitions of k with all parts <= n.
  std::vector<unsigned> table(k + 1, 0);
  table[0] = 1;
  for (unsigned part = 1; part <= std::min(n, k); ++part)
    for (unsigned s = part; s <= k; ++s) table[s] += table[s - part];
  return table[k];
}

namespace {

bool strength_from_dims(unsigned n, unsigned t,
                        const std::vector<Int>& dims) {
  if (t % 2 != 0 || t == 0 || t > 6)
    throw std::invalid_argument("orbit_design_strength: t in {2,4,6}");
  for (unsigned k = 1; k <= t / 2; ++k)
    if (dims[k - 1] != Int(reference_invariant_dim(n, k))) return false;
  return true;
}

}  // namespace

bool orbit_design_strength(const MatGroup& g, unsigned t) {
  std::vector<Int> dims;
  for (unsigned k = 1; k <= t / 2; ++k)
    dims.push_back(sym_sym_invariant_dim(g, k));
  return strength_from_dims(g.ambient(), t, dims);
}

bool orbit_design_strength(const ClassData& cd, unsigned n, unsigned t) {
  std::vector<Int> dims;
  for (unsigned k = 1; k <= t / 2; ++k)
    dims.push_back(sym_sym_invariant_dim(cd, k));
  return strength_from_dims(n, t, dims);
}

}  // namespace vexillar

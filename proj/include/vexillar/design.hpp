#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vexillar/flag.hpp"
#include "vexillar/matrix.hpp"

namespace vexillar {

// Finite weighted multiset of flags of one shape. Weights are positive and
// sum to 1; the default constructor weight is uniform.
class FlagSet {
 public:
  explicit FlagSet(std::vector<Flag> flags);
  FlagSet(std::vector<Flag> flags, std::vector<Rat> weights);

  const std::vector<Flag>& flags() const { return flags_; }
  const std::vector<Rat>& weights() const { return weights_; }
  const FlagShape& shape() const { return flags_.front().shape(); }
  std::size_t size() const { return flags_.size(); }

 private:
  std::vector<Flag> flags_;
  std::vector<Rat> weights_;
};

// Witness of a failed moment comparison.
struct DesignFailure {
  unsigned degree = 0;           // 2 or 4
  std::size_t level = 0;         // flag level of the first projector
  std::size_t level2 = 0;        // second projector level (degree 4)
  std::vector<std::size_t> index;  // failing tensor entry
  Rat actual;
  Rat expected;
};

struct DesignCertificate {
  unsigned strength_requested = 0;
  unsigned strength_verified = 0;  // largest verified t <= requested
  bool pass = false;
  std::optional<DesignFailure> failure;
  // Odd strengths ride on the even degree below them: every invariant
  // polynomial function on the flag variety has even degree.
  bool odd_collapse_used = false;
};

// Haar mean of the rank-d projector in R^n: (d/n) I.
RatMatrix haar_moment2(unsigned n, unsigned d);

// Coefficients (a, b) of E[P (x) P'] = a d_ij d_kl + b (d_ik d_jl + d_il d_jk)
// for nested Haar projectors of ranks d, d' in R^n. Solves the two exact
// contractions tr(P) tr(P') = d d' and tr(P P') = min(d, d').
struct Moment4 {
  Rat a;
  Rat b;
};
Moment4 haar_moment4(unsigned n, unsigned d, unsigned d2);

// Exact design test, t in {1,...,5}. Degree 2 compares the weighted mean of
// each projector with (d/n) I; degree 4 compares the weighted mean of
// P_level (x) P_level2 with the Haar moment tensor, all entries exact.
DesignCertificate is_design(const FlagSet& d, unsigned t);

// Even-strength spherical design criterion for antipodal equal-norm vector
// sets via the pair sum: sum_{x,y} (x.y)^t == |V|^2 r^{2t} m_t with
// m_t = 1*3*...*(t-1) / (n (n+2) ... (n+t-2)).
// Vectors are given by integer coordinates together with the Gram matrix of
// the ambient bilinear form (identity for plain euclidean coordinates).
// With half_set = true each listed vector stands for the antipodal pair
// {v, -v}; the pair sum over the full set is recovered exactly since t is
// even.
// The verdict is independent of the thread count; threads > 1 splits the
// rows of the pair matrix.
bool sphere_pair_sum_test(const std::vector<std::vector<Int>>& vectors,
                          const IntMatrix& gram, unsigned t,
                          bool half_set = false, unsigned threads = 1);

// The exact sphere moment m_t.
Rat sphere_moment(unsigned n, unsigned t);

}  // namespace vexillar

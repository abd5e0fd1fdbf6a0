#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vexillar/design.hpp"
#include "vexillar/lattice.hpp"
#include "vexillar/matrix.hpp"
#include "vexillar/simplex.hpp"

namespace vexillar {

// Certification works in lattice coordinates, without any embedding: a
// rank-d sublattice with basis rows S defines Q = S^T (S G S^T)^{-1} S, and
// the orthogonal projection onto its real span is the endomorphism Q G. All
// tests below are phrased in these exact rational Q-matrices.
RatMatrix q_matrix(const IntMatrix& basis, const IntMatrix& gram);

// Sum over the chain (with rank multiplicity) of the projection Q-matrices;
// the projector sum itself is matrix * G.
struct ProjSum {
  RatMatrix matrix;
};
ProjSum proj_sum(const LatticeFlag& f, const IntMatrix& gram);

// Exact design test for a uniform set of lattice flags, t in 1..5. The
// degree-2 condition averages Q per level against (d/n) G^{-1}; degree 4
// compares the averaged Q (x) Q' with the Haar tensor written in A = G^{-1}:
// a A_ij A_kl + b (A_ik A_jl + A_il A_jk). Equivalent to the projector-stack
// test in any orthonormal realization of G.
DesignCertificate lattice_flag_design(const std::vector<LatticeFlag>& flags,
                                      const IntMatrix& gram, unsigned t);

struct PerfectionResult {
  bool perfect = false;
  std::size_t rank = 0;  // of span{proj sums} in the symmetric space
};
PerfectionResult is_perfect(const std::vector<ProjSum>& sums, unsigned n);

// Sum of all proj sums equals (|lambda| s / n) G^{-1} exactly.
bool is_strongly_eutactic(const std::vector<ProjSum>& sums,
                          const IntMatrix& gram, unsigned degree);

struct EutaxyResult {
  bool eutactic = false;
  std::vector<Rat> coefficients;  // positive witness when eutactic
  Rat epsilon;                    // positive margin witness; the LP path
                                  // maximizes it, > 0 iff eutactic
};
// Positive solvability of sum_F c_F (proj sum)_F = identity, decided by
// maximizing epsilon with c_F = epsilon + u_F, u_F >= 0, over an exact LP.
EutaxyResult is_eutactic(const std::vector<ProjSum>& sums,
                         const IntMatrix& gram);

struct CMatrixReport {
  bool computed = false;      // false when s_lambda exceeded the cap
  std::size_t size = 0;       // s_lambda
  Rat omega1;                 // eigenvalue on (1,...,1): |lambda|^2 s / n
  Rat omega;                  // other nonzero eigenvalue: s kappa / (n N)
  Int kappa;                  // sum over chain ranks of n min - product
  Int big_n;                  // N = n(n+1)/2 - 1
  bool row_sum_identity = false;    // C J = omega1 J
  bool quadratic_identity = false;  // C^2 = (s kappa / nN) C + coeff J
  bool trace_identity = false;      // tr C = s * sum (2i-1) rank_i
  std::size_t rank = 0;
  std::size_t alpha = 0;  // multiplicity of omega = rank - 1
};
// Gram of the projector sums under the Frobenius pairing
// <<Pi, Pi'>> = tr(Q G Q' G), with its spectral identities (which hold
// exactly when the flag set is a 4-design).
CMatrixReport c_matrix_report(const std::vector<ProjSum>& sums,
                              const IntMatrix& gram, const Weight& w,
                              std::size_t cap = 50000);

struct ExtremalityReport {
  std::string lattice_name;
  Partition lambda;
  Int min_norm;
  std::size_t s_lambda = 0;
  GammaValue gamma;
  unsigned design_strength = 0;  // largest verified t <= 5
  DesignCertificate design4;
  bool strongly_eutactic = false;
  EutaxyResult eutaxy;
  PerfectionResult perfection;
  CMatrixReport cmatrix;
  std::string verdict;  // "extreme (strong perfection)",
                        // "extreme (perfect and eutactic)", "undetermined"
};

ExtremalityReport certify_extreme(const Lattice& l, const Weight& w,
                                  std::uint64_t node_budget = 0,
                                  std::size_t cmatrix_cap = 50000);

ExtremalityReport certify_extreme(const Lattice& l, const Weight& w,
                                  const MinimalFlagsResult& minimal,
                                  std::size_t cmatrix_cap = 50000);

}  // namespace vexillar

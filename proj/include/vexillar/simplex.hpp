#pragma once

#include <vector>

#include "vexillar/matrix.hpp"

namespace vexillar {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rat objective;
  std::vector<Rat> x;
};

// maximize c.x subject to a x = b, x >= 0, over exact rationals.
// Two-phase simplex with Bland's rule, so termination is guaranteed.
LpResult lp_maximize(const RatMatrix& a, const std::vector<Rat>& b,
                     const std::vector<Rat>& c);

}  // namespace vexillar

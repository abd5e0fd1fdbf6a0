#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "vexillar/simplex.hpp"

using namespace vexillar;

namespace {

RatMatrix rmat(std::size_t r, std::size_t c, std::vector<long> v) {
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Rat(v[i * c + j]);
  return m;
}

}  // namespace

TEST_CASE("simple optimum") {
  // max x0 with x0 + x1 = 1.
  const LpResult r = lp_maximize(rmat(1, 2, {1, 1}), {Rat(1)}, {Rat(1), Rat(0)});
  REQUIRE(r.status == LpStatus::kOptimal);
  CHECK(r.objective == 1);
  CHECK(r.x[0] == 1);
  CHECK(r.x[1] == 0);
}

TEST_CASE("negative right hand sides are handled") {
  // max x1 with -x0 - x1 = -2, x0 + 2 x1 = 3 -> x = (1, 1).
  const LpResult r = lp_maximize(rmat(2, 2, {-1, -1, 1, 2}),
                                 {Rat(-2), Rat(3)}, {Rat(0), Rat(1)});
  REQUIRE(r.status == LpStatus::kOptimal);
  CHECK(r.x[0] == 1);
  CHECK(r.x[1] == 1);
}

TEST_CASE("infeasible and unbounded are detected") {
  CHECK(lp_maximize(rmat(1, 2, {1, 1}), {Rat(-1)}, {Rat(1), Rat(0)}).status ==
        LpStatus::kInfeasible);
  // x0 - x1 = -1 with objective x0 + x1 grows without bound.
  CHECK(lp_maximize(rmat(1, 2, {1, -1}), {Rat(-1)}, {Rat(1), Rat(1)}).status ==
        LpStatus::kUnbounded);
}

TEST_CASE("redundant constraints are tolerated") {
  // Duplicate row.
  const LpResult r = lp_maximize(rmat(2, 2, {1, 1, 1, 1}), {Rat(1), Rat(1)},
                                 {Rat(2), Rat(1)});
  REQUIRE(r.status == LpStatus::kOptimal);
  CHECK(r.objective == 2);
}

TEST_CASE("fractional optimum stays exact") {
  // max x0 + x1 with 3 x0 + x1 = 1, x0 + 3 x1 = 1 -> x = (1/4, 1/4).
  const LpResult r = lp_maximize(rmat(2, 2, {3, 1, 1, 3}), {Rat(1), Rat(1)},
                                 {Rat(1), Rat(1)});
  REQUIRE(r.status == LpStatus::kOptimal);
  CHECK(r.x[0] == Rat(1, 4));
  CHECK(r.x[1] == Rat(1, 4));
  CHECK(r.objective == Rat(1, 2));
}

TEST_CASE("degenerate vertices terminate") {
  // Classic degeneracy: several constraints meet at the optimum; Bland's
  // rule must not cycle.
  const LpResult r = lp_maximize(
      rmat(3, 5,
           {1, 0, 1, 0, 0,
            0, 1, 0, 1, 0,
            1, 1, 0, 0, 1}),
      {Rat(1), Rat(1), Rat(1)}, {Rat(1), Rat(1), Rat(0), Rat(0), Rat(0)});
  REQUIRE(r.status == LpStatus::kOptimal);
  CHECK(r.objective == 1);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "vexillar/design.hpp"

using namespace vexillar;

namespace {

Flag line(unsigned n, std::vector<long> v) {
  RatMatrix b(n, 1);
  for (unsigned i = 0; i < n; ++i) b(i, 0) = Rat(v[i]);
  return flag_from_bases(FlagShape(n, {1}), {b});
}

}  // namespace

TEST_CASE("flag set validation") {
  std::vector<Flag> fs{line(2, {1, 0}), line(2, {0, 1})};
  const FlagSet uniform(fs);
  CHECK(uniform.weights()[0] == Rat(1, 2));
  CHECK_THROWS(FlagSet({}));
  CHECK_THROWS(FlagSet(fs, {Rat(1, 2)}));                  // count mismatch
  CHECK_THROWS(FlagSet(fs, {Rat(1, 2), Rat(1, 4)}));       // sum != 1
  CHECK_THROWS(FlagSet(fs, {Rat(3, 2), Rat(-1, 2)}));      // negative
}

TEST_CASE("haar moment oracles and contractions") {
  CHECK(haar_moment2(4, 1) == RatMatrix::identity(4).scaled(Rat(1, 4)));
  for (auto [n, d, d2] : {std::tuple<unsigned, unsigned, unsigned>{4, 1, 1},
                          {8, 2, 1},
                          {8, 2, 2},
                          {5, 3, 2}}) {
    const Moment4 m = haar_moment4(n, d, d2);
    // Contraction over (i=j, k=l): E[tr P tr P'] = d d'.
    const Rat c1 = Rat(n) * Rat(n) * m.a + 2 * Rat(n) * m.b;
    CHECK(c1 == Rat(d) * Rat(d2));
    // Contraction over (i=k, j=l): E[tr(P P')] = min(d, d') by nesting.
    const Rat c2 = Rat(n) * m.a + Rat(n) * Rat(n) * m.b + Rat(n) * m.b;
    CHECK(c2 == Rat(std::min(d, d2)));
  }
}

TEST_CASE("coordinate axes are a 2-design but not a 4-design") {
  std::vector<Flag> axes{line(2, {1, 0}), line(2, {0, 1})};
  const FlagSet s(axes);
  CHECK(is_design(s, 2).pass);
  CHECK(is_design(s, 3).pass);  // odd strength rides on degree 2
  const DesignCertificate c4 = is_design(s, 4);
  CHECK(!c4.pass);
  REQUIRE(c4.failure.has_value());
  // Witness: the (0,0,0,0) moment is 1/2 against the Haar value 3/8.
  CHECK(c4.failure->degree == 4);
  CHECK(c4.failure->index == std::vector<std::size_t>{0, 0, 0, 0});
  CHECK(c4.failure->actual == Rat(1, 2));
  CHECK(c4.failure->expected == Rat(3, 8));
}

TEST_CASE("square vertices pass degree two and fail degree four") {
  const IntMatrix gram = IntMatrix::identity(2);
  std::vector<std::vector<Int>> square{{Int(1), Int(0)}, {Int(0), Int(1)}};
  CHECK(sphere_pair_sum_test(square, gram, 2));
  CHECK(!sphere_pair_sum_test(square, gram, 4));
}

TEST_CASE("pair sum on the A2 root system") {
  IntMatrix gram(2, 2);
  gram(0, 0) = 2;
  gram(0, 1) = 1;
  gram(1, 0) = 1;
  gram(1, 1) = 2;
  // The three positive roots, all of Gram norm 2; together with their
  // negatives they form the hexagon.
  std::vector<std::vector<Int>> roots{{Int(1), Int(0)},
                                      {Int(0), Int(1)},
                                      {Int(1), Int(-1)}};
  CHECK(sphere_pair_sum_test(roots, gram, 2));
  CHECK(sphere_pair_sum_test(roots, gram, 4));
  // A hexagon is a 5-design but not a 6-design.
  CHECK(!sphere_pair_sum_test(roots, gram, 6));
}

TEST_CASE("half set convention matches the explicit double cover") {
  IntMatrix gram = IntMatrix::identity(2);
  std::vector<std::vector<Int>> half{{Int(1), Int(0)}, {Int(0), Int(1)}};
  std::vector<std::vector<Int>> full{{Int(1), Int(0)},
                                     {Int(0), Int(1)},
                                     {Int(-1), Int(0)},
                                     {Int(0), Int(-1)}};
  for (unsigned t : {2u, 4u, 6u})
    CHECK(sphere_pair_sum_test(half, gram, t, true) ==
          sphere_pair_sum_test(full, gram, t, false));
}

TEST_CASE("pair sum input validation") {
  IntMatrix gram = IntMatrix::identity(2);
  std::vector<std::vector<Int>> bad{{Int(1), Int(0)}, {Int(1), Int(1)}};
  CHECK_THROWS(sphere_pair_sum_test(bad, gram, 2));  // unequal norms
  CHECK_THROWS(sphere_pair_sum_test({}, gram, 2));
  std::vector<std::vector<Int>> ok{{Int(1), Int(0)}};
  CHECK_THROWS(sphere_pair_sum_test(ok, gram, 3));  // odd t
}

TEST_CASE("sphere moment values") {
  CHECK(sphere_moment(2, 2) == Rat(1, 2));
  CHECK(sphere_moment(3, 2) == Rat(1, 3));
  CHECK(sphere_moment(3, 4) == Rat(1, 5));  // 1*3/(3*5)
  CHECK(sphere_moment(24, 2) == Rat(1, 24));
}

TEST_CASE("big entry fallback equals the fast path") {
  // Same configuration at two scales: scaling coordinates by 2^21 forces
  // the arbitrary-precision path; the verdicts must agree.
  IntMatrix gram = IntMatrix::identity(2);
  std::vector<std::vector<Int>> small{{Int(1), Int(0)}, {Int(0), Int(1)}};
  const Int big = Int(1) << 21;
  std::vector<std::vector<Int>> scaled{{big, Int(0)}, {Int(0), big}};
  for (unsigned t : {2u, 4u})
    CHECK(sphere_pair_sum_test(small, gram, t) ==
          sphere_pair_sum_test(scaled, gram, t));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "helpers.hpp"
#include "vexillar/flag.hpp"

using namespace vexillar;

TEST_CASE("flag shape blocks") {
  const FlagShape s(5, {3, 1});
  CHECK(s.levels() == 2);
  // Blocks from the smallest space upward: 1, 3-1, 5-3.
  CHECK(s.block_sizes() == std::vector<unsigned>{1, 2, 2});
  CHECK_THROWS(FlagShape(3, {1, 2}));  // dims must decrease
  CHECK_THROWS(FlagShape(3, {3}));     // proper subspaces only
}

TEST_CASE("flag from bases builds nested projectors") {
  // V1 = span(e1, e1+e2), V2 = span(e1) in R^3.
  RatMatrix b1(3, 2), b2(3, 1);
  b1(0, 0) = 1;
  b1(0, 1) = 1;
  b1(1, 1) = 1;
  b2(0, 0) = 1;
  const Flag f = flag_from_bases(FlagShape(3, {2, 1}), {b1, b2});
  for (std::size_t lvl = 0; lvl < 2; ++lvl) {
    const RatMatrix& p = f.projector(lvl);
    CHECK(p * p == p);
    CHECK(p.transpose() == p);
  }
  CHECK(f.projector(0).trace() == 2);
  CHECK(f.projector(1).trace() == 1);
  // Nesting: P1 P2 = P2.
  CHECK(f.projector(0) * f.projector(1) == f.projector(1));
  // The projector is basis independent: doubled spanning vectors give the
  // same flag.
  RatMatrix c1 = b1.scaled(Rat(2));
  RatMatrix c2 = b2.scaled(Rat(-3));
  CHECK(flag_from_bases(FlagShape(3, {2, 1}), {c1, c2}) == f);
}

TEST_CASE("non nested spans are rejected") {
  RatMatrix b1(3, 2), b2(3, 1);
  b1(0, 0) = 1;
  b1(1, 1) = 1;
  b2(2, 0) = 1;  // e3 is not inside span(e1, e2)
  CHECK_THROWS(flag_from_bases(FlagShape(3, {2, 1}), {b1, b2}));
}

TEST_CASE("trace pair is the squared cosine for lines") {
  RatMatrix a(2, 1), b(2, 1);
  a(0, 0) = 1;
  b(0, 0) = 3;
  b(1, 0) = 4;
  const Flag fa = flag_from_bases(FlagShape(2, {1}), {a});
  const Flag fb = flag_from_bases(FlagShape(2, {1}), {b});
  CHECK(trace_pair(fa, fb, 0, 0) == Rat(9, 25));
  CHECK(trace_pair(fa, fa, 0, 0) == 1);
}

TEST_CASE("orthogonal transform preserves structure") {
  testutil::Lcg rng(7);
  const FlagShape shape(4, {2, 1});
  const Flag f = testutil::random_flag(shape, rng);
  const RatMatrix q = testutil::random_orthogonal(4, rng);
  CHECK(q.transpose() * q == RatMatrix::identity(4));
  const Flag g = f.transformed(q);
  for (std::size_t lvl = 0; lvl < 2; ++lvl) {
    CHECK(g.projector(lvl) * g.projector(lvl) == g.projector(lvl));
    CHECK(g.projector(lvl).trace() == f.projector(lvl).trace());
  }
  CHECK(trace_pair(f, f, 0, 1) == trace_pair(g, g, 0, 1));
}

TEST_CASE("haar sample is orthonormal") {
  const FlagShape shape(6, {3, 1});
  const FloatFlag x = haar_sample(shape, 42);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      double dot = 0;
      for (std::size_t i = 0; i < 6; ++i) dot += x.entry(i, a) * x.entry(i, b);
      CHECK(std::abs(dot - (a == b ? 1.0 : 0.0)) < 1e-12);
    }
  // Deterministic for a fixed seed.
  const FloatFlag y = haar_sample(shape, 42);
  CHECK(x.entry(2, 1) == y.entry(2, 1));
  const FloatFlag z = haar_sample(shape, 43);
  CHECK(x.entry(0, 0) != z.entry(0, 0));
}

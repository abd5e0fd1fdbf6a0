#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "vexillar/lattice.hpp"
#include "vexillar/serialize.hpp"

using namespace vexillar;

namespace {

std::string catalog(const std::string& f) {
  return std::string(VEXILLAR_CATALOG_DIR) + "/" + f;
}

IntMatrix imat(std::size_t r, std::size_t c, std::vector<long> v) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Int(v[i * c + j]);
  return m;
}

}  // namespace

TEST_CASE("lattice construction validates the gram matrix") {
  CHECK(Lattice(imat(2, 2, {2, 1, 1, 2})).determinant() == 3);
  CHECK_THROWS(Lattice(imat(2, 2, {1, 2, 2, 1})));  // indefinite
  CHECK_THROWS(Lattice(imat(2, 2, {1, 2, 3, 4})));  // asymmetric
}

TEST_CASE("weight ranks transpose the partition") {
  const Weight w(Partition({2, 1}), 12);
  CHECK(w.degree() == 3);
  CHECK(w.ranks == std::vector<unsigned>{2, 1});
  const Weight w2(Partition({3}), 8);
  CHECK(w2.ranks == std::vector<unsigned>{1, 1, 1});
  CHECK_THROWS(Weight(Partition({1, 1}), 2));  // depth must stay below n
}

TEST_CASE("lll preserves the lattice") {
  const IntMatrix g = imat(2, 2, {20, 9, 9, 5});
  const LllResult r = lll_reduce_gram(g);
  // Unimodular transform: same determinant, reduced diagonal.
  CHECK(det(r.gram.to_rational()) == det(g.to_rational()));
  CHECK(r.gram(0, 0) <= g(0, 0));
  const RatMatrix u = r.transform.to_rational();
  CHECK(u * g.to_rational() * u.transpose() == r.gram.to_rational());
  CHECK(abs(det(u).get_num()) == 1);
}

TEST_CASE("short vector oracles") {
  const Lattice z2(IntMatrix::identity(2), "Z2");
  const auto v1 = short_vectors(z2, 1);
  CHECK(v1.size() == 2);  // e1, e2 up to sign
  const Lattice a2(imat(2, 2, {2, 1, 1, 2}), "A2");
  CHECK(short_vectors(a2, 2).size() == 3);
  CHECK(a2.min_norm() == 2);
  // Independent cross-check: brute force over a coordinate box.
  const auto v5 = short_vectors(a2, 5);
  std::size_t brute = 0;
  for (long x = -4; x <= 4; ++x)
    for (long y = -4; y <= 4; ++y) {
      if (x == 0 && y == 0) continue;
      if (!(x > 0 || (x == 0 && y > 0))) continue;  // one of each +-v
      if (2 * x * x + 2 * x * y + 2 * y * y <= 5) ++brute;
    }
  CHECK(v5.size() == brute);
  // Sorted by norm then coordinates, no duplicates.
  for (std::size_t i = 1; i < v5.size(); ++i) {
    CHECK(v5[i - 1].norm <= v5[i].norm);
    CHECK(!(v5[i - 1].coords == v5[i].coords));
  }
}

TEST_CASE("e8 kissing number") {
  const Lattice e8 = load_lattice(catalog("e8.json"));
  CHECK(e8.determinant() == 1);
  CHECK(e8.min_norm() == 2);
  CHECK(short_vectors(e8, 2).size() == 120);
}

TEST_CASE("enumeration budget trips loudly") {
  const Lattice e8 = load_lattice(catalog("e8.json"));
  CHECK_THROWS_AS(short_vectors(e8, 2, 10), BudgetExceeded);
}

TEST_CASE("primitive sublattice enumeration") {
  const Lattice z2(IntMatrix::identity(2), "Z2");
  const auto s1 = sublattices_upto(z2, 1, 1);
  CHECK(s1.size() == 2);  // the two axes
  const auto s2 = sublattices_upto(z2, 1, 2);
  CHECK(s2.size() == 4);  // axes plus the two diagonals
  for (const Sublattice& s : s2) CHECK(s.det <= 2);
  // Rank-2 primitive sublattices of Z^3 = primitive vectors of the dual:
  // det 1 gives the 3 coordinate planes, det 2 adds 6 diagonal planes.
  const Lattice z3(IntMatrix::identity(3), "Z3");
  CHECK(sublattices_upto(z3, 2, 1).size() == 3);
  CHECK(sublattices_upto(z3, 2, 2).size() == 9);
  CHECK_THROWS(sublattices_upto(z2, 2, 1));  // rank must stay below n
}

TEST_CASE("minimal flags of the plane lattices") {
  const Lattice z2(IntMatrix::identity(2), "Z2");
  const auto rz = minimal_flags(z2, Weight(Partition({1}), 2));
  CHECK(rz.s_lambda() == 2);
  CHECK(rz.gamma.num == 1);
  CHECK(rz.gamma.den == 1);
  CHECK(rz.gamma.exponent == Rat(1, 2));

  const Lattice a2(imat(2, 2, {2, 1, 1, 2}), "A2");
  const auto ra = minimal_flags(a2, Weight(Partition({1}), 2));
  CHECK(ra.s_lambda() == 3);
  CHECK(ra.gamma.num == 2);
  CHECK(ra.gamma.den == 3);
  CHECK(ra.gamma.exponent == Rat(1, 2));
}

TEST_CASE("minimal chains are nested") {
  const Lattice z3(IntMatrix::identity(3), "Z3");
  const auto r = minimal_flags(z3, Weight(Partition({2, 1}), 3));
  // lambda = (2,1): ranks (2,1); chains of a plane containing a line.
  CHECK(!r.flags.empty());
  for (const LatticeFlag& f : r.flags) {
    REQUIRE(f.chain.size() == 2);
    CHECK(f.chain[0].basis.rows() == 2);
    CHECK(f.chain[1].basis.rows() == 1);
    // Nesting: stacking does not raise the rank.
    IntMatrix stacked(3, 3);
    for (std::size_t j = 0; j < 3; ++j) {
      stacked(0, j) = f.chain[0].basis(0, j);
      stacked(1, j) = f.chain[0].basis(1, j);
      stacked(2, j) = f.chain[1].basis(0, j);
    }
    CHECK(rank(stacked.to_rational()) == 2);
    CHECK(f.chain[0].det == 1);
    CHECK(f.chain[1].det == 1);
  }
  // Orthonormal chains: 3 planes times 2 contained axes.
  CHECK(r.s_lambda() == 6);
  CHECK(r.gamma.num == 1);
  CHECK(r.gamma.exponent == 1);
}

TEST_CASE("repeated transpose parts repeat the sublattice") {
  const Lattice z3(IntMatrix::identity(3), "Z3");
  // lambda = (2): ranks (1,1); the chain repeats one minimal line.
  const auto r = minimal_flags(z3, Weight(Partition({2}), 3));
  CHECK(r.s_lambda() == 3);
  for (const LatticeFlag& f : r.flags) {
    REQUIRE(f.chain.size() == 2);
    CHECK(f.chain[0].basis == f.chain[1].basis);
  }
  CHECK(r.gamma.num == 1);  // 1 * 1
  CHECK(r.gamma.exponent == Rat(2, 3));
}

TEST_CASE("hermite powers") {
  CHECK(hermite_power(1) == 1);
  CHECK(hermite_power(2) == Rat(4, 3));
  CHECK(hermite_power(8) == 256);
  CHECK_THROWS(hermite_power(9));
}

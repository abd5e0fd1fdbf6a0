#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "vexillar/extremality.hpp"
#include "vexillar/serialize.hpp"

using namespace vexillar;

namespace {

std::string catalog(const std::string& f) {
  return std::string(VEXILLAR_CATALOG_DIR) + "/" + f;
}

}  // namespace

TEST_CASE("rational round trip stays exact") {
  for (const Rat& r : {Rat(0), Rat(7), Rat(-3, 4), Rat(Int("123456789012345678901"), Int(7))}) {
    CHECK(rat_from_json(rat_to_json(r)) == r);
  }
  // Plain JSON integers are accepted on input.
  CHECK(rat_from_json(Json(5)) == Rat(5));
  CHECK_THROWS(rat_from_json(Json("not a number")));
  CHECK_THROWS(rat_from_json(Json(0.5)));  // floats are rejected
}

TEST_CASE("matrix round trips") {
  testutil::Lcg rng(11);
  RatMatrix m(3, 2);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      m(i, j) = Rat(rng.range(-9, 9), rng.range(1, 9));
      m(i, j).canonicalize();  // mpq_class constructors do not reduce
    }
  CHECK(rat_matrix_from_json(matrix_to_json(m)) == m);

  IntMatrix im(2, 2);
  im(0, 0) = Int("987654321098765432109876543210");
  im(1, 1) = -5;
  CHECK(int_matrix_from_json(int_matrix_to_json(im)) == im);

  CHECK_THROWS(rat_matrix_from_json(Json::array()));
  Json ragged = Json::array({Json::array({1, 2}), Json::array({3})});
  CHECK_THROWS(rat_matrix_from_json(ragged));
  CHECK_THROWS(int_matrix_from_json(ragged));
}

TEST_CASE("partition and flag round trips") {
  const Partition p({4, 2, 1});
  CHECK(partition_from_json(partition_to_json(p)) == p);

  testutil::Lcg rng(2);
  const Flag f = testutil::random_flag(FlagShape(3, {2, 1}), rng);
  const Flag g = flag_from_json(flag_to_json(f));
  CHECK(g.shape() == f.shape());
  for (std::size_t l = 0; l < 2; ++l) CHECK(g.projector(l) == f.projector(l));
}

TEST_CASE("catalog lattices load with exact invariants") {
  const Lattice e8 = load_lattice(catalog("e8.json"));
  CHECK(e8.dim() == 8);
  CHECK(e8.determinant() == 1);
  const Lattice k12 = load_lattice(catalog("k12.json"));
  CHECK(k12.dim() == 12);
  Int det3_6 = 1;
  for (int i = 0; i < 6; ++i) det3_6 *= 3;
  CHECK(k12.determinant() == det3_6);
  const Lattice bw16 = load_lattice(catalog("bw16.json"));
  CHECK(bw16.dim() == 16);
  CHECK(bw16.determinant() == (Int(1) << 8));
  const Lattice leech = load_lattice(catalog("leech.json"));
  CHECK(leech.dim() == 24);
  CHECK(leech.determinant() == 1);
}

TEST_CASE("malformed lattice files are rejected") {
  CHECK_THROWS(load_lattice(catalog("no_such_file.json")));
  Json j;
  j["n"] = 3;
  j["gram"] = int_matrix_to_json(IntMatrix::identity(2));
  CHECK_THROWS(lattice_from_json(j));  // size mismatch
  j["n"] = 2;
  CHECK(lattice_from_json(j).dim() == 2);
  Json bad = j;
  bad.erase("gram");
  CHECK_THROWS(lattice_from_json(bad));
}

TEST_CASE("vector files default to the identity form") {
  Json j;
  j["n"] = 2;
  j["vectors"] = Json::array({Json::array({1, 0}), Json::array({0, 1})});
  const VectorFile vf = vectors_from_json(j);
  CHECK(vf.gram == IntMatrix::identity(2));
  CHECK(vf.vectors.size() == 2);
  Json bad = j;
  bad["vectors"].push_back(Json::array({1, 2, 3}));
  CHECK_THROWS(vectors_from_json(bad));
}

TEST_CASE("flags file builds projectors from spanning sets") {
  Json j;
  j["n"] = 2;
  j["dims"] = Json::array({1});
  Json f1;
  f1["bases"] = Json::array({Json::array({Json::array({1}), Json::array({0})})});
  Json f2;
  f2["bases"] = Json::array({Json::array({Json::array({0}), Json::array({1})})});
  j["flags"] = Json::array({f1, f2});
  const auto flags = flags_from_json(j);
  REQUIRE(flags.size() == 2);
  RatMatrix p(2, 2);
  p(0, 0) = 1;
  CHECK(flags[0].projector(0) == p);
}

TEST_CASE("reports serialize exactly with no floats outside diagnostics") {
  const IntMatrix g = [] {
    IntMatrix m(2, 2);
    m(0, 0) = 2;
    m(0, 1) = 1;
    m(1, 0) = 1;
    m(1, 1) = 2;
    return m;
  }();
  const Lattice a2(g, "A2");
  const ExtremalityReport r = certify_extreme(a2, Weight(Partition({1}), 2));
  const Json j = extremality_to_json(r);
  CHECK(j.at("schema_version") == 1);
  CHECK(j.at("lattice") == "A2");
  CHECK(j.at("s_lambda") == 3);
  CHECK(j.at("gamma").at("numerator") == "2");
  CHECK(j.at("gamma").at("denominator") == "3");
  CHECK(j.at("gamma").at("exponent") == "1/2");
  CHECK(j.at("gamma").at("exactness") == "exact");
  CHECK(j.at("design4").at("pass") == true);
  CHECK(j.at("eutaxy").at("eutactic") == true);
  CHECK(j.at("verdict") == "extreme (strong perfection)");
  // Every exact field renders as a string or bool; the only float field is
  // the tagged diagnostic.
  CHECK(j.at("gamma").at("float_diagnostic").is_number_float());
  CHECK(j.at("min_norm").is_string());
  CHECK(j.at("c_matrix").at("omega1").is_string());
}

TEST_CASE("design failure witness serializes") {
  Json j;
  j["n"] = 2;
  j["dims"] = Json::array({1});
  Json f1;
  f1["bases"] = Json::array({Json::array({Json::array({1}), Json::array({0})})});
  Json f2;
  f2["bases"] = Json::array({Json::array({Json::array({0}), Json::array({1})})});
  j["flags"] = Json::array({f1, f2});
  const FlagSet s(flags_from_json(j));
  const Json out = design_certificate_to_json(is_design(s, 4));
  CHECK(out.at("pass") == false);
  CHECK(out.at("failure").at("degree") == 4);
  CHECK(out.at("failure").at("actual") == "1/2");
  CHECK(out.at("failure").at("expected") == "3/8");
}

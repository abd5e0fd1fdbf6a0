#include "vexillar/serialize.hpp"

#include <fstream>
#include <stdexcept>

namespace vexillar {

Json rat_to_json(const Rat& r) { return rational_to_string(r); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long>()));
  if (j.is_string()) {
    const auto r = parse_rational(j.get<std::string>());
    if (!r) throw std::invalid_argument("rational: cannot parse \"" +
                                        j.get<std::string>() + "\"");
    return *r;
  }
  throw std::invalid_argument("rational: expected integer or \"p/q\" string");
}

Json matrix_to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMatrix rat_matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw std::invalid_argument("matrix: expected array of arrays");
  const std::size_t rows = j.size(), cols = j[0].size();
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (j[i].size() != cols)
      throw std::invalid_argument("matrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = rat_from_json(j[i][c]);
  }
  return m;
}

Json int_matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(m(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long>()));
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("integer: expected integer or decimal string");
}

}  // namespace

IntMatrix int_matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw std::invalid_argument("matrix: expected array of arrays");
  const std::size_t rows = j.size(), cols = j[0].size();
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (j[i].size() != cols)
      throw std::invalid_argument("matrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = int_from_json(j[i][c]);
  }
  return m;
}

Json partition_to_json(const Partition& p) {
  Json a = Json::array();
  for (unsigned x : p.parts()) a.push_back(x);
  return a;
}

Partition partition_from_json(const Json& j) {
  std::vector<unsigned> parts;
  for (const auto& x : j) parts.push_back(x.get<unsigned>());
  return Partition(parts);
}

Json flag_to_json(const Flag& f) {
  Json out;
  out["n"] = f.shape().ambient;
  out["dims"] = f.shape().dims;
  Json projs = Json::array();
  for (const RatMatrix& p : f.projectors()) projs.push_back(matrix_to_json(p));
  out["projectors"] = std::move(projs);
  return out;
}

Flag flag_from_json(const Json& j) {
  FlagShape shape(j.at("n").get<unsigned>(),
                  j.at("dims").get<std::vector<unsigned>>());
  std::vector<RatMatrix> projs;
  for (const auto& p : j.at("projectors"))
    projs.push_back(rat_matrix_from_json(p));
  return Flag(std::move(shape), std::move(projs));
}

Lattice lattice_from_json(const Json& j) {
  IntMatrix gram = int_matrix_from_json(j.at("gram"));
  const auto n = j.at("n").get<std::size_t>();
  if (gram.rows() != n)
    throw std::invalid_argument("lattice: gram size differs from n");
  std::string name = j.value("name", std::string("unnamed"));
  return Lattice(std::move(gram), std::move(name));
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

Lattice load_lattice(const std::string& path) {
  return lattice_from_json(load_json_file(path));
}

std::vector<RatMatrix> generators_from_json(const Json& j) {
  const auto n = j.at("n").get<std::size_t>();
  std::vector<RatMatrix> gens;
  for (const auto& g : j.at("generators")) {
    RatMatrix m = rat_matrix_from_json(g);
    if (m.rows() != n || m.cols() != n)
      throw std::invalid_argument("generators: size differs from n");
    gens.push_back(std::move(m));
  }
  return gens;
}

std::vector<RatMatrix> load_generators(const std::string& path) {
  return generators_from_json(load_json_file(path));
}

ClassData class_data_from_json(const Json& j) {
  ClassData cd;
  cd.order = int_from_json(j.at("order"));
  for (const auto& c : j.at("classes")) {
    ConjClass cls;
    cls.size = int_from_json(c.at("size"));
    for (const auto& t : c.at("power_traces"))
      cls.power_traces.push_back(rat_from_json(t));
    cd.classes.push_back(std::move(cls));
  }
  return cd;
}

ClassData load_class_data(const std::string& path) {
  return class_data_from_json(load_json_file(path));
}

std::vector<Flag> flags_from_json(const Json& j) {
  FlagShape shape(j.at("n").get<unsigned>(),
                  j.at("dims").get<std::vector<unsigned>>());
  std::vector<Flag> flags;
  for (const auto& f : j.at("flags")) {
    std::vector<RatMatrix> bases;
    for (const auto& b : f.at("bases")) bases.push_back(rat_matrix_from_json(b));
    flags.push_back(flag_from_bases(shape, bases));
  }
  return flags;
}

VectorFile vectors_from_json(const Json& j) {
  VectorFile out;
  const auto n = j.at("n").get<std::size_t>();
  if (j.contains("gram")) {
    out.gram = int_matrix_from_json(j.at("gram"));
    if (out.gram.rows() != n)
      throw std::invalid_argument("vectors: gram size differs from n");
  } else {
    out.gram = IntMatrix::identity(n);
  }
  for (const auto& v : j.at("vectors")) {
    std::vector<Int> row;
    for (const auto& x : v) row.push_back(int_from_json(x));
    if (row.size() != n)
      throw std::invalid_argument("vectors: length differs from n");
    out.vectors.push_back(std::move(row));
  }
  return out;
}

Json design_certificate_to_json(const DesignCertificate& c) {
  Json out;
  out["strength_requested"] = c.strength_requested;
  out["strength_verified"] = c.strength_verified;
  out["pass"] = c.pass;
  out["odd_collapse_used"] = c.odd_collapse_used;
  out["exactness"] = "exact";
  if (c.failure) {
    Json f;
    f["degree"] = c.failure->degree;
    f["level"] = c.failure->level;
    f["level2"] = c.failure->level2;
    f["index"] = c.failure->index;
    f["actual"] = rat_to_json(c.failure->actual);
    f["expected"] = rat_to_json(c.failure->expected);
    out["failure"] = std::move(f);
  }
  return out;
}

Json gamma_to_json(const GammaValue& g) {
  Json out;
  out["numerator"] = g.num.get_str();
  out["denominator"] = g.den.get_str();
  out["exponent"] = rat_to_json(g.exponent);
  out["exactness"] = "exact";
  out["float_diagnostic"] = g.approx();
  return out;
}

Json eutaxy_to_json(const EutaxyResult& e) {
  Json out;
  out["eutactic"] = e.eutactic;
  out["epsilon"] = rat_to_json(e.epsilon);
  out["exactness"] = "exact";
  if (e.eutactic) {
    Json coeffs = Json::array();
    for (const Rat& c : e.coefficients) coeffs.push_back(rat_to_json(c));
    out["coefficients"] = std::move(coeffs);
  }
  return out;
}

Json cmatrix_to_json(const CMatrixReport& c) {
  Json out;
  out["computed"] = c.computed;
  out["size"] = c.size;
  out["kappa"] = c.kappa.get_str();
  out["N"] = c.big_n.get_str();
  if (c.computed) {
    out["omega1"] = rat_to_json(c.omega1);
    out["omega"] = rat_to_json(c.omega);
    out["row_sum_identity"] = c.row_sum_identity;
    out["quadratic_identity"] = c.quadratic_identity;
    out["trace_identity"] = c.trace_identity;
    out["rank"] = c.rank;
    out["alpha"] = c.alpha;
  } else {
    out["skipped"] = "s_lambda exceeds the C-matrix cap";
  }
  out["exactness"] = "exact";
  return out;
}

Json extremality_to_json(const ExtremalityReport& r) {
  Json out;
  out["schema_version"] = 1;
  out["lattice"] = r.lattice_name;
  out["lambda"] = partition_to_json(r.lambda);
  out["min_norm"] = r.min_norm.get_str();
  out["s_lambda"] = r.s_lambda;
  out["gamma"] = gamma_to_json(r.gamma);
  out["design_strength"] = r.design_strength;
  out["design4"] = design_certificate_to_json(r.design4);
  out["strongly_eutactic"] = r.strongly_eutactic;
  out["eutaxy"] = eutaxy_to_json(r.eutaxy);
  out["perfect"] = r.perfection.perfect;
  out["perfection_rank"] = r.perfection.rank;
  out["c_matrix"] = cmatrix_to_json(r.cmatrix);
  out["verdict"] = r.verdict;
  return out;
}

}  // namespace vexillar

#pragma once

#include <string>
#include <vector>

#include "vexillar/design.hpp"
#include "vexillar/extremality.hpp"
#include "vexillar/flag.hpp"
#include "vexillar/group.hpp"
#include "vexillar/lattice.hpp"
#include "vexillar/matrix.hpp"

#include "json.hpp"

namespace vexillar {

using Json = nlohmann::json;

// All serialized numbers are exact: rationals render as "p/q" (or "p" when
// integral) strings, never as floats. Float renderings for humans are added
// separately and tagged as diagnostics.

Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json matrix_to_json(const RatMatrix& m);
RatMatrix rat_matrix_from_json(const Json& j);

Json int_matrix_to_json(const IntMatrix& m);
IntMatrix int_matrix_from_json(const Json& j);

Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json flag_to_json(const Flag& f);
Flag flag_from_json(const Json& j);

// Catalog file: {"name", "n", "gram", optional "scale_note", "comment"}.
Lattice lattice_from_json(const Json& j);
Lattice load_lattice(const std::string& path);

// Generators file: {"n", "generators": [matrix, ...]}.
std::vector<RatMatrix> generators_from_json(const Json& j);
std::vector<RatMatrix> load_generators(const std::string& path);

// Class data file: {"order", "classes": [{"size", "power_traces"}, ...]}.
ClassData class_data_from_json(const Json& j);
ClassData load_class_data(const std::string& path);

// Flags file: {"n", "dims", "flags": [{"bases": [matrix, ...]}, ...]} with
// each matrix an n x k spanning set, largest space first.
std::vector<Flag> flags_from_json(const Json& j);

// Vectors file: {"n", "gram" (optional, identity default), "vectors"}.
struct VectorFile {
  IntMatrix gram;
  std::vector<std::vector<Int>> vectors;
};
VectorFile vectors_from_json(const Json& j);

Json design_certificate_to_json(const DesignCertificate& c);
Json gamma_to_json(const GammaValue& g);
Json eutaxy_to_json(const EutaxyResult& e);
Json cmatrix_to_json(const CMatrixReport& c);
Json extremality_to_json(const ExtremalityReport& r);

Json load_json_file(const std::string& path);

}  // namespace vexillar

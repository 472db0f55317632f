#pragma once

#include <string>

#include <json.hpp>

#include "qhalg/algebra.hpp"
#include "qhalg/representation.hpp"

namespace qhalg::io {

/// std::map-backed objects, so dumps have sorted keys and are reproducible.
using json = nlohmann::json;

/// "Q" (also "QQ", "rationals") or "F<p>" / "GF(<p>)".
Field parse_field(const std::string& name);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// {"n": int, "relations": [[a,b],...], "labels"?: [...]}, 1-based, [a,b]
/// meaning a < b.
Poset poset_from_json(const json& j);
/// Hasse relations of the internal (re-indexed) order.
json poset_to_json(const Poset& p);

struct AlgebraInput {
  Poset poset;
  AlgebraPtr algebra;
  int max_len = 0;
};

/// Accepts the poset form
///   {"poset": {...}, "relations": [{"path": [2,1,2],
///     "terms": [{"coeff": "1", "via": 3} | {"coeff": "1", "path": [...]}]}]}
/// where each relation reads path = Σ terms, and the quiver form written by
/// algebra_to_json. A bare poset object is read as the algebra without
/// relations. Vertex numbers refer to the input labelling. max_len <= 0
/// takes the value from the input or 2n.
AlgebraInput algebra_from_json(const json& j, const Field& f, int max_len = 0);

json quiver_to_json(const Quiver& q);
/// Quiver, relations as {"terms": [{"coeff", "start", "arrows"}]}, basis and
/// dimension. The poset is embedded when given.
json algebra_to_json(const BoundQuiverAlgebra& a, const Poset* p = nullptr);

/// dims plus one row-major matrix of rational strings per arrow.
json representation_to_json(const Representation& m);

json matrix_to_json(const Matrix& m);
std::string vertex_list(const ElementSet& s);

}  // namespace qhalg::io

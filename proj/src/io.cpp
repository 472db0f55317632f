#include "qhalg/io.hpp"

#include <fstream>
#include <sstream>

#include "qhalg/errors.hpp"

namespace qhalg::io {

namespace {

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

Scalar coefficient(const json& j, const Field& f) {
  std::string text;
  if (j.is_string())
    text = j.get<std::string>();
  else if (j.is_number_integer())
    text = std::to_string(j.get<long>());
  else
    throw ParseError("coefficient must be a decimal string of a rational");
  try {
    return f.parse(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

// input label (1-based) -> internal vertex
std::vector<int> input_to_internal(const Poset& p) {
  std::vector<int> m(p.size());
  for (int v = 0; v < p.size(); ++v) m[p.original_index()[v]] = v;
  return m;
}

std::vector<int> vertex_sequence(const json& j, const std::vector<int>& map) {
  if (!j.is_array() || j.empty()) throw ParseError("path must be a non-empty array of vertices");
  std::vector<int> out;
  for (const auto& v : j) {
    int x = as_int(v, "path vertex");
    if (x < 1 || x > static_cast<int>(map.size()))
      throw ElementOutOfRange("path vertex " + std::to_string(x) + " outside 1.." + std::to_string(map.size()));
    out.push_back(map[x - 1]);
  }
  return out;
}

ArrowDir parse_dir(const std::string& s) {
  if (s == "up") return ArrowDir::Up;
  if (s == "down") return ArrowDir::Down;
  if (s == "none") return ArrowDir::None;
  throw ParseError("unknown arrow direction '" + s + "'");
}

const char* dir_name(ArrowDir d) {
  switch (d) {
    case ArrowDir::Up: return "up";
    case ArrowDir::Down: return "down";
    default: return "none";
  }
}

std::vector<Relation> poset_form_relations(const json& rels, const Poset& p, const Quiver& q, const Field& f) {
  CanonicalPathTable table(p, q);
  const auto map = input_to_internal(p);
  std::vector<Relation> out;
  for (const auto& r : rels) {
    if (!r.is_object() || !r.contains("path")) throw ParseError("relation needs a \"path\"");
    std::vector<int> lead = vertex_sequence(r["path"], map);
    std::vector<std::pair<Scalar, int>> via;
    std::vector<Term> extra;
    if (r.contains("terms")) {
      for (const auto& t : r["terms"]) {
        if (!t.is_object() || !t.contains("coeff")) throw ParseError("relation term needs a \"coeff\"");
        Scalar c = coefficient(t["coeff"], f);
        if (t.contains("via")) {
          int i = as_int(t["via"], "via");
          if (i < 1 || i > p.size()) throw ElementOutOfRange("via " + std::to_string(i) + " out of range");
          via.emplace_back(c, map[i - 1]);
        } else if (t.contains("path")) {
          extra.push_back({-c, path_from_vertices(q, vertex_sequence(t["path"], map))});
        } else {
          throw ParseError("relation term needs \"via\" or \"path\"");
        }
      }
    }
    Relation rel = canonical_relation(q, table, lead, via, f);
    const Path& head = rel.terms.front().path;
    for (const auto& t : extra) {
      if (t.path.start != head.start || t.path.end != head.end)
        throw InadmissibleRelation("relation term " + t.path.str(q) + " is not parallel to " + head.str(q));
      rel.terms.push_back(t);
    }
    out.push_back(std::move(rel));
  }
  return out;
}

Quiver quiver_from_json(const json& j, const std::vector<int>& map) {
  int n = as_int(j.at("vertices"), "quiver vertices");
  if (n != static_cast<int>(map.size())) throw ParseError("quiver and poset sizes differ");
  std::vector<Arrow> arrows;
  for (const auto& a : j.at("arrows")) {
    int s = as_int(a.at("src"), "src"), t = as_int(a.at("dst"), "dst");
    if (s < 1 || s > n || t < 1 || t > n) throw ElementOutOfRange("arrow end outside 1.." + std::to_string(n));
    Arrow ar{static_cast<int>(arrows.size()), map[s - 1], map[t - 1],
             parse_dir(a.value("dir", std::string("none")))};
    if (a.contains("id") && as_int(a["id"], "arrow id") != ar.id) throw ParseError("arrow ids must be 0,1,2,...");
    arrows.push_back(ar);
  }
  return Quiver(n, arrows);
}

std::vector<Relation> quiver_form_relations(const json& rels, const Quiver& q, const std::vector<int>& map,
                                            const Field& f) {
  std::vector<Relation> out;
  for (const auto& r : rels) {
    Relation rel;
    for (const auto& t : r.at("terms")) {
      int s = as_int(t.at("start"), "start");
      if (s < 1 || s > q.vertices()) throw ElementOutOfRange("path start out of range");
      Path p = Path::trivial(map[s - 1]);
      for (const auto& a : t.at("arrows")) {
        int id = as_int(a, "arrow id");
        if (id < 0 || id >= static_cast<int>(q.arrows().size())) throw ElementOutOfRange("unknown arrow id");
        if (q.arrow(id).source != p.end) throw ParseError("arrows in a path do not compose");
        p.arrows.push_back(id);
        p.end = q.arrow(id).target;
      }
      rel.terms.push_back({coefficient(t.at("coeff"), f), p});
    }
    if (!rel.terms.empty()) out.push_back(std::move(rel));
  }
  return out;
}

}  // namespace

Field parse_field(const std::string& name) {
  if (name == "Q" || name == "QQ" || name == "rationals") return Field::rationals();
  std::string digits;
  if (name.size() > 1 && (name[0] == 'F' || name[0] == 'p'))
    digits = name.substr(1);
  else if (name.rfind("GF(", 0) == 0 && name.back() == ')')
    digits = name.substr(3, name.size() - 4);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 6)
    throw UsageError("unknown field '" + name + "' (use Q or F<p>)");
  try {
    return Field::prime(static_cast<std::uint32_t>(std::stoul(digits)));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

Poset poset_from_json(const json& j) {
  try {
    if (!j.is_object() || !j.contains("n")) throw ParseError("poset needs \"n\"");
    int n = as_int(j["n"], "n");
    std::vector<std::pair<int, int>> less;
    if (j.contains("relations")) {
      if (!j["relations"].is_array()) throw ParseError("\"relations\" must be an array");
      for (const auto& r : j["relations"]) {
        if (!r.is_array() || r.size() != 2) throw ParseError("each relation is a pair [a, b]");
        int a = as_int(r[0], "relation element"), b = as_int(r[1], "relation element");
        if (a < 1 || a > n || b < 1 || b > n)
          throw ElementOutOfRange("relation [" + std::to_string(a) + "," + std::to_string(b) + "] outside 1.." +
                                  std::to_string(n));
        less.emplace_back(a - 1, b - 1);
      }
    }
    std::vector<std::string> labels;
    if (j.contains("labels"))
      for (const auto& l : j["labels"]) labels.push_back(l.is_string() ? l.get<std::string>() : l.dump());
    return Poset::build(n, less, labels);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

json poset_to_json(const Poset& p) {
  json rel = json::array();
  for (auto [a, b] : p.hasse_up()) rel.push_back({a + 1, b + 1});
  return {{"n", p.size()}, {"relations", rel}, {"labels", p.labels()}};
}

AlgebraInput algebra_from_json(const json& j, const Field& f, int max_len) {
  try {
    if (!j.is_object()) throw ParseError("algebra input must be an object");
    const bool bare = !j.contains("poset") && j.contains("n");
    Poset p = poset_from_json(bare ? j : j.at("poset"));
    int len = max_len > 0 ? max_len : j.value("max_len", 2 * p.size());
    if (len <= 0) throw UsageError("max_len must be positive");
    json rels = bare ? json::array() : j.value("relations", json::array());
    if (!rels.is_array()) throw ParseError("\"relations\" must be an array");

    Quiver q;
    std::vector<Relation> relations;
    if (!bare && j.contains("quiver")) {
      auto map = input_to_internal(p);
      q = quiver_from_json(j["quiver"], map);
      relations = quiver_form_relations(rels, q, map, f);
    } else {
      q = Quiver::doubled_hasse(p);
      relations = poset_form_relations(rels, p, q, f);
    }
    return {p, BoundQuiverAlgebra::build(q, relations, len, f), len};
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

json quiver_to_json(const Quiver& q) {
  json arrows = json::array();
  for (const auto& a : q.arrows())
    arrows.push_back({{"id", a.id}, {"src", a.source + 1}, {"dst", a.target + 1}, {"dir", dir_name(a.dir)}});
  return {{"vertices", q.vertices()}, {"arrows", arrows}};
}

json algebra_to_json(const BoundQuiverAlgebra& a, const Poset* p) {
  json out;
  if (p) out["poset"] = poset_to_json(*p);
  out["field"] = a.field().name();
  out["quiver"] = quiver_to_json(a.quiver());
  json rels = json::array();
  for (const auto& r : a.relations()) {
    json terms = json::array();
    for (const auto& t : r.terms)
      terms.push_back({{"coeff", t.coeff.str()}, {"start", t.path.start + 1}, {"arrows", t.path.arrows}});
    rels.push_back({{"terms", terms}});
  }
  out["relations"] = rels;
  json basis = json::array();
  for (const auto& b : a.basis()) basis.push_back(b.str(a.quiver()));
  out["basis"] = basis;
  out["dimension"] = a.dim();
  out["max_len"] = a.length_bound() + 1;
  return out;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

json representation_to_json(const Representation& m) {
  json arrows = json::array();
  const Quiver& q = m.algebra()->quiver();
  for (const auto& a : q.arrows())
    arrows.push_back({{"id", a.id}, {"src", a.source + 1}, {"dst", a.target + 1}, {"matrix", matrix_to_json(m.action(a.id))}});
  return {{"dims", m.dims()}, {"total_dim", m.total_dim()}, {"arrows", arrows}};
}

std::string vertex_list(const ElementSet& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t k = 0; k < s.size(); ++k) os << (k ? "," : "") << s[k] + 1;
  os << "}";
  return os.str();
}

}  // namespace qhalg::io

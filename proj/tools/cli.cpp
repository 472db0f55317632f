#include "cli.hpp"

#include <gmp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <iostream>
#include <sstream>

#include "qhalg/borel.hpp"
#include "qhalg/errors.hpp"
#include "qhalg/filtration.hpp"
#include "qhalg/io.hpp"
#include "qhalg/ringel.hpp"
#include "qhalg/search.hpp"

namespace qhalg::cli {

namespace {

using io::json;

constexpr const char* kVersion = "0.1.0";
constexpr int kDefaultMaxVertices = 10;

const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"poset-report", "build",   "check",  "basis", "filtrations",
                                          "tilting",      "ringel",  "borel",  "search"};
  return c;
}

json versions() {
  std::ostringstream js;
  js << NLOHMANN_JSON_VERSION_MAJOR << "." << NLOHMANN_JSON_VERSION_MINOR << "." << NLOHMANN_JSON_VERSION_PATCH;
  return {{"qhalg", kVersion}, {"gmp", gmp_version}, {"nlohmann_json", js.str()}, {"cli11", CLI11_VERSION}};
}

json config_json(const RunConfig& c, int max_len) {
  return {{"command", c.command}, {"inputs", c.inputs}, {"field", c.field},    {"max_len", max_len},
          {"seed", c.seed},       {"budget", c.budget}, {"vertex", c.vertex}, {"pool", c.pool},
          {"degree", c.degree},   {"allow_large", c.allow_large}};
}

// Certification failures exit with 2, everything else with 1.
bool is_verdict(const std::string& code) {
  static const std::vector<std::string> v{"NotQuasiHereditary", "NotOneQuasiHereditary", "BasisDefect",
                                          "EquivalenceViolated", "TiltingIncomplete",    "UniquenessFailed",
                                          "SubquotientMismatch", "Inconclusive"};
  return std::find(v.begin(), v.end(), code) != v.end();
}

json as_1based(const std::vector<int>& v) {
  json out = json::array();
  for (int x : v) out.push_back(x + 1);
  return out;
}

json condition_json(const Condition& c) {
  return {{"name", c.name}, {"value", c.value}, {"inconclusive", c.inconclusive}, {"detail", c.detail}};
}

json axioms_json(const QHReport& r) {
  json out = json::array();
  for (const auto& a : r.checks)
    out.push_back({{"axiom", a.axiom}, {"pass", a.pass}, {"inconclusive", a.inconclusive}, {"witness", a.witness}});
  return out;
}

struct Loaded {
  io::AlgebraInput in;
  Field field;
};

void guard_size(const Poset& p, const RunConfig& c) {
  if (p.size() > kDefaultMaxVertices && !c.allow_large)
    throw UsageError("poset has " + std::to_string(p.size()) + " elements; pass --allow-large to go above " +
                     std::to_string(kDefaultMaxVertices));
}

const std::string& single_input(const RunConfig& c) {
  if (c.inputs.size() != 1) throw UsageError(c.command + " takes exactly one input file");
  return c.inputs.front();
}

Poset load_poset(const RunConfig& c) {
  json j = io::read_json_file(single_input(c));
  Poset p = io::poset_from_json(j.contains("poset") ? j["poset"] : j);
  guard_size(p, c);
  return p;
}

Loaded load_algebra(const RunConfig& c) {
  Field f = io::parse_field(c.field);
  json j = io::read_json_file(single_input(c));
  // check the size before the closure runs
  guard_size(io::poset_from_json(j.contains("poset") ? j["poset"] : j), c);
  return {io::algebra_from_json(j, f, c.max_len), f};
}

int checked_vertex(const RunConfig& c, const Poset& p) {
  if (c.vertex < 0 || c.vertex > p.size())
    throw ElementOutOfRange("--vertex " + std::to_string(c.vertex) + " outside 1.." + std::to_string(p.size()));
  return c.vertex - 1;
}

std::vector<int> selected_vertices(const RunConfig& c, const Poset& p) {
  int v = checked_vertex(c, p);
  if (v >= 0) return {v};
  std::vector<int> all(p.size());
  for (int k = 0; k < p.size(); ++k) all[k] = k;
  return all;
}

struct Outcome {
  json result;
  bool pass = false;
  int max_len = 0;
};

// Shared by the commands that need a certified algebra first.
bool require_one_qh(const QHContext& ctx, const RunConfig& c, json& result) {
  QHReport r = check_one_quasi_hereditary(ctx, c.seed);
  result["precondition"] = {{"one_quasi_hereditary", r.one_quasi_hereditary}, {"axioms", axioms_json(r)}};
  return r.one_quasi_hereditary;
}

Outcome poset_report(const RunConfig& c) {
  Poset p = load_poset(c);
  DimReport d = p.predicted_dims();
  json rows = json::array();
  for (int j : selected_vertices(c, p)) {
    rows.push_back({{"vertex", j + 1},
                    {"label", p.labels()[j]},
                    {"down_set", as_1based(p.down_set(j))},
                    {"up_set", as_1based(p.up_set(j))},
                    {"dim_standard", d.dim_standard[j]},
                    {"dim_projective", d.dim_projective[j]},
                    {"T_sequences", p.enumerate_sequences(j, SequenceKind::T).size()},
                    {"L_sequences", p.enumerate_sequences(j, SequenceKind::L).size()}});
  }
  Outcome o;
  o.result = {{"poset", io::poset_to_json(p)},
              {"vertices", rows},
              {"cartan", d.cartan},
              {"dim_algebra", d.dim_algebra},
              {"hasse_quiver", io::quiver_to_json(Quiver::doubled_hasse(p))}};
  o.pass = true;
  return o;
}

Outcome build(const RunConfig& c) {
  Loaded l = load_algebra(c);
  const auto& a = *l.in.algebra;
  int predicted = l.in.poset.predicted_dims().dim_algebra;
  Outcome o;
  o.max_len = l.in.max_len;
  o.result = {{"algebra", io::algebra_to_json(a, &l.in.poset)},
              {"dimension", a.dim()},
              {"predicted_dimension", predicted},
              {"matches_prediction", static_cast<int>(a.dim()) == predicted},
              {"length_bound", a.length_bound()}};
  o.pass = true;
  return o;
}

Outcome check(const RunConfig& c) {
  Loaded l = load_algebra(c);
  const Poset& p = l.in.poset;
  QHContext ctx = QHContext::make(p, l.in.algebra);
  QHReport r = check_one_quasi_hereditary(ctx, c.seed);
  QHReport rop = check_one_quasi_hereditary(opposite_context(ctx), c.seed);
  DimReport d = p.predicted_dims();

  bool dims_ok = r.dim_algebra == d.dim_algebra;
  json table = json::array();
  std::vector<std::vector<int>> cartan(p.size(), std::vector<int>(p.size()));
  for (int j = 0; j < p.size(); ++j) {
    int dp = static_cast<int>(l.in.algebra->basis_from(j).size());
    int dd = ctx.delta[j].total_dim();
    for (int k = 0; k < p.size(); ++k) cartan[j][k] = static_cast<int>(l.in.algebra->basis_block(j, k).size());
    dims_ok = dims_ok && dp == d.dim_projective[j] && dd == d.dim_standard[j];
    table.push_back({{"vertex", j + 1},
                     {"dim_projective", dp},
                     {"predicted_dim_projective", d.dim_projective[j]},
                     {"dim_standard", dd},
                     {"predicted_dim_standard", d.dim_standard[j]},
                     {"dim_costandard", ctx.nabla[j].total_dim()}});
  }
  dims_ok = dims_ok && cartan == d.cartan;
  bool quiver_ok = ext_quiver_counts(l.in.algebra) == arrow_counts(Quiver::doubled_hasse(p));

  Outcome o;
  o.max_len = l.in.max_len;
  o.result = {{"dimension", l.in.algebra->dim()},
              {"quasi_hereditary", r.quasi_hereditary},
              {"one_quasi_hereditary", r.one_quasi_hereditary},
              {"reciprocity", r.reciprocity},
              {"axioms", axioms_json(r)},
              {"dimension_table", table},
              {"cartan", cartan},
              {"predicted_cartan", d.cartan},
              {"dimension_law", dims_ok},
              {"ext_quiver", ext_quiver_counts(l.in.algebra)},
              {"quiver_law", quiver_ok},
              {"delta_composition", r.delta_composition},
              {"nabla_composition", r.nabla_composition},
              {"projective_multiplicity", r.projective_multiplicity},
              {"injective_multiplicity", r.injective_multiplicity},
              {"opposite_one_quasi_hereditary", rop.one_quasi_hereditary},
              {"opposite_agrees", rop.one_quasi_hereditary == r.one_quasi_hereditary}};
  // the laws follow from the axioms, so they only gate a passing verdict
  o.pass = r.one_quasi_hereditary && dims_ok && quiver_ok && rop.one_quasi_hereditary;
  return o;
}

Outcome basis(const RunConfig& c) {
  Loaded l = load_algebra(c);
  CanonicalPathTable t(l.in.poset, l.in.algebra->quiver());
  BasisReport r = verify_basis_theorem(*l.in.algebra, t);
  json blocks = json::array();
  for (const auto& b : r.blocks)
    blocks.push_back({{"j", b.j + 1},
                      {"k", b.k + 1},
                      {"apexes", as_1based(b.apexes)},
                      {"rank", b.rank},
                      {"block_dim", b.block_dim},
                      {"pass", b.pass}});
  Outcome o;
  o.max_len = l.in.max_len;
  o.result = {{"dimension", l.in.algebra->dim()}, {"canonical_paths", r.total}, {"blocks", blocks}, {"pass", r.pass}};
  o.pass = r.pass && r.total == static_cast<int>(l.in.algebra->dim());
  return o;
}

Outcome filtrations(const RunConfig& c) {
  Loaded l = load_algebra(c);
  const Poset& p = l.in.poset;
  QHContext ctx = QHContext::make(p, l.in.algebra);
  Outcome o;
  o.max_len = l.in.max_len;
  if (!c.dot.empty() && c.vertex == 0) throw UsageError("--dot needs --vertex");
  if (!require_one_qh(ctx, c, o.result)) return o;

  bool all_ok = true;
  json per_vertex = json::array();
  for (int j : selected_vertices(c, p)) {
    json kinds = json::array();
    for (FiltrationKind kind :
         {FiltrationKind::DeltaGood, FiltrationKind::JHDelta, FiltrationKind::NablaGood, FiltrationKind::JHNabla}) {
      bool jh = kind == FiltrationKind::JHDelta || kind == FiltrationKind::JHNabla;
      auto seqs = p.enumerate_sequences(j, jh ? SequenceKind::T : SequenceKind::L);
      auto oracle = brute_force_filtrations(ctx, j, kind, c.seed);
      std::vector<int> hits(oracle.size(), 0);
      json rows = json::array();
      bool ok = seqs.size() == oracle.size();
      for (const auto& s : seqs) {
        Filtration f = filtration_from_sequence(ctx, s, kind, c.seed);
        bool certified = true;
        for (auto v : certify_layers(ctx, f, c.seed)) certified = certified && v == SearchVerdict::Found;
        int matches = 0;
        for (std::size_t k = 0; k < oracle.size(); ++k)
          if (oracle[k].chain == f.chain && oracle[k].labels == f.labels) ++matches, ++hits[k];
        json layers = json::array();
        for (std::size_t t = 0; t < f.chain.size(); ++t) layers.push_back(f.layer_dims(static_cast<int>(t)));
        rows.push_back({{"sequence", as_1based(s.seq)},
                        {"labels", as_1based(f.labels)},
                        {"layer_dims", layers},
                        {"certified", certified},
                        {"oracle_matches", matches}});
        ok = ok && certified && matches == 1;
      }
      ok = ok && std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
      all_ok = all_ok && ok;
      kinds.push_back({{"kind", to_string(kind)},
                       {"sequence_count", seqs.size()},
                       {"oracle_count", oracle.size()},
                       {"bijection", ok},
                       {"filtrations", rows}});
    }
    per_vertex.push_back({{"vertex", j + 1}, {"kinds", kinds}});
  }
  if (!c.dot.empty()) io::write_text_file(c.dot, filtration_diagram_dot(ctx, c.vertex - 1, c.seed));
  o.result["vertices"] = per_vertex;
  o.pass = all_ok;
  return o;
}

json battery_row(const EquivalenceReport& r) {
  json conds = json::array();
  for (const auto& cond : r.conditions) conds.push_back(condition_json(cond));
  return {{"vertex", r.index + 1}, {"conditions", conds}, {"agree", r.agree}, {"value", r.value},
          {"witness", r.witness}};
}

bool battery_clean(const EquivalenceReport& r) {
  return r.agree && std::none_of(r.conditions.begin(), r.conditions.end(),
                                 [](const Condition& c) { return c.inconclusive; });
}

Outcome tilting(const RunConfig& c) {
  Loaded l = load_algebra(c);
  QHContext ctx = QHContext::make(l.in.poset, l.in.algebra);
  Outcome o;
  o.max_len = l.in.max_len;
  if (!require_one_qh(ctx, c, o.result)) return o;

  json rows = json::array();
  bool ok = true;
  if (c.vertex) {
    TiltingSummand t = tilting_candidate(ctx, checked_vertex(c, l.in.poset), c.seed);
    EquivalenceReport r = check_T_equivalences(ctx, t, c.seed);
    json row = battery_row(r);
    row["dims"] = t.module.dims();
    row["tilting"] = t.certified();
    rows.push_back(row);
    ok = battery_clean(r) && t.certified();
  } else {
    CharacteristicTilting ct = characteristic_tilting(ctx, c.seed);
    for (int i = 0; i < ctx.size(); ++i) {
      json row = battery_row(ct.battery[i]);
      row["dims"] = ct.summands[i].module.dims();
      row["tilting"] = ct.summands[i].certified();
      row["delta_multiplicity"] = ct.delta_multiplicity[i];
      row["nabla_multiplicity"] = ct.nabla_multiplicity[i];
      row["multiplicity_ok"] = static_cast<bool>(ct.multiplicity_ok[i]);
      rows.push_back(row);
      // multiplicity one is only predicted when T(i) has the formula shape
      ok = ok && battery_clean(ct.battery[i]) && ct.summands[i].certified() &&
           (ct.multiplicity_ok[i] || !ct.battery[i].value);
    }
    o.result["complete"] = ct.complete;
  }
  o.result["summands"] = rows;
  o.pass = ok;
  return o;
}

Outcome ringel(const RunConfig& c) {
  Loaded l = load_algebra(c);
  QHContext ctx = QHContext::make(l.in.poset, l.in.algebra);
  Outcome o;
  o.max_len = l.in.max_len;
  if (!require_one_qh(ctx, c, o.result)) return o;

  RingelReport r = ringel_report(ctx, c.seed);
  json table = json::array();
  bool ok = true;
  for (const auto& b : r.tilting.battery) {
    table.push_back(battery_row(b));
    ok = ok && battery_clean(b);
  }
  json checks = json::array();
  for (const auto& cond : r.checks) {
    checks.push_back(condition_json(cond));
    ok = ok && cond.value && !cond.inconclusive;
  }
  o.result["tilting"] = table;
  o.result["formula_all"] = r.formula_all;
  o.result["formula_inconclusive"] = r.formula_inconclusive;
  o.result["built"] = r.built;
  o.result["build_error"] = r.build_error;
  if (r.built) {
    const RingelDual& d = r.dual;
    json dual_algebra = io::algebra_to_json(*d.algebra, &d.poset);
    o.result["dual"] = {{"dimension", d.dim},
                        {"hom_dims", d.hom_dims},
                        {"associative", d.associative},
                        {"doubled_hasse", d.doubled_hasse},
                        {"vertex_of_summand", as_1based(d.vertex_of)},
                        {"one_quasi_hereditary", r.dual_one_qh},
                        {"inconclusive", r.dual_inconclusive},
                        {"axioms", axioms_json(r.dual_report)},
                        {"isomorphic_to_parent", to_string(r.isomorphic_to_parent)},
                        {"algebra", dual_algebra}};
    if (!c.export_algebra.empty()) io::write_text_file(c.export_algebra, dual_algebra.dump(2) + "\n");
  }
  o.result["biconditional"] = r.biconditional;
  o.result["checks"] = checks;
  o.pass = ok && r.biconditional && !r.formula_inconclusive && !r.dual_inconclusive;
  return o;
}

Outcome borel(const RunConfig& c) {
  Loaded l = load_algebra(c);
  QHContext ctx = QHContext::make(l.in.poset, l.in.algebra);
  UniquenessReport u = path_uniqueness_check(ctx);
  Outcome o;
  o.max_len = l.in.max_len;
  o.result["uniqueness"] = {{"pass", u.pass},
                            {"pairs_checked", u.pairs_checked},
                            {"paths_compared", u.paths_compared},
                            {"witness", u.witness}};
  if (!u.pass) return o;
  BorelPair b = borel_subalgebras(ctx);
  json ba = io::algebra_to_json(*b.borel, &l.in.poset);
  o.result["borel"] = ba;
  o.result["delta_subalgebra"] = io::algebra_to_json(*b.delta_subalgebra, &l.in.poset);
  o.result["comparable_pairs"] = b.comparable_pairs;
  o.result["borel_dimension"] = b.borel->dim();
  o.result["embeds"] = b.embeds;
  o.result["projectives_match"] = b.projectives_match;
  if (!c.export_algebra.empty()) io::write_text_file(c.export_algebra, ba.dump(2) + "\n");
  o.pass = b.uniqueness_certified && b.embeds && b.projectives_match &&
           static_cast<int>(b.borel->dim()) == b.comparable_pairs;
  return o;
}

std::vector<Scalar> parse_pool(const std::string& text, const Field& f) {
  std::vector<Scalar> pool;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      pool.push_back(f.parse(item));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--pool: ") + e.what());
    }
  }
  return pool;
}

Outcome search(const RunConfig& c) {
  Poset p = load_poset(c);
  Field f = io::parse_field(c.field);
  if (c.degree < 2) throw UsageError("--degree must be at least 2");
  int max_len = c.max_len > 0 ? c.max_len : 2 * p.size();
  SearchResult r = search_coefficients(p, parse_pool(c.pool, f), c.degree, max_len, c.budget, f, c.seed);
  Quiver q = Quiver::doubled_hasse(p);

  json templates = json::array();
  for (const auto& t : r.templates) templates.push_back({{"path", t.path.str(q)}, {"slots", as_1based(t.slots)}});
  json hits = json::array();
  for (const auto& h : r.hits) {
    json coeffs = json::array(), rels = json::array();
    std::size_t k = 0;
    for (const auto& t : r.templates) {
      json terms = json::array();
      for (int slot : t.slots) {
        const Scalar& s = h.coefficients[k++];
        coeffs.push_back(s.str());
        if (!s.is_zero()) terms.push_back({{"coeff", s.str()}, {"via", slot + 1}});
      }
      rels.push_back({{"path", as_1based(t.path.vertices(q))}, {"terms", terms}});
    }
    hits.push_back({{"coefficients", coeffs},
                    {"dimension", h.algebra->dim()},
                    {"instance", {{"poset", io::poset_to_json(p)}, {"relations", rels}}}});
  }
  Outcome o;
  o.max_len = max_len;
  o.result = {{"templates", templates},
              {"assignments", r.assignments},
              {"rejected", r.rejected},
              {"hit_count", r.hits.size()},
              {"hits", hits}};
  o.pass = true;
  return o;
}

Outcome dispatch(const RunConfig& c) {
  if (c.command == "poset-report") return poset_report(c);
  if (c.command == "build") return build(c);
  if (c.command == "check") return check(c);
  if (c.command == "basis") return basis(c);
  if (c.command == "filtrations") return filtrations(c);
  if (c.command == "tilting") return tilting(c);
  if (c.command == "ringel") return ringel(c);
  if (c.command == "borel") return borel(c);
  if (c.command == "search") return search(c);
  throw UsageError("unknown command '" + c.command + "'");
}

RunResult finish(const RunConfig& c, json report, int status) {
  RunResult out{status, report.dump(2) + "\n"};
  if (!c.out.empty()) {
    try {
      io::write_text_file(c.out, out.report);
    } catch (const Error& e) {
      json err{{"tool", versions()},
               {"config", report["config"]},
               {"error", {{"code", e.code()}, {"message", e.what()}}},
               {"status", "error"}};
      return {1, err.dump(2) + "\n"};
    }
  }
  return out;
}

}  // namespace

RunResult run(const RunConfig& config) {
  json report{{"tool", versions()}, {"config", config_json(config, config.max_len)}};
  try {
    if (config.seed == 0) throw UsageError("--seed must be positive");
    if (config.budget <= 0) throw UsageError("--budget must be positive");
    if (config.max_len < 0) throw UsageError("--max-len must be positive");
    Outcome o = dispatch(config);
    report["config"] = config_json(config, o.max_len);
    report["result"] = o.result;
    report["pass"] = o.pass;
    report["status"] = o.pass ? "pass" : "fail";
    return finish(config, report, o.pass ? 0 : 2);
  } catch (const Error& e) {
    bool verdict = is_verdict(e.code());
    report["error"] = {{"code", e.code()}, {"message", e.what()}};
    report["pass"] = false;
    report["status"] = verdict ? "fail" : "error";
    return finish(config, report, verdict ? 2 : 1);
  } catch (const std::exception& e) {
    report["error"] = {{"code", "InternalError"}, {"message", e.what()}};
    report["pass"] = false;
    report["status"] = "error";
    return finish(config, report, 1);
  }
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certify 1-quasi-hereditary algebras attached to finite bounded posets", "qhalg"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  RunConfig c;
  std::string input;

  for (const auto& name : commands()) {
    CLI::App* s = app.add_subcommand(name);
    s->add_option("input", input, "JSON input (poset or algebra)")->required();
    s->add_option("--field", c.field, "Q or F<p>")->capture_default_str();
    s->add_option("--max-len", c.max_len, "path length cap for the closure (default 2n)");
    s->add_option("--seed", c.seed, "seed for randomized isomorphism search")->capture_default_str();
    s->add_option("--budget", c.budget, "cap on search assignments")->capture_default_str();
    s->add_option("--out", c.out, "write the report here instead of stdout");
    s->add_option("--vertex", c.vertex, "restrict to one vertex (1-based)");
    s->add_flag("--allow-large", c.allow_large, "lift the n <= 10 guard");
    if (name == "filtrations") s->add_option("--dot", c.dot, "write the filtration diagram of --vertex as DOT");
    if (name == "ringel" || name == "borel")
      s->add_option("--export-algebra", c.export_algebra, "write the computed algebra as JSON");
    if (name == "search") {
      s->add_option("--pool", c.pool, "comma separated coefficient pool")->capture_default_str();
      s->add_option("--degree", c.degree, "longest template path")->capture_default_str();
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    json report{{"tool", versions()},
                {"error", {{"code", "UsageError"}, {"message", e.what()}}},
                {"pass", false},
                {"status", "error"}};
    out << report.dump(2) << "\n";
    err << "qhalg: " << e.what() << "\n";
    return 1;
  }
  for (const auto* s : app.get_subcommands()) c.command = s->get_name();
  c.inputs = {input};

  RunResult r = run(c);
  if (c.out.empty() || r.status == 1) out << r.report;
  if (r.status == 1) {
    json j = json::parse(r.report);
    if (j.contains("error")) err << "qhalg: " << j["error"]["code"].get<std::string>() << ": "
                                 << j["error"]["message"].get<std::string>() << "\n";
  }
  return r.status;
}

}  // namespace qhalg::cli

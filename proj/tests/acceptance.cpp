// One line per acceptance criterion; exit status is the number of failures.

#include <algorithm>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "qhalg/filtration.hpp"
#include "qhalg/io.hpp"
#include "qhalg/ringel.hpp"
#include "qhalg/search.hpp"
#include "qhalg/tilting.hpp"

using namespace qhalg;

namespace {

std::string data(const std::string& name) { return std::string(QHALG_DATA_DIR) + "/" + name; }

struct Named {
  std::string name;
  Poset poset;
  AlgebraPtr alg;
};

Named load(const std::string& name, const Field& f = Field::rationals()) {
  auto in = io::algebra_from_json(io::read_json_file(data(name + ".json")), f);
  return {name, in.poset, in.algebra};
}

const std::vector<std::string> kCertified{"chain2", "chain3", "diamond", "diamond_top"};

std::vector<Named> certified(const Field& f = Field::rationals()) {
  std::vector<Named> out;
  for (const auto& n : kCertified) out.push_back(load(n, f));
  return out;
}

// Oracles straight from the order relation.
int oracle_down(const Poset& p, int k) {
  int c = 0;
  for (int l = 0; l < p.size(); ++l) c += p.leq(l, k);
  return c;
}

int oracle_common_up(const Poset& p, int j, int k) {
  int c = 0;
  for (int i = 0; i < p.size(); ++i) c += p.leq(j, i) && p.leq(k, i);
  return c;
}

int oracle_dim_projective(const Poset& p, int j) {
  int d = 0;
  for (int i = 0; i < p.size(); ++i)
    if (p.leq(j, i)) d += oracle_down(p, i);
  return d;
}

int oracle_down_sets(const Poset& p) {
  int count = 0;
  for (int mask = 0; mask < (1 << p.size()); ++mask) {
    bool closed = true;
    for (int a = 0; a < p.size() && closed; ++a)
      for (int b = 0; b < p.size() && closed; ++b)
        if ((mask >> b & 1) && p.leq(a, b) && !(mask >> a & 1)) closed = false;
    count += closed;
  }
  return count;
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail.str("");
      pass = false;
      detail << what << "; ";
    }
  }
};

Outcome dimension_law() {
  Outcome o;
  for (const auto& x : certified()) {
    const Poset& p = x.poset;
    QHContext ctx = QHContext::make(p, x.alg);
    int total = 0;
    for (int j = 0; j < p.size(); ++j) {
      total += oracle_dim_projective(p, j);
      o.require(ctx.projective[j].total_dim() == oracle_dim_projective(p, j), x.name + " dim P(" + std::to_string(j + 1) + ")");
      o.require(ctx.delta[j].total_dim() == oracle_down(p, j), x.name + " dim Δ(" + std::to_string(j + 1) + ")");
      for (int k = 0; k < p.size(); ++k)
        o.require(static_cast<int>(x.alg->basis_block(j, k).size()) == oracle_common_up(p, j, k),
                  x.name + " cartan entry");
    }
    o.require(static_cast<int>(x.alg->dim()) == total, x.name + " dim A");
    if (o.pass) o.detail << x.name << " " << x.alg->dim() << " ";
  }
  const int desk[] = {5, 14, 25};
  for (int k = 0; k < 3; ++k) o.require(static_cast<int>(load(kCertified[k]).alg->dim()) == desk[k], "desk dims");
  return o;
}

Outcome quiver_law() {
  Outcome o;
  int arrows = 0;
  for (const auto& x : certified()) {
    auto counts = ext_quiver_counts(x.alg);
    const Poset& p = x.poset;
    for (int a = 0; a < p.size(); ++a)
      for (int b = 0; b < p.size(); ++b) {
        int want = p.covers(a, b) || p.covers(b, a) ? 1 : 0;
        o.require(counts[a][b] == want, x.name + " arrows " + std::to_string(a + 1) + "->" + std::to_string(b + 1));
        arrows += counts[a][b];
      }
    o.require(counts == arrow_counts(Quiver::doubled_hasse(p)), x.name + " doubled Hasse");
  }
  if (o.pass) o.detail << arrows << " arrows matched over " << kCertified.size() << " instances";
  return o;
}

Outcome basis_law() {
  Outcome o;
  for (const auto& x : certified()) {
    BasisReport r = verify_basis_theorem(*x.alg, CanonicalPathTable(x.poset, x.alg->quiver()));
    o.require(r.pass, x.name + " block check");
    o.require(r.total == static_cast<int>(x.alg->dim()), x.name + " |B| != dim A");
    if (o.pass) o.detail << x.name << " |B|=" << r.total << " ";
  }
  return o;
}

Outcome filtration_bijections() {
  Outcome o;
  int checked = 0;
  std::string desk;
  for (const auto& x : certified()) {
    QHContext ctx = QHContext::make(x.poset, x.alg);
    for (int j = 0; j < ctx.size(); ++j) {
      for (auto kind : {FiltrationKind::DeltaGood, FiltrationKind::JHDelta, FiltrationKind::NablaGood,
                        FiltrationKind::JHNabla}) {
        bool jh = kind == FiltrationKind::JHDelta || kind == FiltrationKind::JHNabla;
        auto seqs = x.poset.enumerate_sequences(j, jh ? SequenceKind::T : SequenceKind::L);
        auto oracle = brute_force_filtrations(ctx, j, kind);
        std::string at = x.name + " j=" + std::to_string(j + 1) + " " + to_string(kind);
        o.require(oracle.size() == seqs.size(), at + " count");
        std::vector<int> hits(oracle.size(), 0);
        for (const auto& s : seqs) {
          Filtration f = filtration_from_sequence(ctx, s, kind);
          for (std::size_t k = 0; k < oracle.size(); ++k)
            if (oracle[k].chain == f.chain && oracle[k].labels == f.labels) ++hits[k];
        }
        o.require(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }), at + " not a bijection");
        if (x.name == "diamond" && j == 0 && kind == FiltrationKind::DeltaGood)
          desk = std::to_string(oracle.size()) + " = " + std::to_string(seqs.size());
        ++checked;
      }
    }
  }
  o.require(desk == "2 = 2", "diamond j=1 desk check gave " + desk);
  if (o.pass) o.detail << checked << " (instance, j, kind) cases; diamond j=1: " << desk;
  return o;
}

Outcome submodule_law() {
  Outcome o;
  for (std::uint32_t p : {2u, 3u}) {
    for (const auto& x : certified(Field::prime(p))) {
      QHContext ctx = QHContext::make(x.poset, x.alg);
      const int n = ctx.size();
      const Representation& dn = ctx.delta[n - 1];
      auto subs = all_submodules(dn);
      std::string at = x.name + " over F" + std::to_string(p);
      int sums = 0;
      for (const auto& u : subs) {
        ElementSet support;
        for (int v = 0; v < n; ++v)
          if (u.parts[v].dim()) support.push_back(v);
        Submodule s = zero_submodule(dn);
        for (int i : support) s = submodule_sum(s, generated_by_vertices(dn, {i}));
        sums += s == u;
      }
      for (int i = 0; i < n; ++i)
        o.require(generated_by_vertices(dn, {i}).dim() == ctx.delta[i].total_dim(), at + " Δ(i) inside Δ(n)");
      o.require(sums == static_cast<int>(subs.size()), at + " a submodule is not a sum of Δ(i)");
      o.require(static_cast<int>(subs.size()) == oracle_down_sets(x.poset), at + " count differs from down-sets");
      if (o.pass) o.detail << at << ": " << subs.size() << " ";
    }
  }
  return o;
}

Outcome opposite_closure() {
  Outcome o;
  std::vector<Named> all = certified();
  all.push_back(load("broken/not_one_qh"));
  // chain2 with 1-2-1 = 0 instead of 2-1-2 = 0
  io::json bad = io::json::parse(R"({"poset": {"n": 2, "relations": [[1, 2]]},
                                     "relations": [{"path": [1, 2, 1], "terms": []}]})");
  auto in = io::algebra_from_json(bad, Field::rationals());
  all.push_back({"chain2 reversed", in.poset, in.algebra});
  int pass = 0, fail = 0;
  for (const auto& x : all) {
    QHContext ctx = QHContext::make(x.poset, x.alg);
    bool a = check_one_quasi_hereditary(ctx).one_quasi_hereditary;
    bool b = check_one_quasi_hereditary(opposite_context(ctx)).one_quasi_hereditary;
    o.require(a == b, x.name);
    (a ? pass : fail) += 1;
  }
  o.require(fail > 0, "no failing instance exercised");
  if (o.pass) o.detail << pass << " passing and " << fail << " failing instances agree with A^op";
  return o;
}

Outcome tilting_battery() {
  Outcome o;
  for (const auto& x : certified()) {
    QHContext ctx = QHContext::make(x.poset, x.alg);
    const int n = ctx.size();
    int yes = 0;
    for (int i = 0; i < n; ++i) {
      EquivalenceReport r = check_T_equivalences(ctx, i);
      std::string at = x.name + " i=" + std::to_string(i + 1);
      o.require(r.conditions.size() == 5 && r.agree, at + " disagree: " + r.witness);
      for (const auto& c : r.conditions) o.require(!c.inconclusive, at + " inconclusive " + c.name);
      if (x.name == "chain2" || x.name == "chain3") o.require(r.value, at + " expected true");
      yes += r.value;
    }
    auto iso = [&](const Representation& a, const Representation& b) {
      auto m = is_isomorphic(a, b);
      return m.verdict == SearchVerdict::Found && m.map && m.map->is_isomorphism();
    };
    o.require(iso(tilting_module(ctx, 0), ctx.simple[0]), x.name + " T(1) ≇ S(1)");
    o.require(iso(tilting_module(ctx, n - 1), ctx.projective[0]), x.name + " T(n) ≇ P(1)");
    for (int i : x.poset.upper_covers(0)) {
      ElementSet others;
      for (int j = 0; j < n; ++j)
        if (j != 0 && j != i) others.push_back(j);
      Representation m = quotient(ctx.projective[0], generated_by_vertices(ctx.projective[0], others)).module;
      o.require(iso(tilting_module(ctx, i), m), x.name + " cover case i=" + std::to_string(i + 1));
    }
    if (o.pass) o.detail << x.name << " " << yes << "/" << n << " true ";
  }
  return o;
}

Outcome ringel_biconditional() {
  Outcome o;
  Named c2 = load("chain2");
  QHContext ctx = QHContext::make(c2.poset, c2.alg);
  RingelReport r = ringel_report(ctx);
  o.require(r.built, "chain2 R(A) not built: " + r.build_error);
  if (!r.built) return o;
  o.require(r.dual.dim == 5, "chain2 dim R(A) = " + std::to_string(r.dual.dim));
  o.require(r.dual_one_qh, "chain2 R(A) not 1-qh");
  const Condition* a = r.find("(a)");
  o.require(a && a->value && !a->inconclusive, "chain2 P_R(n) ≅ I_R(n) ≅ T_R(1) not certified");
  o.require(r.formula_all && r.dual_one_qh && r.biconditional, "chain2 not true-true");

  // the searched instance: its relations are one {0,1} assignment of the
  // degree-2 templates, kept by the search filter
  Named dt = load("diamond_top");
  CanonicalPathTable t(dt.poset, Quiver::doubled_hasse(dt.poset));
  auto templates = relation_template(dt.poset, t, 2);
  const Field f = Field::rationals();
  std::vector<Scalar> coeffs;
  for (long v : {1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 1, 1, 0, 1}) coeffs.push_back(f.from_int(v));
  AlgebraPtr found =
      BoundQuiverAlgebra::build(Quiver::doubled_hasse(dt.poset), fill_templates(templates, coeffs, t, f), 12, f);
  o.require(found->basis() == dt.alg->basis() && found->dim() == dt.alg->dim(), "diamond_top is not the search hit");
  QHContext dctx = QHContext::make(dt.poset, dt.alg);
  o.require(check_one_quasi_hereditary(dctx).one_quasi_hereditary, "diamond_top not 1-qh");
  RingelReport rd = ringel_report(dctx);
  bool failing_t = std::any_of(rd.tilting.battery.begin(), rd.tilting.battery.end(),
                               [](const EquivalenceReport& e) { return e.agree && !e.value; });
  o.require(failing_t, "diamond_top has no failing T(i)");
  o.require(!rd.formula_all && !rd.formula_inconclusive, "diamond_top formula side not false");
  o.require(rd.built && !rd.dual_one_qh && !rd.dual_inconclusive, "diamond_top R(A) side not false");
  o.require(rd.biconditional, "diamond_top biconditional broken");
  if (o.pass)
    o.detail << "chain2 dim R=5 true-true; diamond_top dim R=" << rd.dual.dim << " false-false";
  return o;
}

Outcome reciprocity() {
  Outcome o;
  for (const auto& x : certified()) {
    QHReport r = check_one_quasi_hereditary(QHContext::make(x.poset, x.alg));
    const int n = x.poset.size();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int want = x.poset.leq(j, i) ? 1 : 0;
        std::string at = x.name + " (i,j)=(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
        o.require(r.delta_composition[i][j] == want, at + " [Δ(i):S(j)]");
        o.require(r.nabla_composition[i][j] == want, at + " [∇(i):S(j)]");
        o.require(r.projective_multiplicity[j][i] == want, at + " (P(j):Δ(i))");
        o.require(r.injective_multiplicity[j][i] == want, at + " (I(j):∇(i))");
      }
    if (o.pass) o.detail << x.name << " ";
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  struct Run {
    const char* cmd;
    const char* file;
  };
  int runs = 0;
  for (auto [cmd, file] : {Run{"poset-report", "diamond.json"}, Run{"build", "diamond.json"},
                           Run{"check", "diamond.json"}, Run{"basis", "diamond.json"},
                           Run{"filtrations", "diamond.json"}, Run{"tilting", "chain3.json"},
                           Run{"ringel", "chain3.json"}, Run{"borel", "diamond.json"},
                           Run{"search", "chain3_poset.json"}, Run{"check", "broken/not_bounded.json"}}) {
    cli::RunConfig c;
    c.command = cmd;
    c.inputs = {data(file)};
    c.seed = 17;
    auto a = cli::run(c), b = cli::run(c);
    o.require(a.report == b.report && a.status == b.status, std::string(cmd) + " differs between runs");
    ++runs;
  }
  if (o.pass) o.detail << runs << " commands byte-identical";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "dimension law", dimension_law},
      {2, "quiver law", quiver_law},
      {3, "basis law", basis_law},
      {4, "filtration bijections", filtration_bijections},
      {5, "submodule law", submodule_law},
      {6, "opposite closure", opposite_closure},
      {7, "tilting battery", tilting_battery},
      {8, "ringel biconditional", ringel_biconditional},
      {9, "reciprocity", reciprocity},
      {10, "determinism", determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail.str(std::string("threw: ") + e.what());
    }
    failures += !o.pass;
    std::cout << "criterion " << c.id << " " << (o.pass ? "PASS" : "FAIL") << " " << c.name << ": "
              << o.detail.str() << std::endl;
  }
  return failures;
}

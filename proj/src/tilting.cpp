#include "qhalg/tilting.hpp"

#include <algorithm>
#include <numeric>

#include "qhalg/errors.hpp"

namespace qhalg {

namespace {

std::string vname(int v) { return std::to_string(v + 1); }

ElementSet complement(int n, const ElementSet& s) {
  ElementSet all(n);
  std::iota(all.begin(), all.end(), 0);
  return set_difference(all, s);
}

int sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

// Dimension vectors of the radical and socle series.
std::vector<std::vector<int>> loewy_profile(const Representation& m) {
  std::vector<std::vector<int>> out;
  Submodule r = whole_module(m);
  while (r.dim() > 0) {
    out.push_back(r.dims());
    SubRep s = as_representation(m, r);
    Submodule next = radical(s.module);
    Submodule in_m;
    for (int v = 0; v < m.vertices(); ++v) {
      std::vector<Vec> vs;
      for (std::size_t k = 0; k < next.parts[v].dim(); ++k)
        vs.push_back(s.inclusion.comp[v].apply(next.parts[v].basis_vector(k)));
      in_m.parts.push_back(Subspace::span(vs, m.dim(v), m.field()));
    }
    if (in_m == r) break;
    r = in_m;
  }
  out.push_back(socle_dims(m));
  return out;
}

// Isomorphism search backed by cheap invariants that can refute it.
SearchVerdict decide_iso(const Representation& a, const Representation& b, std::uint64_t seed) {
  if (a.dims() != b.dims()) return SearchVerdict::NotFound;
  if (socle_dims(a) != socle_dims(b) || top_dims(a) != top_dims(b)) return SearchVerdict::NotFound;
  if (loewy_profile(a) != loewy_profile(b)) return SearchVerdict::NotFound;
  return is_isomorphic(a, b, seed).verdict;
}

Condition from_verdict(const std::string& name, SearchVerdict v, const std::string& detail) {
  Condition c{name, v == SearchVerdict::Found, v == SearchVerdict::Inconclusive, detail};
  return c;
}

}  // namespace

int FactorAlgebra::local(int parent_vertex) const {
  auto it = std::find(members.begin(), members.end(), parent_vertex);
  if (it == members.end()) throw ElementOutOfRange("vertex " + vname(parent_vertex) + " is not in the factor algebra");
  return static_cast<int>(it - members.begin());
}

FactorAlgebra factor_algebra(const QHContext& ctx, int i, std::uint64_t seed) {
  const int n = ctx.size();
  const BoundQuiverAlgebra& a = *ctx.alg;
  const Field& f = a.field();
  FactorAlgebra fa;
  fa.anchor = i;
  ElementSet down = ctx.poset.down_set(i);
  ElementSet outside = complement(n, down);
  fa.poset = ctx.poset.restrict(down);
  for (int k : fa.poset.original_index()) fa.members.push_back(down[k]);

  std::vector<int> to_local(n, -1);
  for (std::size_t k = 0; k < fa.members.size(); ++k) to_local[fa.members[k]] = static_cast<int>(k);

  Quiver q = Quiver::doubled_hasse(fa.poset);
  std::vector<Relation> rels;
  for (const Relation& r : a.relations()) {
    Relation out;
    for (const Term& t : r.terms) {
      std::vector<int> vs = t.path.vertices(a.quiver());
      if (std::any_of(vs.begin(), vs.end(), [&](int v) { return to_local[v] < 0; })) continue;
      for (int& v : vs) v = to_local[v];
      out.terms.push_back({t.coeff, path_from_vertices(q, vs)});
    }
    if (!out.terms.empty()) rels.push_back(std::move(out));
  }
  int max_len = std::max(2 * static_cast<int>(fa.members.size()) + 2, a.length_bound() + 2);
  fa.algebra = BoundQuiverAlgebra::build(q, rels, max_len, f);

  const std::size_t dim = a.dim();
  CanonicalPathTable table(ctx.poset, a.quiver());
  for (const auto& [key, path] : table.entries())
    if (to_local[std::get<1>(key)] < 0) fa.ideal_basis.push_back(path);
  Subspace ideal(dim, f);
  for (int l : outside)
    for (int x : a.basis_from(l))
      for (int y : a.basis_to(l)) ideal.insert(a.product(x, y).dense(dim, f));
  fa.ideal_dim = static_cast<int>(ideal.dim());
  std::vector<Vec> units;
  for (const Path& p : fa.ideal_basis) units.push_back(a.normal_form(p).dense(dim, f));
  fa.ideal_spanned_by_paths = Subspace::span(units, dim, f) == ideal;
  fa.dim_consistent = static_cast<int>(fa.algebra->dim()) == static_cast<int>(dim) - fa.ideal_dim;
  fa.report = check_one_quasi_hereditary(QHContext::make(fa.poset, fa.algebra), seed);
  return fa;
}

std::vector<ModuleMap> ext1_delta(const QHContext& ctx, int j, const Representation& y) {
  const Submodule& u = ctx.delta_kernel.at(j);
  if (u.dim() == 0) return {};
  const Field& f = y.field();
  SubRep us = as_representation(ctx.projective[j], u);
  std::vector<ModuleMap> homs = hom_space(us.module, y);
  if (homs.empty()) return {};
  Subspace seen(flatten(homs[0]).size(), f);
  for (int k = 0; k < y.dim(j); ++k) {
    ModuleMap g = yoneda_map(ctx.projective[j], y, unit_vec(y.dim(j), k, f));
    seen.insert(flatten(g.compose_after(us.inclusion)));
  }
  std::vector<ModuleMap> reps;
  for (const ModuleMap& h : homs)
    if (seen.insert(flatten(h))) reps.push_back(h);
  return reps;
}

namespace {

// Pushout of Y <- U^d -> P(j)^d along the given classes.
Representation universal_extension(const QHContext& ctx, int j, const Representation& y,
                                   const std::vector<ModuleMap>& classes) {
  const Representation& p = ctx.projective[j];
  const Submodule& u = ctx.delta_kernel[j];
  const Field& f = y.field();
  Representation s = y;
  for (std::size_t t = 0; t < classes.size(); ++t) s = direct_sum(s, p);
  std::vector<std::pair<int, Vec>> gens;
  for (std::size_t t = 0; t < classes.size(); ++t)
    for (int v = 0; v < s.vertices(); ++v)
      for (std::size_t k = 0; k < u.parts[v].dim(); ++k) {
        Vec g = zero_vec(s.dim(v), f);
        Vec image = classes[t].comp[v].apply(unit_vec(u.parts[v].dim(), k, f));
        for (int r = 0; r < y.dim(v); ++r) g[r] = image[r];
        Vec src = u.parts[v].basis_vector(k);
        const std::size_t off = y.dim(v) + t * p.dim(v);
        for (int r = 0; r < p.dim(v); ++r) g[off + r] = -src[r];
        gens.emplace_back(v, std::move(g));
      }
  return quotient(s, generated(s, gens)).module;
}

}  // namespace

Representation tilting_module(const QHContext& ctx, int i) {
  Representation y = ctx.delta.at(i);
  std::vector<int> order = ctx.poset.linear_extension();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (!ctx.poset.lt(*it, i)) continue;
    std::vector<ModuleMap> classes = ext1_delta(ctx, *it, y);
    if (!classes.empty()) y = universal_extension(ctx, *it, y, classes);
  }
  return y;
}

bool TiltingSummand::certified() const { return delta_filtration.ok && nabla_filtration.ok && ext_vanishes; }

TiltingSummand tilting_candidate(const QHContext& ctx, int i, std::uint64_t seed) {
  const int n = ctx.size();
  TiltingSummand t;
  t.index = i;
  t.module = tilting_module(ctx, i);
  ElementSet outside = complement(n, ctx.poset.down_set(i));
  t.candidate = quotient(ctx.projective[0], generated_by_vertices(ctx.projective[0], outside)).module;
  Representation pop = Representation::projective(ctx.op, 0);
  t.dual_candidate =
      as_representation(ctx.injective[0], annihilator(ctx.injective[0], generated_by_vertices(pop, outside))).module;

  t.delta_filtration = delta_good_filtration(ctx, t.module);
  t.nabla_filtration = nabla_good_filtration(ctx, t.module);
  t.ext_vanishes = true;
  for (int j = 0; j < n && t.ext_vanishes; ++j)
    if (!ext1_delta(ctx, j, t.module).empty()) t.ext_vanishes = false;
  t.soc_simple = sum(socle_dims(t.module)) == 1;
  t.top_simple = sum(top_dims(t.module)) == 1;
  t.formula_match = decide_iso(t.module, t.candidate, seed);
  t.dual_formula_match = decide_iso(t.module, t.dual_candidate, seed);
  if (t.soc_simple && t.top_simple) {
    t.candidate_delta_good = delta_good_filtration(ctx, t.candidate).ok;
    t.candidate_nabla_good = nabla_good_filtration(ctx, t.candidate).ok;
  }
  return t;
}

EquivalenceReport check_T_equivalences(const QHContext& ctx, int i, std::uint64_t seed) {
  return check_T_equivalences(ctx, tilting_candidate(ctx, i, seed), seed);
}

EquivalenceReport check_T_equivalences(const QHContext& ctx, const TiltingSummand& t, std::uint64_t seed) {
  EquivalenceReport r;
  r.index = t.index;
  FactorAlgebra fa = factor_algebra(ctx, t.index, seed);
  Condition c1{"(i) A(i) is 1-quasi-hereditary", fa.report.one_quasi_hereditary, false, ""};
  if (!c1.value) {
    bool decided = false;
    for (const auto& c : fa.report.checks) {
      if (c.pass || c.axiom == "reciprocity") continue;
      if (!c.inconclusive) decided = true;
      if (c1.detail.empty()) c1.detail = "axiom " + c.axiom + ": " + c.witness;
    }
    c1.inconclusive = !decided;
  }
  r.conditions.push_back(c1);
  r.conditions.push_back(
      from_verdict("(ii) T(i) ≅ P(1)/Σ P(l)", t.formula_match, to_string(t.formula_match)));
  r.conditions.push_back(
      from_verdict("(ii') T(i) ≅ ∩ ker(I(1) -> I(l))", t.dual_formula_match, to_string(t.dual_formula_match)));
  std::vector<int> soc = socle_dims(t.module), top = top_dims(t.module);
  r.conditions.push_back({"(iii) soc T(i) is simple", t.soc_simple, false, "dim soc = " + std::to_string(sum(soc))});
  r.conditions.push_back({"(iii') top T(i) is simple", t.top_simple, false, "dim top = " + std::to_string(sum(top))});

  const Condition* first = nullptr;
  r.agree = true;
  for (const auto& c : r.conditions) {
    if (c.inconclusive) continue;
    if (!first) {
      first = &c;
      continue;
    }
    if (c.value != first->value && r.agree) {
      r.agree = false;
      r.witness = "i=" + vname(t.index) + ": " + first->name + " is " + (first->value ? "true" : "false") +
                  " but " + c.name + " is " + (c.value ? "true" : "false");
    }
  }
  r.value = first && first->value;
  return r;
}

void certify(const EquivalenceReport& r) {
  if (!r.agree) throw EquivalenceViolated(r.witness);
}

CharacteristicTilting characteristic_tilting(const QHContext& ctx, std::uint64_t seed) {
  const int n = ctx.size();
  CharacteristicTilting c;
  c.complete = true;
  for (int i = 0; i < n; ++i) {
    TiltingSummand t = tilting_candidate(ctx, i, seed);
    EquivalenceReport e = check_T_equivalences(ctx, t, seed);
    ElementSet down = ctx.poset.down_set(i);
    std::vector<int> want(n, 0);
    for (int j : down) want[j] = 1;
    c.delta_multiplicity.push_back(t.delta_filtration.ok ? t.delta_filtration.multiplicity : std::vector<int>(n, -1));
    c.nabla_multiplicity.push_back(t.nabla_filtration.ok ? t.nabla_filtration.multiplicity : std::vector<int>(n, -1));
    c.multiplicity_ok.push_back(c.delta_multiplicity.back() == want && c.nabla_multiplicity.back() == want);
    bool positive = e.agree && e.value && t.certified();
    for (const auto& cond : e.conditions) positive = positive && !cond.inconclusive;
    c.complete = c.complete && positive;
    c.summands.push_back(std::move(t));
    c.battery.push_back(std::move(e));
  }
  return c;
}

}  // namespace qhalg

#include "qhalg/qh.hpp"

#include "qhalg/errors.hpp"

namespace qhalg {

QHContext QHContext::make(const Poset& p, AlgebraPtr alg) {
  if (alg->vertices() != p.size()) throw MixedAmbient("algebra and poset have different vertex counts");
  QHContext c;
  c.poset = p;
  c.alg = alg;
  c.op = alg->opposite();
  const int n = p.size();
  for (int i = 0; i < n; ++i) {
    c.projective.push_back(Representation::projective(alg, i));
    c.injective.push_back(Representation::injective(alg, c.op, i));
    c.simple.push_back(Representation::simple(alg, i));
    Representation pi = c.projective.back();
    ElementSet outside;
    for (int j = 0; j < n; ++j)
      if (!p.leq(j, i)) outside.push_back(j);
    c.delta_kernel.push_back(generated_by_vertices(pi, outside));
    c.delta.push_back(quotient(pi, c.delta_kernel.back()).module);
    c.delta_op.push_back(standard_module(c.op, p, i).module);
    c.nabla.push_back(dualize(c.delta_op.back(), alg));
  }
  return c;
}

QuotientRep standard_module(const AlgebraPtr& alg, const Poset& p, int i) {
  Representation pi = Representation::projective(alg, i);
  ElementSet outside;
  for (int j = 0; j < p.size(); ++j)
    if (!p.leq(j, i)) outside.push_back(j);
  return quotient(pi, generated_by_vertices(pi, outside));
}

Representation costandard_module(const AlgebraPtr& alg, const AlgebraPtr& op, const Poset& p, int i) {
  return dualize(standard_module(op, p, i).module, alg);
}

std::string to_string(FiltrationKind k) {
  switch (k) {
    case FiltrationKind::JHDelta: return "JH-delta";
    case FiltrationKind::JHNabla: return "JH-nabla";
    case FiltrationKind::DeltaGood: return "delta-good";
    case FiltrationKind::NablaGood: return "nabla-good";
  }
  return "?";
}

std::vector<int> Filtration::layer_dims(int t) const {
  std::vector<int> d = chain.at(t).dims();
  if (t > 0) {
    std::vector<int> below = chain[t - 1].dims();
    for (std::size_t v = 0; v < d.size(); ++v) d[v] -= below[v];
  }
  return d;
}

namespace {

std::string vname(int v) { return std::to_string(v + 1); }

GoodFiltrationResult trace_filtration(const Poset& p, const std::vector<Representation>& standards,
                                      const Representation& m) {
  GoodFiltrationResult r;
  r.filtration.ambient = m;
  r.multiplicity.assign(p.size(), 0);
  Submodule u = zero_submodule(m);
  std::vector<int> order = p.linear_extension();
  // vertices already visited are full in u, so M/u lives below the rest
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int j = *it;
    while (u.parts[j].dim() < static_cast<std::size_t>(m.dim(j))) {
      std::vector<std::pair<int, Vec>> gens;
      for (int v = 0; v < m.vertices(); ++v)
        for (std::size_t k = 0; k < u.parts[v].dim(); ++k) gens.emplace_back(v, u.parts[v].basis_vector(k));
      std::size_t c = u.parts[j].complement_columns().front();
      gens.emplace_back(j, unit_vec(m.dim(j), c, m.field()));
      Submodule next = generated(m, gens);
      for (int k = 0; k < m.vertices(); ++k)
        if (!p.leq(k, j) && next.parts[k].dim() != u.parts[k].dim()) {
          r.reason = "layer generated at " + vname(j) + " reaches S(" + vname(k) + ")";
          return r;
        }
      if (next.dim() - u.dim() != standards[j].total_dim()) {
        r.reason = "layer generated at " + vname(j) + " has dimension " + std::to_string(next.dim() - u.dim()) +
                   ", Δ(" + vname(j) + ") has " + std::to_string(standards[j].total_dim());
        return r;
      }
      u = std::move(next);
      r.filtration.chain.push_back(u);
      r.filtration.labels.push_back(j);
      ++r.multiplicity[j];
    }
  }
  r.ok = true;
  return r;
}

}  // namespace

GoodFiltrationResult delta_good_filtration(const QHContext& ctx, const Representation& m) {
  GoodFiltrationResult r = trace_filtration(ctx.poset, ctx.delta, m);
  r.filtration.kind = FiltrationKind::DeltaGood;
  return r;
}

Submodule annihilator(const Representation& m, const Submodule& u) {
  Submodule out;
  for (int v = 0; v < m.vertices(); ++v) {
    const Subspace& s = u.parts.at(v);
    if (s.dim() == 0)
      out.parts.push_back(Subspace::full(m.dim(v), m.field()));
    else
      out.parts.push_back(Subspace::span(nullspace(s.basis())));
    if (out.parts.back().ambient() != static_cast<std::size_t>(m.dim(v)))
      out.parts.back() = Subspace(m.dim(v), m.field());
  }
  return out;
}

GoodFiltrationResult nabla_good_filtration(const QHContext& ctx, const Representation& m) {
  Representation dm = dualize(m, ctx.op);
  GoodFiltrationResult d = trace_filtration(ctx.poset, ctx.delta_op, dm);
  GoodFiltrationResult r;
  r.ok = d.ok;
  r.reason = d.reason;
  r.multiplicity = d.multiplicity;
  r.filtration.ambient = m;
  r.filtration.kind = FiltrationKind::NablaGood;
  if (!d.ok) return r;
  const int len = static_cast<int>(d.filtration.chain.size());
  for (int s = 0; s < len; ++s) {
    int t = len - 2 - s;
    r.filtration.chain.push_back(t >= 0 ? annihilator(m, d.filtration.chain[t]) : whole_module(m));
    r.filtration.labels.push_back(d.filtration.labels[len - 1 - s]);
  }
  return r;
}

const AxiomCheck* QHReport::find(const std::string& axiom) const {
  for (const auto& c : checks)
    if (c.axiom == axiom) return &c;
  return nullptr;
}

QHReport check_quasi_hereditary(const QHContext& ctx) {
  QHReport r;
  const int n = ctx.size();
  r.predicted = ctx.poset.predicted_dims();
  r.dim_algebra = static_cast<int>(ctx.alg->dim());
  r.delta_composition.assign(n, std::vector<int>(n, 0));
  r.projective_multiplicity.assign(n, std::vector<int>(n, -1));

  AxiomCheck top{"qh.delta_top", true, false, ""};
  for (int i = 0; i < n; ++i) {
    r.dim_delta.push_back(ctx.delta[i].total_dim());
    for (int j = 0; j < n; ++j) r.delta_composition[i][j] = ctx.delta[i].dim(j);
    if (top.pass && ctx.delta[i].dim(i) != 1) {
      top.pass = false;
      top.witness = "[Δ(" + vname(i) + "):S(" + vname(i) + ")] = " + std::to_string(ctx.delta[i].dim(i));
    }
  }
  r.checks.push_back(top);

  AxiomCheck good{"qh.delta_good", true, false, ""};
  for (int j = 0; j < n; ++j) {
    GoodFiltrationResult f = delta_good_filtration(ctx, ctx.projective[j]);
    if (!f.ok) {
      if (good.pass) good.witness = "P(" + vname(j) + ") has no Δ-filtration: " + f.reason;
      good.pass = false;
      continue;
    }
    r.projective_multiplicity[j] = f.multiplicity;
    for (int i = 0; i < n && good.pass; ++i) {
      if (ctx.poset.lt(j, i)) continue;
      int got = f.multiplicity[i];
      if (got != (i == j ? 1 : 0)) {
        good.pass = false;
        good.witness = "(P(" + vname(j) + "):Δ(" + vname(i) + ")) = " + std::to_string(got);
      }
    }
  }
  r.checks.push_back(good);
  r.quasi_hereditary = top.pass && good.pass;
  return r;
}

QHReport check_one_quasi_hereditary(const QHContext& ctx, std::uint64_t seed) {
  QHReport r = check_quasi_hereditary(ctx);
  const int n = ctx.size();
  const Poset& p = ctx.poset;

  r.checks.push_back({"1", true, false, "least " + p.labels().front() + ", greatest " + p.labels().back()});

  AxiomCheck a2{"2", true, false, ""};
  for (int i = 0; i < n && a2.pass; ++i)
    for (int j : p.down_set(i)) {
      int comp = r.delta_composition[i][j];
      int mult = r.projective_multiplicity[j][i];
      if (comp != 1 || mult != 1) {
        a2.pass = false;
        a2.witness = "i=" + vname(i) + " j=" + vname(j) + ": [Δ(i):S(j)] = " + std::to_string(comp) +
                     ", (P(j):Δ(i)) = " + (mult < 0 ? std::string("undefined") : std::to_string(mult));
        break;
      }
    }
  r.checks.push_back(a2);

  AxiomCheck a3{"3", true, false, ""};
  std::vector<int> s1(n, 0);
  s1[0] = 1;
  for (int j = 0; j < n && a3.pass; ++j) {
    if (socle_dims(ctx.projective[j]) != s1) {
      a3.pass = false;
      a3.witness = "j=" + vname(j) + ": soc P(j) is not S(1)";
    } else if (top_dims(ctx.injective[j]) != s1) {
      a3.pass = false;
      a3.witness = "j=" + vname(j) + ": top I(j) is not S(1)";
    }
  }
  r.checks.push_back(a3);

  AxiomCheck a4{"4", true, false, ""};
  auto note = [&](const MapSearch& s, const std::string& what) {
    if (s.verdict == SearchVerdict::Found) return;
    if (s.verdict == SearchVerdict::Inconclusive) {
      if (a4.pass && !a4.inconclusive) a4.witness = what + ": search inconclusive (" + s.reason + ")";
      a4.inconclusive = true;
    } else {
      if (a4.pass || a4.inconclusive) a4.witness = what + ": " + s.reason;
      a4.inconclusive = false;
    }
    a4.pass = false;
  };
  for (int i = 0; i < n; ++i) {
    note(find_map(ctx.delta[i], ctx.delta[ctx.top()], MapKind::Injective, seed),
         "no injective map Δ(" + vname(i) + ") -> Δ(" + vname(ctx.top()) + ")");
    note(find_map(ctx.nabla[ctx.top()], ctx.nabla[i], MapKind::Surjective, seed),
         "no surjective map ∇(" + vname(ctx.top()) + ") -> ∇(" + vname(i) + ")");
  }
  r.checks.push_back(a4);

  r.nabla_composition.assign(n, std::vector<int>(n, 0));
  r.injective_multiplicity.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) {
    r.dim_nabla.push_back(ctx.nabla[i].total_dim());
    for (int j = 0; j < n; ++j) r.nabla_composition[i][j] = ctx.nabla[i].dim(j);
  }
  for (int j = 0; j < n; ++j) {
    GoodFiltrationResult f = nabla_good_filtration(ctx, ctx.injective[j]);
    if (f.ok) r.injective_multiplicity[j] = f.multiplicity;
  }
  AxiomCheck rec{"reciprocity", true, false, ""};
  for (int i = 0; i < n && rec.pass; ++i)
    for (int j = 0; j < n; ++j) {
      int want = p.leq(j, i) ? 1 : 0;
      int a = r.delta_composition[i][j], b = r.nabla_composition[i][j];
      int c = r.projective_multiplicity[j][i], d = r.injective_multiplicity[j][i];
      if (a != want || b != want || c != want || d != want) {
        rec.pass = false;
        rec.witness = "i=" + vname(i) + " j=" + vname(j) + ": " + std::to_string(a) + "," + std::to_string(b) + "," +
                      std::to_string(c) + "," + std::to_string(d) + " (expected " + std::to_string(want) + ")";
        break;
      }
    }
  r.checks.push_back(rec);
  r.reciprocity = rec.pass;

  r.one_quasi_hereditary = r.quasi_hereditary;
  for (const char* id : {"1", "2", "3", "4"}) r.one_quasi_hereditary = r.one_quasi_hereditary && r.find(id)->pass;
  return r;
}

void certify(const QHReport& r, bool require_one_qh) {
  for (const auto& c : r.checks) {
    bool qh_axiom = c.axiom.rfind("qh.", 0) == 0;
    if (c.pass || c.axiom == "reciprocity") continue;
    if (!qh_axiom && !require_one_qh) continue;
    if (c.inconclusive) throw Inconclusive("axiom " + c.axiom + ": " + c.witness);
    if (qh_axiom) throw NotQuasiHereditary("axiom " + c.axiom + ": " + c.witness);
    throw NotOneQuasiHereditary("axiom " + c.axiom + ": " + c.witness);
  }
}

BasisReport verify_basis_theorem(const BoundQuiverAlgebra& alg, const CanonicalPathTable& t) {
  BasisReport r;
  r.pass = true;
  const int n = alg.vertices();
  const Field& f = alg.field();
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      BasisBlock b;
      b.j = j;
      b.k = k;
      b.apexes = t.apexes(j, k);
      b.block_dim = static_cast<int>(alg.basis_block(j, k).size());
      Matrix rows(0, alg.dim(), f);
      for (int i : b.apexes) rows.append_row(alg.normal_form(t.get(j, i, k)).dense(alg.dim(), f));
      b.rank = static_cast<int>(rank(rows));
      b.pass = b.rank == static_cast<int>(b.apexes.size()) && b.rank == b.block_dim;
      r.pass = r.pass && b.pass;
      r.total += static_cast<int>(b.apexes.size());
      r.blocks.push_back(std::move(b));
    }
  r.pass = r.pass && r.total == static_cast<int>(alg.dim());
  return r;
}

void certify(const BasisReport& r) {
  for (const auto& b : r.blocks)
    if (!b.pass)
      throw BasisDefect("block (j,k) = (" + vname(b.j) + "," + vname(b.k) + "): " + std::to_string(b.apexes.size()) +
                        " canonical paths, rank " + std::to_string(b.rank) + ", block dimension " +
                        std::to_string(b.block_dim));
  if (!r.pass) throw BasisDefect("canonical paths number " + std::to_string(r.total) + ", not dim A");
}

std::vector<std::vector<int>> ext_quiver_counts(const AlgebraPtr& alg) {
  const int n = alg->vertices();
  const Quiver& q = alg->quiver();
  std::vector<std::vector<int>> counts(n, std::vector<int>(n, 0));
  for (int j = 0; j < n; ++j) {
    Representation pj = Representation::projective(alg, j);
    Submodule rad = radical(pj);
    Submodule rad2 = zero_submodule(pj);
    for (const Arrow& a : q.arrows()) {
      const Subspace& src = rad.parts[a.source];
      for (std::size_t k = 0; k < src.dim(); ++k) rad2.parts[a.target].insert(pj.action(a.id).apply(src.basis_vector(k)));
    }
    for (int k = 0; k < n; ++k)
      counts[j][k] = static_cast<int>(rad.parts[k].dim()) - static_cast<int>(rad2.parts[k].dim());
  }
  return counts;
}

Quiver ext_quiver(const AlgebraPtr& alg) {
  auto counts = ext_quiver_counts(alg);
  std::vector<Arrow> arrows;
  for (std::size_t j = 0; j < counts.size(); ++j)
    for (std::size_t k = 0; k < counts.size(); ++k)
      for (int c = 0; c < counts[j][k]; ++c)
        arrows.push_back({0, static_cast<int>(j), static_cast<int>(k), ArrowDir::None});
  return Quiver(static_cast<int>(counts.size()), std::move(arrows));
}

std::vector<std::vector<int>> arrow_counts(const Quiver& q) {
  std::vector<std::vector<int>> counts(q.vertices(), std::vector<int>(q.vertices(), 0));
  for (const Arrow& a : q.arrows()) ++counts[a.source][a.target];
  return counts;
}

}  // namespace qhalg

#include "qhalg/filtration.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "qhalg/errors.hpp"

namespace qhalg {

namespace {

std::string vname(int v) { return std::to_string(v + 1); }

bool is_jh(FiltrationKind k) { return k == FiltrationKind::JHDelta || k == FiltrationKind::JHNabla; }
bool is_nabla(FiltrationKind k) { return k == FiltrationKind::JHNabla || k == FiltrationKind::NablaGood; }
FiltrationKind delta_side(FiltrationKind k) { return is_jh(k) ? FiltrationKind::JHDelta : FiltrationKind::DeltaGood; }

std::vector<int> minus(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> d(a.size());
  for (std::size_t v = 0; v < a.size(); ++v) d[v] = a[v] - b[v];
  return d;
}

ElementSet subset(const ElementSet& members, unsigned mask) {
  ElementSet s;
  for (std::size_t b = 0; b < members.size(); ++b)
    if (mask >> b & 1) s.push_back(members[b]);
  return s;
}

Submodule embedded_standard(const Representation& src, const Representation& dst, int i, int j) {
  Submodule img;
  bool have = false;
  for (const ModuleMap& f : hom_space(src, dst)) {
    if (f.is_zero()) continue;
    Submodule u = image(f, dst);
    if (!have) {
      img = u;
      have = true;
    } else if (!(u == img)) {
      throw SubquotientMismatch("maps Δ(" + vname(i) + ") -> Δ(" + vname(j) + ") have different images");
    }
  }
  if (!have) throw SubquotientMismatch("no nonzero map Δ(" + vname(i) + ") -> Δ(" + vname(j) + ")");
  return img;
}

struct TraceLattice {
  std::vector<Submodule> nodes;
  std::vector<ElementSet> generators;  // first Λ reaching each node
  std::vector<std::vector<std::pair<int, int>>> out;  // (target node, label)
  int zero = -1, whole = -1;
};

TraceLattice trace_lattice(const QHContext& ctx, int j, bool jh, std::uint64_t seed) {
  const Representation& amb = jh ? ctx.delta[j] : ctx.projective[j];
  ElementSet members = jh ? ctx.poset.down_set(j) : ctx.poset.up_set(j);
  TraceLattice L;
  for (unsigned mask = 0; mask < (1u << members.size()); ++mask) {
    ElementSet lambda = subset(members, mask);
    Submodule u = generated_by_vertices(amb, lambda);
    if (std::find(L.nodes.begin(), L.nodes.end(), u) != L.nodes.end()) continue;
    L.nodes.push_back(std::move(u));
    L.generators.push_back(lambda);
  }
  const int m = static_cast<int>(L.nodes.size());
  L.out.assign(m, {});
  for (int x = 0; x < m; ++x) {
    if (L.nodes[x].dim() == 0) L.zero = x;
    if (L.nodes[x].dim() == amb.total_dim()) L.whole = x;
  }
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      if (x == y || !contains(L.nodes[y], L.nodes[x])) continue;
      std::vector<int> d = minus(L.nodes[y].dims(), L.nodes[x].dims());
      for (int k = 0; k < ctx.size(); ++k) {
        const Representation& label = jh ? ctx.simple[k] : ctx.delta[k];
        if (label.dims() != d) continue;
        if (!jh) {
          MapSearch s = is_isomorphic(subquotient(amb, L.nodes[y], L.nodes[x]), label, seed);
          if (s.verdict == SearchVerdict::Inconclusive)
            throw Inconclusive("layer test against Δ(" + vname(k) + ") inconclusive: " + s.reason);
          if (s.verdict != SearchVerdict::Found) continue;
        }
        L.out[x].emplace_back(y, k);
        break;
      }
    }
  return L;
}

}  // namespace

QHContext opposite_context(const QHContext& ctx) { return QHContext::make(ctx.poset, ctx.op); }

Representation subquotient(const Representation& m, const Submodule& big, const Submodule& small) {
  SubRep sub = as_representation(m, big);
  Submodule inner;
  for (int v = 0; v < m.vertices(); ++v) {
    std::vector<Vec> coords;
    for (std::size_t k = 0; k < small.parts.at(v).dim(); ++k)
      coords.push_back(big.parts[v].coordinates(small.parts[v].basis_vector(k)));
    inner.parts.push_back(Subspace::span(coords, big.parts[v].dim(), m.field()));
  }
  return quotient(sub.module, inner).module;
}

Filtration dual_filtration(const Filtration& f, const Representation& dual_ambient, FiltrationKind kind) {
  Filtration out;
  out.ambient = dual_ambient;
  out.kind = kind;
  const int len = static_cast<int>(f.chain.size());
  for (int s = 0; s < len; ++s) {
    int t = len - 2 - s;
    out.chain.push_back(t >= 0 ? annihilator(dual_ambient, f.chain[t]) : whole_module(dual_ambient));
    out.labels.push_back(f.labels[len - 1 - s]);
  }
  return out;
}

void check_sequence(const Poset& p, const AdmissibleSequence& seq) {
  ElementSet want = seq.kind == SequenceKind::T ? p.down_set(seq.anchor) : p.up_set(seq.anchor);
  ElementSet got(seq.seq.begin(), seq.seq.end());
  std::sort(got.begin(), got.end());
  const char* name = seq.kind == SequenceKind::T ? "T" : "L";
  if (got != want)
    throw SequenceRejected(std::string("sequence does not order the ") + name + "-set " + format_set(want) + " of " +
                           vname(seq.anchor));
  for (std::size_t a = 0; a < seq.seq.size(); ++a)
    for (std::size_t b = a + 1; b < seq.seq.size(); ++b)
      if (p.lt(seq.seq[b], seq.seq[a]))
        throw SequenceRejected(vname(seq.seq[a]) + " precedes the smaller element " + vname(seq.seq[b]));
}

std::vector<SearchVerdict> certify_layers(const QHContext& ctx, const Filtration& f, std::uint64_t seed) {
  std::vector<SearchVerdict> out;
  Submodule below = zero_submodule(f.ambient);
  for (std::size_t t = 0; t < f.chain.size(); ++t) {
    Representation layer = subquotient(f.ambient, f.chain[t], below);
    below = f.chain[t];
    int k = f.labels[t];
    const Representation& label = is_jh(f.kind) ? ctx.simple[k] : is_nabla(f.kind) ? ctx.nabla[k] : ctx.delta[k];
    if (layer.dims() != label.dims())
      out.push_back(SearchVerdict::NotFound);
    else if (is_jh(f.kind))
      out.push_back(SearchVerdict::Found);
    else
      out.push_back(is_isomorphic(layer, label, seed).verdict);
  }
  return out;
}

Filtration filtration_from_sequence(const QHContext& ctx, const AdmissibleSequence& seq, FiltrationKind kind,
                                    std::uint64_t seed) {
  if (is_jh(kind) != (seq.kind == SequenceKind::T))
    throw SequenceRejected(to_string(kind) + " filtrations take " + (is_jh(kind) ? "T" : "L") + "-sequences");
  check_sequence(ctx.poset, seq);
  const int j = seq.anchor;
  Filtration f;
  if (is_nabla(kind)) {
    Filtration g = filtration_from_sequence(opposite_context(ctx), seq, delta_side(kind), seed);
    f = dual_filtration(g, dualize(g.ambient, ctx.alg), kind);
  } else if (kind == FiltrationKind::JHDelta) {
    f.ambient = ctx.delta[j];
    f.kind = kind;
    Submodule acc = zero_submodule(f.ambient);
    for (int i : seq.seq) {
      acc = submodule_sum(acc, embedded_standard(ctx.delta[i], ctx.delta[j], i, j));
      f.chain.push_back(acc);
      f.labels.push_back(i);
    }
  } else {
    f.ambient = ctx.projective[j];
    f.kind = kind;
    const int r = static_cast<int>(seq.seq.size());
    for (int t = r - 1; t >= 0; --t) {
      ElementSet tail(seq.seq.begin() + t, seq.seq.end());
      std::sort(tail.begin(), tail.end());
      f.chain.push_back(generated_by_vertices(f.ambient, tail));
      f.labels.push_back(seq.seq[t]);
    }
  }
  std::vector<SearchVerdict> v = certify_layers(ctx, f, seed);
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (v[t] == SearchVerdict::Inconclusive)
      throw Inconclusive("layer " + std::to_string(t + 1) + " of the " + to_string(kind) + " filtration");
    if (v[t] != SearchVerdict::Found)
      throw SubquotientMismatch("layer " + std::to_string(t + 1) + " of the " + to_string(kind) +
                                " filtration is not isomorphic to its label " + vname(f.labels[t]));
  }
  return f;
}

std::vector<Filtration> brute_force_filtrations(const QHContext& ctx, int j, FiltrationKind kind,
                                                std::uint64_t seed) {
  if (is_nabla(kind)) {
    std::vector<Filtration> out;
    for (const Filtration& g : brute_force_filtrations(opposite_context(ctx), j, delta_side(kind), seed))
      out.push_back(dual_filtration(g, dualize(g.ambient, ctx.alg), kind));
    return out;
  }
  const bool jh = is_jh(kind);
  TraceLattice L = trace_lattice(ctx, j, jh, seed);
  std::vector<Filtration> out;
  Filtration cur;
  cur.ambient = jh ? ctx.delta[j] : ctx.projective[j];
  cur.kind = kind;
  std::function<void(int)> walk = [&](int x) {
    if (x == L.whole) {
      out.push_back(cur);
      return;
    }
    for (auto [y, k] : L.out[x]) {
      cur.chain.push_back(L.nodes[y]);
      cur.labels.push_back(k);
      walk(y);
      cur.chain.pop_back();
      cur.labels.pop_back();
    }
  };
  if (L.zero >= 0 && L.whole >= 0) walk(L.zero);
  return out;
}

QuotientMultiplicities quotient_multiplicities(const QHContext& ctx, const ElementSet& lambda1,
                                               const ElementSet& lambda2, bool nabla) {
  ElementSet c1 = ctx.poset.closure_up(lambda1), c2 = ctx.poset.closure_up(lambda2);
  if (!std::includes(c1.begin(), c1.end(), c2.begin(), c2.end()))
    throw ClosureNotNested("up-closure " + format_set(c2) + " is not contained in " + format_set(c1));
  QuotientMultiplicities r;
  r.predicted.assign(ctx.size(), 0);
  for (int k : set_difference(c1, c2)) r.predicted[k] = 1;
  GoodFiltrationResult g;
  if (nabla) {
    QuotientMultiplicities d = quotient_multiplicities(opposite_context(ctx), lambda1, lambda2, false);
    r.quotient = dualize(d.quotient, ctx.alg);
    g = nabla_good_filtration(ctx, r.quotient);
  } else {
    const Representation& p1 = ctx.projective[0];
    Submodule m1 = generated_by_vertices(p1, lambda1), m2 = generated_by_vertices(p1, lambda2);
    if (!contains(m1, m2)) throw ClosureNotNested("Σ P(l) over " + format_set(lambda2) + " is not inside the other sum");
    r.quotient = subquotient(p1, m1, m2);
    g = delta_good_filtration(ctx, r.quotient);
  }
  r.filtered = g.ok;
  r.multiplicity = g.ok ? g.multiplicity : std::vector<int>(ctx.size(), -1);
  r.matches = g.ok && r.multiplicity == r.predicted;
  return r;
}

std::vector<LocalModule> classify_local_delta_good(const QHContext& ctx, int j, std::uint64_t seed) {
  ElementSet others = set_difference(ctx.poset.up_set(j), {j});
  const Representation& pj = ctx.projective[j];
  std::vector<LocalModule> out;
  std::map<std::vector<int>, std::vector<std::size_t>> by_dims;
  std::vector<int> top(ctx.size(), 0);
  top[j] = 1;
  for (unsigned mask = 0; mask < (1u << others.size()); ++mask) {
    ElementSet lambda = subset(others, mask);
    Representation q = quotient(pj, generated_by_vertices(pj, lambda)).module;
    auto& bucket = by_dims[q.dims()];
    bool seen = false;
    for (std::size_t idx : bucket) {
      MapSearch s = is_isomorphic(out[idx].module, q, seed);
      if (s.verdict == SearchVerdict::Inconclusive)
        throw Inconclusive("isomorphism test between local quotients inconclusive: " + s.reason);
      if (s.verdict == SearchVerdict::Found) {
        seen = true;
        break;
      }
    }
    if (seen) continue;
    if (!delta_good_filtration(ctx, q).ok)
      throw SubquotientMismatch("P(" + vname(j) + ")/ΣP(l) over " + format_set(lambda) + " is not Δ-good");
    if (top_dims(q) != top)
      throw SubquotientMismatch("P(" + vname(j) + ")/ΣP(l) over " + format_set(lambda) + " does not have top S(" +
                                vname(j) + ")");
    bucket.push_back(out.size());
    out.push_back({lambda, std::move(q)});
  }
  return out;
}

std::string filtration_diagram_dot(const QHContext& ctx, int j, std::uint64_t seed) {
  TraceLattice L = trace_lattice(ctx, j, false, seed);
  std::ostringstream os;
  os << "digraph filtrations_P" << j + 1 << " {\n  rankdir=BT;\n";
  for (std::size_t x = 0; x < L.nodes.size(); ++x) {
    std::string name = L.nodes[x].dim() == 0 ? "0" : "P" + format_set(L.generators[x]);
    os << "  n" << x << " [label=\"" << name << "\\ndim " << L.nodes[x].dim() << "\"];\n";
  }
  for (std::size_t x = 0; x < L.out.size(); ++x)
    for (auto [y, k] : L.out[x]) os << "  n" << x << " -> n" << y << " [label=\"Δ(" << k + 1 << ")\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace qhalg

#include "qhalg/representation.hpp"

#include <deque>
#include <random>

#include "qhalg/errors.hpp"

namespace qhalg {

Representation::Representation(AlgebraPtr alg, std::vector<int> dims, std::vector<Matrix> action)
    : alg_(std::move(alg)), dims_(std::move(dims)), action_(std::move(action)) {
  const Quiver& q = alg_->quiver();
  if (static_cast<int>(dims_.size()) != q.vertices()) throw MixedAmbient("dimension vector length differs from vertex count");
  if (action_.size() != q.arrows().size()) throw MixedAmbient("one matrix per arrow required");
  for (const Arrow& a : q.arrows()) {
    const Matrix& m = action_[a.id];
    if (static_cast<int>(m.rows()) != dims_[a.target] || static_cast<int>(m.cols()) != dims_[a.source])
      throw MixedAmbient("arrow matrix has the wrong shape");
  }
}

int Representation::total_dim() const {
  int d = 0;
  for (int x : dims_) d += x;
  return d;
}

Matrix Representation::path_matrix(const Path& p) const {
  Matrix m = Matrix::identity(dims_.at(p.start), field());
  for (int a : p.arrows) m = action_.at(a) * m;
  return m;
}

Matrix Representation::element_matrix(const AlgebraElement& e, int s, int t) const {
  Matrix m(dims_.at(t), dims_.at(s), field());
  for (const auto& [b, c] : e.terms()) {
    const Path& p = alg_->basis()[b];
    if (p.start == s && p.end == t) m = m + path_matrix(p).scaled(c);
  }
  return m;
}

bool Representation::satisfies_relations() const {
  for (const Relation& r : alg_->relations()) {
    const Path& p0 = r.terms.front().path;
    Matrix m(dims_[p0.end], dims_[p0.start], field());
    for (const Term& t : r.terms) m = m + path_matrix(t.path).scaled(field().embed(t.coeff));
    if (!m.is_zero()) return false;
  }
  return true;
}

Representation Representation::zero(AlgebraPtr alg) {
  const Quiver& q = alg->quiver();
  std::vector<Matrix> act;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) act.emplace_back(0, 0, alg->field());
  return Representation(alg, std::vector<int>(q.vertices(), 0), std::move(act));
}

Representation Representation::simple(AlgebraPtr alg, int i) {
  const Quiver& q = alg->quiver();
  std::vector<int> dims(q.vertices(), 0);
  dims.at(i) = 1;
  std::vector<Matrix> act;
  for (const Arrow& a : q.arrows()) act.emplace_back(dims[a.target], dims[a.source], alg->field());
  return Representation(alg, dims, std::move(act));
}

Representation Representation::projective(AlgebraPtr alg, int i) {
  const Quiver& q = alg->quiver();
  const int n = q.vertices();
  std::vector<std::vector<int>> tags(n);
  std::vector<int> pos(alg->dim(), -1);
  for (int b : alg->basis_from(i)) {
    int v = alg->basis()[b].end;
    pos[b] = static_cast<int>(tags[v].size());
    tags[v].push_back(b);
  }
  std::vector<int> dims(n);
  for (int v = 0; v < n; ++v) dims[v] = static_cast<int>(tags[v].size());
  std::vector<Matrix> act;
  for (const Arrow& a : q.arrows()) {
    Matrix m(dims[a.target], dims[a.source], alg->field());
    AlgebraElement arrow = alg->normal_form(Path{a.source, a.target, {a.id}});
    for (std::size_t k = 0; k < tags[a.source].size(); ++k) {
      AlgebraElement img = alg->multiply(arrow, AlgebraElement::basis(tags[a.source][k], alg->field()));
      for (const auto& [b, c] : img.terms()) m(pos.at(b), k) = c;
    }
    act.push_back(std::move(m));
  }
  Representation p(alg, dims, std::move(act));
  p.proj_vertex_ = i;
  p.tags_ = std::move(tags);
  return p;
}

Representation Representation::injective(AlgebraPtr alg, AlgebraPtr op, int i) {
  return dualize(projective(std::move(op), i), std::move(alg));
}

Representation dualize(const Representation& m, AlgebraPtr target) {
  const Quiver& src = m.algebra()->quiver();
  const Quiver& dst = target->quiver();
  if (src.arrows().size() != dst.arrows().size() || src.vertices() != dst.vertices())
    throw MixedAmbient("dual target does not carry the opposite quiver");
  std::vector<Matrix> act;
  for (const Arrow& a : src.arrows()) {
    const Arrow& b = dst.arrow(a.id);
    if (b.source != a.target || b.target != a.source) throw MixedAmbient("dual target does not carry the opposite quiver");
    act.push_back(m.action(a.id).transpose());
  }
  return Representation(std::move(target), m.dims(), std::move(act));
}

Representation direct_sum(const Representation& a, const Representation& b) {
  const Quiver& q = a.algebra()->quiver();
  std::vector<int> dims(a.vertices());
  for (int v = 0; v < a.vertices(); ++v) dims[v] = a.dim(v) + b.dim(v);
  std::vector<Matrix> act;
  for (const Arrow& ar : q.arrows()) {
    Matrix m(dims[ar.target], dims[ar.source], a.field());
    const Matrix& x = a.action(ar.id);
    const Matrix& y = b.action(ar.id);
    for (std::size_t r = 0; r < x.rows(); ++r)
      for (std::size_t c = 0; c < x.cols(); ++c) m(r, c) = x(r, c);
    for (std::size_t r = 0; r < y.rows(); ++r)
      for (std::size_t c = 0; c < y.cols(); ++c) m(x.rows() + r, x.cols() + c) = y(r, c);
    act.push_back(std::move(m));
  }
  return Representation(a.algebra(), dims, std::move(act));
}

ModuleMap ModuleMap::compose_after(const ModuleMap& g) const {
  ModuleMap h;
  for (std::size_t v = 0; v < comp.size(); ++v) h.comp.push_back(comp[v] * g.comp[v]);
  return h;
}

ModuleMap ModuleMap::operator+(const ModuleMap& o) const {
  ModuleMap h;
  for (std::size_t v = 0; v < comp.size(); ++v) h.comp.push_back(comp[v] + o.comp[v]);
  return h;
}

ModuleMap ModuleMap::scaled(const Scalar& s) const {
  ModuleMap h;
  for (const auto& m : comp) h.comp.push_back(m.scaled(s));
  return h;
}

bool ModuleMap::is_zero() const {
  for (const auto& m : comp)
    if (!m.is_zero()) return false;
  return true;
}

bool ModuleMap::is_injective() const {
  for (const auto& m : comp)
    if (qhalg::rank(m) != m.cols()) return false;
  return true;
}

bool ModuleMap::is_surjective() const {
  for (const auto& m : comp)
    if (qhalg::rank(m) != m.rows()) return false;
  return true;
}

bool ModuleMap::is_isomorphism() const {
  for (const auto& m : comp)
    if (m.rows() != m.cols() || qhalg::rank(m) != m.rows()) return false;
  return true;
}

int ModuleMap::rank() const {
  int r = 0;
  for (const auto& m : comp) r += static_cast<int>(qhalg::rank(m));
  return r;
}

ModuleMap ModuleMap::dual() const {
  ModuleMap h;
  for (const auto& m : comp) h.comp.push_back(m.transpose());
  return h;
}

ModuleMap identity_map(const Representation& m) {
  ModuleMap f;
  for (int v = 0; v < m.vertices(); ++v) f.comp.push_back(Matrix::identity(m.dim(v), m.field()));
  return f;
}

Vec flatten(const ModuleMap& f) {
  Vec out;
  for (const Matrix& m : f.comp)
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m(r, c));
  return out;
}

ModuleMap unflatten(const Vec& v, const std::vector<int>& source_dims, const std::vector<int>& target_dims,
                    const Field& f) {
  ModuleMap out;
  std::size_t k = 0;
  for (std::size_t x = 0; x < source_dims.size(); ++x) {
    Matrix m(target_dims[x], source_dims[x], f);
    for (int r = 0; r < target_dims[x]; ++r)
      for (int c = 0; c < source_dims[x]; ++c) m(r, c) = v.at(k++);
    out.comp.push_back(std::move(m));
  }
  if (k != v.size()) throw MixedAmbient("flattened map has the wrong length");
  return out;
}

ModuleMap zero_map(const Representation& m, const Representation& n) {
  ModuleMap f;
  for (int v = 0; v < m.vertices(); ++v) f.comp.emplace_back(n.dim(v), m.dim(v), m.field());
  return f;
}

bool is_homomorphism(const ModuleMap& f, const Representation& m, const Representation& n) {
  for (const Arrow& a : m.algebra()->quiver().arrows())
    if (n.action(a.id) * f.comp[a.source] != f.comp[a.target] * m.action(a.id)) return false;
  return true;
}

int Submodule::dim() const {
  int d = 0;
  for (const auto& s : parts) d += static_cast<int>(s.dim());
  return d;
}

std::vector<int> Submodule::dims() const {
  std::vector<int> d;
  for (const auto& s : parts) d.push_back(static_cast<int>(s.dim()));
  return d;
}

Submodule zero_submodule(const Representation& m) {
  Submodule u;
  for (int v = 0; v < m.vertices(); ++v) u.parts.emplace_back(m.dim(v), m.field());
  return u;
}

Submodule whole_module(const Representation& m) {
  Submodule u;
  for (int v = 0; v < m.vertices(); ++v) u.parts.push_back(Subspace::full(m.dim(v), m.field()));
  return u;
}

Submodule generated(const Representation& m, const std::vector<std::pair<int, Vec>>& gens) {
  Submodule u = zero_submodule(m);
  const Quiver& q = m.algebra()->quiver();
  std::deque<std::pair<int, Vec>> work;
  for (const auto& [v, x] : gens)
    if (u.parts.at(v).insert(x)) work.emplace_back(v, x);
  while (!work.empty()) {
    auto [v, x] = std::move(work.front());
    work.pop_front();
    for (int a : q.out_arrows(v)) {
      int t = q.arrow(a).target;
      Vec y = m.action(a).apply(x);
      if (u.parts[t].insert(y)) work.emplace_back(t, std::move(y));
    }
  }
  return u;
}

Submodule generated_by_vertices(const Representation& m, const ElementSet& vertices) {
  std::vector<std::pair<int, Vec>> gens;
  for (int v : vertices)
    for (int k = 0; k < m.dim(v); ++k) gens.emplace_back(v, unit_vec(m.dim(v), k, m.field()));
  return generated(m, gens);
}

namespace {

void same_ambient(const Submodule& a, const Submodule& b) {
  if (a.parts.size() != b.parts.size()) throw MixedAmbient("submodules of different modules");
  for (std::size_t v = 0; v < a.parts.size(); ++v)
    if (a.parts[v].ambient() != b.parts[v].ambient()) throw MixedAmbient("submodules of different modules");
}

}  // namespace

Submodule submodule_sum(const Submodule& a, const Submodule& b) {
  same_ambient(a, b);
  Submodule u;
  for (std::size_t v = 0; v < a.parts.size(); ++v) u.parts.push_back(a.parts[v].sum(b.parts[v]));
  return u;
}

Submodule submodule_intersect(const Submodule& a, const Submodule& b) {
  same_ambient(a, b);
  Submodule u;
  for (std::size_t v = 0; v < a.parts.size(); ++v) u.parts.push_back(a.parts[v].intersect(b.parts[v]));
  return u;
}

bool is_submodule(const Representation& m, const Submodule& u) {
  for (const Arrow& a : m.algebra()->quiver().arrows()) {
    const Subspace& src = u.parts[a.source];
    for (std::size_t k = 0; k < src.dim(); ++k)
      if (!u.parts[a.target].contains(m.action(a.id).apply(src.basis_vector(k)))) return false;
  }
  return true;
}

bool contains(const Submodule& big, const Submodule& small) {
  same_ambient(big, small);
  for (std::size_t v = 0; v < big.parts.size(); ++v)
    if (!small.parts[v].is_subspace_of(big.parts[v])) return false;
  return true;
}

std::vector<Subspace> all_subspaces(std::size_t d, const Field& f, long budget) {
  if (!f.p) throw Inconclusive("subspace enumeration needs a finite field");
  std::vector<Subspace> out;
  // pivot sets as bitmasks, then every filling of the free echelon entries
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    std::vector<std::size_t> piv;
    for (std::size_t c = 0; c < d; ++c)
      if (mask >> c & 1) piv.push_back(c);
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < piv.size(); ++r)
      for (std::size_t c = piv[r] + 1; c < d; ++c)
        if (!(mask >> c & 1)) free.emplace_back(r, c);
    std::vector<std::uint32_t> digit(free.size(), 0);
    while (true) {
      if (static_cast<long>(out.size()) >= budget)
        throw BudgetExceeded("more than " + std::to_string(budget) + " subspaces of F" + std::to_string(f.p) +
                             "^" + std::to_string(d));
      Matrix rows(piv.size(), d, f);
      for (std::size_t r = 0; r < piv.size(); ++r) rows(r, piv[r]) = f.one();
      for (std::size_t k = 0; k < free.size(); ++k) rows(free[k].first, free[k].second) = f.from_int(digit[k]);
      out.push_back(Subspace::span(rows));
      std::size_t k = 0;
      while (k < digit.size() && ++digit[k] == f.p) digit[k++] = 0;
      if (k == digit.size()) break;
    }
  }
  return out;
}

std::vector<Submodule> all_submodules(const Representation& m, long budget) {
  std::vector<std::vector<Subspace>> choices;
  long total = 1;
  for (int v = 0; v < m.vertices(); ++v) {
    choices.push_back(all_subspaces(m.dim(v), m.field(), budget));
    total *= static_cast<long>(choices.back().size());
    if (total > budget) throw BudgetExceeded("more than " + std::to_string(budget) + " candidate submodules");
  }
  std::vector<Submodule> out;
  std::vector<std::size_t> at(choices.size(), 0);
  while (true) {
    Submodule u;
    for (std::size_t v = 0; v < choices.size(); ++v) u.parts.push_back(choices[v][at[v]]);
    if (is_submodule(m, u)) out.push_back(std::move(u));
    std::size_t v = 0;
    while (v < at.size() && ++at[v] == choices[v].size()) at[v++] = 0;
    if (v == at.size()) break;
  }
  return out;
}

Submodule radical(const Representation& m) {
  Submodule u = zero_submodule(m);
  for (const Arrow& a : m.algebra()->quiver().arrows()) {
    const Matrix& x = m.action(a.id);
    if (x.rows() == 0 || x.cols() == 0) continue;
    u.parts[a.target] = u.parts[a.target].sum(Subspace::span(x.transpose()));
  }
  return u;
}

Submodule socle(const Representation& m) {
  Submodule u = whole_module(m);
  for (const Arrow& a : m.algebra()->quiver().arrows()) {
    const Matrix& x = m.action(a.id);
    if (x.cols() == 0) continue;
    u.parts[a.source] = u.parts[a.source].intersect(Subspace::span(nullspace(x)));
  }
  return u;
}

Submodule image(const ModuleMap& f, const Representation& n) {
  Submodule u;
  for (int v = 0; v < n.vertices(); ++v) {
    const Matrix& x = f.comp[v];
    u.parts.push_back(x.cols() == 0 ? Subspace(n.dim(v), n.field()) : Subspace::span(x.transpose()));
  }
  return u;
}

Submodule kernel(const ModuleMap& f, const Representation& m) {
  Submodule u;
  for (int v = 0; v < m.vertices(); ++v) u.parts.push_back(Subspace::span(nullspace(f.comp[v])));
  return u;
}

SubRep as_representation(const Representation& m, const Submodule& u) {
  const Quiver& q = m.algebra()->quiver();
  std::vector<int> dims = u.dims();
  std::vector<Matrix> act;
  for (const Arrow& a : q.arrows()) {
    Matrix x(dims[a.target], dims[a.source], m.field());
    const Subspace& src = u.parts[a.source];
    const Subspace& dst = u.parts[a.target];
    for (std::size_t k = 0; k < src.dim(); ++k) {
      Vec y = m.action(a.id).apply(src.basis_vector(k));
      if (!dst.contains(y)) throw MixedAmbient("subspace family is not closed under the arrows");
      x.set_col(k, dst.coordinates(y));
    }
    act.push_back(std::move(x));
  }
  ModuleMap inc;
  for (int v = 0; v < m.vertices(); ++v) inc.comp.push_back(u.parts[v].basis().transpose());
  return {Representation(m.algebra(), dims, std::move(act)), std::move(inc)};
}

QuotientRep quotient(const Representation& m, const Submodule& u) {
  const Quiver& q = m.algebra()->quiver();
  const int n = m.vertices();
  std::vector<std::vector<std::size_t>> keep(n);
  std::vector<int> dims(n);
  ModuleMap proj;
  for (int v = 0; v < n; ++v) {
    keep[v] = u.parts[v].complement_columns();
    dims[v] = static_cast<int>(keep[v].size());
    Matrix p(dims[v], m.dim(v), m.field());
    for (int c = 0; c < m.dim(v); ++c) {
      Vec r = u.parts[v].reduce(unit_vec(m.dim(v), c, m.field()));
      for (std::size_t k = 0; k < keep[v].size(); ++k) p(k, c) = r[keep[v][k]];
    }
    proj.comp.push_back(std::move(p));
  }
  std::vector<Matrix> act;
  for (const Arrow& a : q.arrows()) {
    Matrix x(dims[a.target], dims[a.source], m.field());
    for (std::size_t k = 0; k < keep[a.source].size(); ++k) {
      Vec y = m.action(a.id).col(keep[a.source][k]);
      x.set_col(k, proj.comp[a.target].apply(y));
    }
    act.push_back(std::move(x));
  }
  return {Representation(m.algebra(), dims, std::move(act)), std::move(proj)};
}

std::vector<int> top_dims(const Representation& m) {
  std::vector<int> d = m.dims();
  auto r = radical(m).dims();
  for (std::size_t v = 0; v < d.size(); ++v) d[v] -= r[v];
  return d;
}

std::vector<int> socle_dims(const Representation& m) { return socle(m).dims(); }

ModuleMap yoneda_map(const Representation& p, const Representation& n, const Vec& x) {
  const auto& tags = p.path_tags();
  const auto& basis = p.algebra()->basis();
  ModuleMap f;
  for (int v = 0; v < p.vertices(); ++v) {
    Matrix m(n.dim(v), p.dim(v), n.field());
    for (std::size_t k = 0; k < tags[v].size(); ++k) m.set_col(k, n.path_matrix(basis[tags[v][k]]).apply(x));
    f.comp.push_back(std::move(m));
  }
  return f;
}

std::vector<ModuleMap> hom_space(const Representation& m, const Representation& n) {
  std::vector<ModuleMap> out;
  const Field& f = m.field();
  if (m.projective_vertex() >= 0 && m.algebra() == n.algebra()) {
    int i = m.projective_vertex();
    for (int k = 0; k < n.dim(i); ++k) out.push_back(yoneda_map(m, n, unit_vec(n.dim(i), k, f)));
    return out;
  }
  const Quiver& q = m.algebra()->quiver();
  const int nv = m.vertices();
  std::vector<std::size_t> off(nv + 1, 0);
  for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + static_cast<std::size_t>(m.dim(v)) * n.dim(v);
  const std::size_t unknowns = off[nv];
  if (unknowns == 0) return out;
  std::size_t eqs = 0;
  for (const Arrow& a : q.arrows()) eqs += static_cast<std::size_t>(n.dim(a.target)) * m.dim(a.source);
  Matrix e(eqs, unknowns, f);
  std::size_t row = 0;
  for (const Arrow& a : q.arrows()) {
    const int s = a.source, t = a.target;
    const Matrix& na = n.action(a.id);
    const Matrix& ma = m.action(a.id);
    for (int r = 0; r < n.dim(t); ++r)
      for (int c = 0; c < m.dim(s); ++c, ++row) {
        // (N_a f_s)(r,c) - (f_t M_a)(r,c)
        for (int k = 0; k < n.dim(s); ++k)
          if (!na(r, k).is_zero()) e(row, off[s] + k * m.dim(s) + c) += na(r, k);
        for (int k = 0; k < m.dim(t); ++k)
          if (!ma(k, c).is_zero()) e(row, off[t] + r * m.dim(t) + k) -= ma(k, c);
      }
  }
  Matrix sol = nullspace(e);
  for (std::size_t h = 0; h < sol.rows(); ++h) {
    ModuleMap g;
    for (int v = 0; v < nv; ++v) {
      Matrix x(n.dim(v), m.dim(v), f);
      for (int r = 0; r < n.dim(v); ++r)
        for (int c = 0; c < m.dim(v); ++c) x(r, c) = sol(h, off[v] + r * m.dim(v) + c);
      g.comp.push_back(std::move(x));
    }
    out.push_back(std::move(g));
  }
  return out;
}

namespace {

bool has_kind(const ModuleMap& f, MapKind kind) {
  switch (kind) {
    case MapKind::Injective: return f.is_injective();
    case MapKind::Surjective: return f.is_surjective();
    case MapKind::Isomorphism: return f.is_isomorphism();
  }
  return false;
}

const char* kind_name(MapKind kind) {
  switch (kind) {
    case MapKind::Injective: return "injective";
    case MapKind::Surjective: return "surjective";
    case MapKind::Isomorphism: return "invertible";
  }
  return "";
}

constexpr std::size_t kSmallComboBudget = 4096;
constexpr int kRandomTries = 64;

MapSearch search_tiers(const std::vector<ModuleMap>& h, MapKind kind, const Field& f, std::uint64_t seed) {
  MapSearch res;
  for (const auto& g : h)
    if (has_kind(g, kind)) return {SearchVerdict::Found, g, 1, "basis element"};

  // {0, ±1} combinations of two or three basis maps
  std::size_t tried = 0;
  const std::size_t k = h.size();
  auto try_combo = [&](const std::vector<std::size_t>& idx, unsigned signs) -> std::optional<ModuleMap> {
    ModuleMap g = h[idx[0]];
    for (std::size_t t = 1; t < idx.size(); ++t)
      g = g + h[idx[t]].scaled((signs >> (t - 1)) & 1u ? -f.one() : f.one());
    ++tried;
    if (has_kind(g, kind)) return g;
    return std::nullopt;
  };
  for (std::size_t a = 0; a < k && tried < kSmallComboBudget; ++a)
    for (std::size_t b = a + 1; b < k && tried < kSmallComboBudget; ++b)
      for (unsigned s = 0; s < 2; ++s)
        if (auto g = try_combo({a, b}, s)) return {SearchVerdict::Found, *g, 2, "two-term combination"};
  for (std::size_t a = 0; a < k && tried < kSmallComboBudget; ++a)
    for (std::size_t b = a + 1; b < k && tried < kSmallComboBudget; ++b)
      for (std::size_t c = b + 1; c < k && tried < kSmallComboBudget; ++c)
        for (unsigned s = 0; s < 4; ++s)
          if (auto g = try_combo({a, b, c}, s)) return {SearchVerdict::Found, *g, 2, "three-term combination"};

  std::mt19937_64 rng(seed);
  for (int t = 0; t < kRandomTries; ++t) {
    ModuleMap g = h[0].scaled(f.zero());
    for (const auto& b : h) {
      long c = f.p ? static_cast<long>(rng() % f.p) : static_cast<long>(rng() % 2001) - 1000;
      g = g + b.scaled(f.from_int(c));
    }
    if (has_kind(g, kind)) return {SearchVerdict::Found, g, 3, "seeded random combination"};
  }
  res.verdict = SearchVerdict::Inconclusive;
  res.tier = 4;
  res.reason = std::string("no ") + kind_name(kind) + " map found by the search tiers";
  return res;
}

}  // namespace

MapSearch find_map(const Representation& m, const Representation& n, MapKind kind, std::uint64_t seed) {
  const Field& f = m.field();
  for (int v = 0; v < m.vertices(); ++v) {
    bool bad = (kind == MapKind::Injective && m.dim(v) > n.dim(v)) ||
               (kind == MapKind::Surjective && m.dim(v) < n.dim(v)) ||
               (kind == MapKind::Isomorphism && m.dim(v) != n.dim(v));
    if (bad) return {SearchVerdict::NotFound, std::nullopt, 0, "dimension vectors rule it out at vertex " + std::to_string(v + 1)};
  }
  if (m.total_dim() == 0 && (kind != MapKind::Surjective || n.total_dim() == 0))
    return {SearchVerdict::Found, zero_map(m, n), 0, "zero module"};
  auto h = hom_space(m, n);
  if (h.empty()) {
    if (kind == MapKind::Surjective && n.total_dim() == 0) return {SearchVerdict::Found, zero_map(m, n), 0, "zero target"};
    return {SearchVerdict::NotFound, std::nullopt, 0, "hom space is zero"};
  }
  return search_tiers(h, kind, f, seed);
}

MapSearch is_isomorphic(const Representation& m, const Representation& n, std::uint64_t seed) {
  if (m.dims() != n.dims()) return {SearchVerdict::NotFound, std::nullopt, 0, "dimension vectors differ"};
  if (m.total_dim() == 0) return {SearchVerdict::Found, identity_map(m), 0, "zero modules"};
  auto h = hom_space(m, n);
  if (h.empty()) return {SearchVerdict::NotFound, std::nullopt, 0, "hom space is zero"};
  auto end_n = hom_space(n, n);
  if (h.size() != end_n.size())
    return {SearchVerdict::NotFound, std::nullopt, 0, "dim Hom(M,N) differs from dim End(N)"};
  auto end_m = hom_space(m, m);
  if (end_m.size() != end_n.size()) return {SearchVerdict::NotFound, std::nullopt, 0, "dim End(M) differs from dim End(N)"};
  return search_tiers(h, MapKind::Isomorphism, m.field(), seed);
}

std::string to_string(SearchVerdict v) {
  switch (v) {
    case SearchVerdict::Found: return "found";
    case SearchVerdict::NotFound: return "not_found";
    case SearchVerdict::Inconclusive: return "inconclusive";
  }
  return "";
}

}  // namespace qhalg

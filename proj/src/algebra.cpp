#include "qhalg/algebra.hpp"

#include <algorithm>
#include <deque>

#include "qhalg/errors.hpp"

namespace qhalg {

AlgebraElement AlgebraElement::basis(int b, const Field& f) {
  AlgebraElement e;
  e.terms_[b] = f.one();
  return e;
}

Scalar AlgebraElement::coeff(int b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void AlgebraElement::add(int b, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(b, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void AlgebraElement::add(const AlgebraElement& o, const Scalar& c) {
  if (c.is_zero()) return;
  for (const auto& [b, x] : o.terms_) add(b, x * c);
}

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
  AlgebraElement e;
  e.add(*this, c);
  return e;
}

Vec AlgebraElement::dense(std::size_t dim, const Field& f) const {
  Vec v = zero_vec(dim, f);
  for (const auto& [b, x] : terms_) v.at(b) = x;
  return v;
}

AlgebraElement AlgebraElement::from_dense(const Vec& v) {
  AlgebraElement e;
  for (std::size_t b = 0; b < v.size(); ++b)
    if (!v[b].is_zero()) e.terms_[static_cast<int>(b)] = v[b];
  return e;
}

namespace {

// Larger terms first: longer paths, then lexicographically larger arrow lists.
struct TermOrder {
  bool operator()(const Path& a, const Path& b) const {
    if (a.length() != b.length()) return a.length() > b.length();
    if (a.start != b.start) return a.start > b.start;
    if (a.end != b.end) return a.end > b.end;
    return a.arrows > b.arrows;
  }
};

using SparseVec = std::map<Path, Scalar, TermOrder>;
using PivotRows = std::map<Path, SparseVec, TermOrder>;

void add_term(SparseVec& v, const Path& p, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = v.try_emplace(p, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) v.erase(it);
}

// Span of the relations closed under multiplication by arrows, modulo paths
// longer than L.
class Closure {
 public:
  Closure(const Quiver& q, const Field& f, int L) : q_(q), f_(f), L_(L) {}

  void insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return;
    Scalar inv = v.begin()->second.inverse();
    for (auto& [p, c] : v) c *= inv;
    const Path& lead = v.begin()->first;
    pivots_[{lead.start, lead.end}][lead] = v;
    work_.push_back(std::move(v));
  }

  void run() {
    while (!work_.empty()) {
      SparseVec v = std::move(work_.front());
      work_.pop_front();
      const Path& any = v.begin()->first;
      const int s = any.start, t = any.end;
      for (int a : q_.out_arrows(t)) {
        SparseVec w;
        for (const auto& [p, c] : v)
          if (static_cast<int>(p.length()) < L_) {
            Path np{s, q_.arrow(a).target, p.arrows};
            np.arrows.push_back(a);
            w.emplace(std::move(np), c);
          }
        if (!w.empty()) insert(std::move(w));
      }
      for (int a : q_.in_arrows(s)) {
        SparseVec w;
        for (const auto& [p, c] : v)
          if (static_cast<int>(p.length()) < L_) {
            Path np{q_.arrow(a).source, t, {a}};
            np.arrows.insert(np.arrows.end(), p.arrows.begin(), p.arrows.end());
            w.emplace(std::move(np), c);
          }
        if (!w.empty()) insert(std::move(w));
      }
    }
  }

  SparseVec reduce(SparseVec v) const {
    if (v.empty()) return v;
    auto blk = pivots_.find({v.begin()->first.start, v.begin()->first.end});
    if (blk == pivots_.end()) return v;
    const PivotRows& rows = blk->second;
    auto it = v.begin();
    while (it != v.end()) {
      auto row = rows.find(it->first);
      if (row == rows.end()) {
        ++it;
        continue;
      }
      Path key = it->first;
      Scalar c = it->second;
      for (const auto& [p, x] : row->second) add_term(v, p, -(c * x));
      it = v.upper_bound(key);
    }
    return v;
  }

  bool is_pivot(const Path& p) const {
    auto blk = pivots_.find({p.start, p.end});
    return blk != pivots_.end() && blk->second.count(p);
  }

 private:
  const Quiver& q_;
  Field f_;
  int L_;
  std::map<std::pair<int, int>, PivotRows> pivots_;
  std::deque<SparseVec> work_;
};

// All paths of each length 0..L, grouped by length.
std::vector<std::vector<Path>> paths_up_to(const Quiver& q, int L) {
  std::vector<std::vector<Path>> by_len(L + 1);
  for (int v = 0; v < q.vertices(); ++v) by_len[0].push_back(Path::trivial(v));
  for (int len = 1; len <= L; ++len)
    for (const Path& p : by_len[len - 1])
      for (int a : q.out_arrows(p.end)) {
        Path np = p;
        np.arrows.push_back(a);
        np.end = q.arrow(a).target;
        by_len[len].push_back(std::move(np));
      }
  return by_len;
}

void validate(const Quiver& q, const Relation& r) {
  if (r.terms.empty()) throw InadmissibleRelation("relation has no terms");
  const Path& first = r.terms.front().path;
  for (const Term& t : r.terms) {
    if (!is_valid_path(t.path, q)) throw InadmissibleRelation("relation term is not a path of the quiver");
    if (t.path.start != first.start || t.path.end != first.end)
      throw InadmissibleRelation("relation terms " + first.str(q) + " and " + t.path.str(q) +
                                 " have different endpoints");
    if (t.path.length() < 2)
      throw InadmissibleRelation("relation term " + t.path.str(q) + " has length < 2");
  }
}

}  // namespace

AlgebraPtr BoundQuiverAlgebra::build(const Quiver& q, const std::vector<Relation>& relations, int max_len,
                                     const Field& f) {
  int longest = 1;
  for (const Relation& r : relations) {
    validate(q, r);
    for (const Term& t : r.terms) longest = std::max(longest, static_cast<int>(t.path.length()));
  }

  for (int L = longest; L <= max_len; ++L) {
    Closure cl(q, f, L);
    for (const Relation& r : relations) {
      SparseVec v;
      for (const Term& t : r.terms) add_term(v, t.path, f.embed(t.coeff));
      cl.insert(std::move(v));
    }
    cl.run();
    auto by_len = paths_up_to(q, L);
    bool closed = std::all_of(by_len[L].begin(), by_len[L].end(), [&](const Path& p) { return cl.is_pivot(p); });
    if (!closed) continue;

    auto alg = std::make_shared<BoundQuiverAlgebra>();
    alg->field_ = f;
    alg->quiver_ = q;
    for (const Relation& r : relations) {
      Relation rr;
      for (const Term& t : r.terms) rr.terms.push_back({f.embed(t.coeff), t.path});
      alg->relations_.push_back(std::move(rr));
    }
    alg->length_bound_ = L - 1;
    for (int len = 0; len < L; ++len)
      for (const Path& p : by_len[len])
        if (!cl.is_pivot(p)) alg->basis_.push_back(p);
    std::stable_sort(alg->basis_.begin(), alg->basis_.end(), [](const Path& a, const Path& b) {
      if (a.start != b.start) return a.start < b.start;
      if (a.length() != b.length()) return a.length() < b.length();
      return a.arrows < b.arrows;
    });
    alg->index();

    const std::size_t d = alg->basis_.size();
    alg->mult_.assign(d * d, AlgebraElement{});
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = 0; y < d; ++y) {
        const Path& px = alg->basis_[x];
        const Path& py = alg->basis_[y];
        if (py.end != px.start) continue;
        if (static_cast<int>(px.length() + py.length()) > L) continue;
        SparseVec v;
        v.emplace(compose(px, py, q), f.one());
        AlgebraElement& out = alg->mult_[x * d + y];
        for (const auto& [p, c] : cl.reduce(std::move(v))) out.add(alg->index_of(p), c);
      }
    return alg;
  }
  throw NotFiniteDimensional("paths of length " + std::to_string(max_len) +
                             " still have no shorter normal form; raise --max-len or add relations");
}

void BoundQuiverAlgebra::index() {
  index_.clear();
  const int n = quiver_.vertices();
  from_.assign(n, {});
  to_.assign(n, {});
  idem_.assign(n, -1);
  arrow_idx_.assign(quiver_.arrows().size(), -1);
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    const Path& p = basis_[b];
    index_[p] = static_cast<int>(b);
    from_[p.start].push_back(static_cast<int>(b));
    to_[p.end].push_back(static_cast<int>(b));
    if (p.length() == 0) idem_[p.start] = static_cast<int>(b);
    if (p.length() == 1) arrow_idx_[p.arrows[0]] = static_cast<int>(b);
  }
}

int BoundQuiverAlgebra::index_of(const Path& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> BoundQuiverAlgebra::basis_block(int s, int t) const {
  std::vector<int> out;
  for (int b : from_.at(s))
    if (basis_[b].end == t) out.push_back(b);
  return out;
}

AlgebraElement BoundQuiverAlgebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
  AlgebraElement r;
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms()) {
      const AlgebraElement& p = product(x, y);
      if (!p.is_zero()) r.add(p, cx * cy);
    }
  return r;
}

AlgebraElement BoundQuiverAlgebra::normal_form(const Path& p) const {
  AlgebraElement e = AlgebraElement::basis(idem_.at(p.start), field_);
  for (int a : p.arrows) {
    int ai = arrow_idx_.at(a);
    if (ai < 0) throw InadmissibleRelation("arrow is not a basis element; relations are not admissible");
    e = multiply(AlgebraElement::basis(ai, field_), e);
    if (e.is_zero()) break;
  }
  return e;
}

AlgebraElement BoundQuiverAlgebra::evaluate(const std::vector<Term>& terms) const {
  AlgebraElement e;
  for (const Term& t : terms) e.add(normal_form(t.path), field_.embed(t.coeff));
  return e;
}

AlgebraElement BoundQuiverAlgebra::one() const {
  AlgebraElement e;
  for (int v = 0; v < vertices(); ++v) e.add(idem_[v], field_.one());
  return e;
}

AlgebraPtr BoundQuiverAlgebra::opposite() const {
  auto op = std::make_shared<BoundQuiverAlgebra>();
  op->field_ = field_;
  op->quiver_ = quiver_.opposite();
  for (const Relation& r : relations_) {
    Relation rr;
    for (const Term& t : r.terms) rr.terms.push_back({t.coeff, t.path.reversed()});
    op->relations_.push_back(std::move(rr));
  }
  for (const Path& p : basis_) op->basis_.push_back(p.reversed());
  op->length_bound_ = length_bound_;
  op->index();
  const std::size_t d = basis_.size();
  op->mult_.assign(d * d, AlgebraElement{});
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) op->mult_[x * d + y] = mult_[y * d + x];
  return op;
}

std::vector<RelationTemplate> relation_template(const Poset& p, const CanonicalPathTable& t, int deg) {
  Quiver q = Quiver::doubled_hasse(p);
  std::vector<RelationTemplate> out;
  std::vector<Path> canonical;
  for (const auto& [key, path] : t.entries()) canonical.push_back(path);
  std::sort(canonical.begin(), canonical.end());
  auto by_len = paths_up_to(q, deg);
  for (int len = 2; len <= deg; ++len)
    for (const Path& path : by_len[len]) {
      if (std::binary_search(canonical.begin(), canonical.end(), path)) continue;
      RelationTemplate tpl{path, {}};
      for (int i : t.apexes(path.start, path.end))
        if (t.get(path.start, i, path.end).length() >= 2) tpl.slots.push_back(i);
      out.push_back(std::move(tpl));
    }
  std::stable_sort(out.begin(), out.end(), [&](const RelationTemplate& a, const RelationTemplate& b) {
    if (a.path.length() != b.path.length()) return a.path.length() < b.path.length();
    return a.path.vertices(q) < b.path.vertices(q);
  });
  return out;
}

Relation fill_template(const RelationTemplate& tpl, const std::vector<Scalar>& coeffs, const CanonicalPathTable& t,
                       const Field& f) {
  if (coeffs.size() != tpl.slots.size()) throw InadmissibleRelation("coefficient count differs from slot count");
  Relation r;
  r.terms.push_back({f.one(), tpl.path});
  for (std::size_t s = 0; s < tpl.slots.size(); ++s)
    if (!coeffs[s].is_zero()) r.terms.push_back({-f.embed(coeffs[s]), t.get(tpl.path.start, tpl.slots[s], tpl.path.end)});
  return r;
}

Relation canonical_relation(const Quiver& q, const CanonicalPathTable& t, const std::vector<int>& vertices,
                            const std::vector<std::pair<Scalar, int>>& via, const Field& f) {
  Path p = path_from_vertices(q, vertices);
  Relation r;
  r.terms.push_back({f.one(), p});
  for (const auto& [c, i] : via)
    if (!c.is_zero()) r.terms.push_back({-f.embed(c), t.get(p.start, i, p.end)});
  return r;
}

}  // namespace qhalg

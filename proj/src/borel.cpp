#include "qhalg/borel.hpp"

#include "qhalg/errors.hpp"

namespace qhalg {

namespace {

// Paths j -> i using only arrows of the given direction.
void monotone_paths(const Quiver& q, ArrowDir dir, Path cur, int goal, std::vector<Path>& out) {
  if (cur.end == goal) {
    out.push_back(cur);
    return;
  }
  for (int id : q.out_arrows(cur.end)) {
    const Arrow& a = q.arrow(id);
    if (a.dir != dir) continue;
    Path next = cur;
    next.end = a.target;
    next.arrows.push_back(id);
    monotone_paths(q, dir, next, goal, out);
  }
}

std::vector<Path> monotone_paths(const Quiver& q, ArrowDir dir, int from, int to) {
  std::vector<Path> out;
  monotone_paths(q, dir, Path::trivial(from), to, out);
  return out;
}

}  // namespace

UniquenessReport path_uniqueness_check(const QHContext& ctx) {
  const BoundQuiverAlgebra& a = *ctx.alg;
  const Quiver& q = a.quiver();
  UniquenessReport r;
  r.pass = true;
  for (int j = 0; j < ctx.size(); ++j)
    for (int i = 0; i < ctx.size(); ++i) {
      if (!ctx.poset.lt(j, i)) continue;
      ++r.pairs_checked;
      for (auto [dir, from, to] : {std::tuple{ArrowDir::Up, j, i}, std::tuple{ArrowDir::Down, i, j}}) {
        std::vector<Path> paths = monotone_paths(q, dir, from, to);
        if (paths.empty()) continue;
        AlgebraElement first = a.normal_form(paths[0]);
        for (std::size_t k = 1; k < paths.size(); ++k) {
          ++r.paths_compared;
          if (r.pass && !(a.normal_form(paths[k]) == first)) {
            r.pass = false;
            r.witness = paths[0].str(q) + " ≠ " + paths[k].str(q);
          }
        }
      }
    }
  return r;
}

BorelPair borel_subalgebras(const QHContext& ctx) {
  UniquenessReport u = path_uniqueness_check(ctx);
  if (!u.pass) throw UniquenessFailed(u.witness);
  const int n = ctx.size();
  const Field& f = ctx.alg->field();
  const Quiver& full = ctx.alg->quiver();
  std::vector<Arrow> arrows;
  for (const Arrow& ar : full.arrows())
    if (ar.dir == ArrowDir::Up) arrows.push_back({static_cast<int>(arrows.size()), ar.source, ar.target, ArrowDir::Up});
  Quiver q(n, arrows);

  BorelPair b;
  b.uniqueness_certified = true;
  std::vector<Relation> rels;
  std::vector<Vec> chains;
  const std::size_t dim = ctx.alg->dim();
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      if (!ctx.poset.leq(j, i)) continue;
      ++b.comparable_pairs;
      std::vector<Path> paths = monotone_paths(q, ArrowDir::Up, j, i);
      for (std::size_t k = 1; k < paths.size(); ++k)
        rels.push_back(Relation{{Term{f.one(), paths[k]}, Term{-f.one(), paths[0]}}});
      // the same chain read in the quiver of A
      std::vector<int> vs = paths.at(0).vertices(q);
      chains.push_back(ctx.alg->normal_form(path_from_vertices(full, vs)).dense(dim, f));
    }
  b.borel = BoundQuiverAlgebra::build(q, rels, n + 1, f);
  b.delta_subalgebra = b.borel->opposite();
  b.embeds = static_cast<int>(Subspace::span(chains, dim, f).dim()) == b.comparable_pairs;
  b.projectives_match = true;
  for (int j = 0; j < n; ++j)
    if (Representation::projective(b.delta_subalgebra, j).total_dim() != ctx.delta[j].total_dim())
      b.projectives_match = false;
  return b;
}

}  // namespace qhalg

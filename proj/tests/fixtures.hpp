#pragma once

// Hand-written instances shared by the unit tests. The JSON copies under
// data/ describe the same algebras.

#include <utility>
#include <vector>

#include "qhalg/algebra.hpp"

namespace fixtures {

using namespace qhalg;

struct Instance {
  Poset poset;
  AlgebraPtr alg;
};

// rels: 1-based vertex sequence plus (coeff, via apex) terms
using RelSpec = std::pair<std::vector<int>, std::vector<std::pair<long, int>>>;

inline Instance make(const Poset& p, const std::vector<RelSpec>& specs, const Field& f = Field::rationals(),
                     int max_len = 0) {
  Quiver q = Quiver::doubled_hasse(p);
  CanonicalPathTable t(p, q);
  std::vector<Relation> rels;
  for (const auto& [verts, via] : specs) {
    std::vector<int> v0;
    for (int v : verts) v0.push_back(v - 1);
    std::vector<std::pair<Scalar, int>> terms;
    for (auto [c, i] : via) terms.emplace_back(f.from_int(c), i - 1);
    rels.push_back(canonical_relation(q, t, v0, terms, f));
  }
  return {p, BoundQuiverAlgebra::build(q, rels, max_len ? max_len : 2 * p.size(), f)};
}

inline Poset diamond_poset() { return Poset::build(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

inline Instance chain2(const Field& f = Field::rationals()) {
  return make(Poset::chain(2), {{{2, 1, 2}, {}}}, f);
}

inline Instance chain3(const Field& f = Field::rationals(), long c = 1) {
  return make(Poset::chain(3), {{{2, 1, 2}, {{c, 3}}}, {{3, 2, 3}, {}}}, f);
}

// tensor square of chain2: commutativity squares plus the chain2 relation in
// each factor
inline Instance diamond(const Field& f = Field::rationals()) {
  return make(diamond_poset(),
              {{{1, 3, 4}, {{1, 4}}},
               {{2, 1, 2}, {}},
               {{2, 1, 3}, {{1, 4}}},
               {{3, 1, 3}, {}},
               {{3, 1, 2}, {{1, 4}}},
               {{4, 3, 1}, {{1, 4}}},
               {{4, 2, 4}, {}},
               {{4, 3, 4}, {}}},
              f);
}

// diamond with a top element added; coefficients from a {0,1} search. A is
// 1-qh but A(4) is not, so T(4) misses the formula.
inline Poset diamond_top_poset() { return Poset::build(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}}); }

inline Instance diamond_top(const Field& f = Field::rationals()) {
  return make(diamond_top_poset(),
              {{{1, 3, 4}, {{1, 4}}},
               {{2, 1, 2}, {{1, 4}}},
               {{2, 1, 3}, {{1, 4}}},
               {{3, 1, 2}, {{1, 4}}},
               {{3, 1, 3}, {{1, 4}, {1, 5}}},
               {{4, 2, 4}, {{1, 5}}},
               {{4, 3, 1}, {{1, 4}}},
               {{4, 3, 4}, {{1, 5}}},
               {{5, 4, 5}, {}}},
              f);
}

inline Instance single_vertex(const Field& f = Field::rationals()) { return make(Poset::chain(1), {}, f); }

}  // namespace fixtures

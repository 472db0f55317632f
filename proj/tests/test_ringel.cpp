#include <doctest.h>

#include "fixtures.hpp"
#include "qhalg/errors.hpp"
#include "qhalg/ringel.hpp"

using namespace qhalg;
using namespace fixtures;

TEST_CASE("Ringel dual of chain2") {
  auto c2 = chain2();
  QHContext ctx = QHContext::make(c2.poset, c2.alg);
  RingelDual r = ringel_dual(ctx);
  CHECK(r.dim == 5);
  CHECK(r.hom_dims == std::vector<std::vector<int>>{{1, 1}, {1, 2}});
  CHECK(r.associativity_checked);
  CHECK(r.associative);
  CHECK(r.doubled_hasse);
  CHECK(r.dim_matches);
  CHECK(arrow_scaling_isomorphism(*c2.alg, *r.algebra) == SearchVerdict::Found);

  RingelReport rep = ringel_report(ctx);
  CHECK(rep.built);
  CHECK(rep.formula_all);
  CHECK(rep.dual_one_qh);
  CHECK(rep.biconditional);
  for (const auto& c : rep.checks) CHECK_MESSAGE(c.value, c.name << ": " << c.detail);
  CHECK(rep.isomorphic_to_parent == SearchVerdict::Found);
}

TEST_CASE("Ringel duals of the larger fixtures") {
  for (const auto& inst : {chain3(), diamond(), single_vertex()}) {
    QHContext ctx = QHContext::make(inst.poset, inst.alg);
    RingelReport rep = ringel_report(ctx);
    REQUIRE(rep.built);
    int total = 0;
    for (const auto& row : rep.dual.hom_dims)
      for (int h : row) total += h;
    CHECK(rep.dual.dim == total);
    CHECK(rep.dual_one_qh);
    CHECK(rep.biconditional);
    for (const auto& c : rep.checks) CHECK_MESSAGE(c.value, c.name << ": " << c.detail);
    // R(A) is again 1-qh on the same poset shape, so the poset formula fixes its dimension
    CHECK(rep.dual.dim == static_cast<int>(inst.alg->dim()));
  }
}

TEST_CASE("functor images are modules") {
  auto c3 = chain3();
  QHContext ctx = QHContext::make(c3.poset, c3.alg);
  RingelDual r = ringel_dual(ctx);
  for (int j = 0; j < ctx.size(); ++j) {
    Representation img = ringel_functor(r, ctx.projective[j]);
    CHECK(img.satisfies_relations());
    // Hom(T, P(j)) has dimension Σ_a dim Hom(T(a), P(j))
    int total = 0;
    for (int a = 0; a < ctx.size(); ++a) total += static_cast<int>(hom_space(r.summands[a], ctx.projective[j]).size());
    CHECK(img.total_dim() == total);
  }
}

TEST_CASE("biconditional false-false on the searched instance") {
  auto inst = fixtures::diamond_top();
  QHContext c = QHContext::make(inst.poset, inst.alg);
  RingelReport r = ringel_report(c);
  CHECK_FALSE(r.formula_all);
  CHECK_FALSE(r.formula_inconclusive);
  REQUIRE(r.built);
  CHECK_FALSE(r.dual.doubled_hasse);
  CHECK_FALSE(r.dual_one_qh);
  CHECK_FALSE(r.dual_inconclusive);
  CHECK(r.biconditional);
  for (const auto& cond : r.checks) CHECK_MESSAGE(cond.value, cond.name << ": " << cond.detail);
  CHECK_THROWS_AS(ringel_dual(c), TiltingIncomplete);
}

#include <doctest.h>

#include "fixtures.hpp"
#include "qhalg/errors.hpp"
#include "qhalg/filtration.hpp"
#include "qhalg/tilting.hpp"

using namespace qhalg;
using namespace fixtures;

namespace {

std::vector<Instance> certified() { return {chain2(), chain3(), diamond(), single_vertex()}; }

int predicted_tilting_dim(const Poset& p, int i) {
  int d = 0;
  for (int k : p.down_set(i)) d += static_cast<int>(p.down_set(k).size());
  return d;
}

}  // namespace

TEST_CASE("factor algebras") {
  auto c2 = chain2();
  QHContext ctx = QHContext::make(c2.poset, c2.alg);
  FactorAlgebra a1 = factor_algebra(ctx, 0);
  CHECK(a1.algebra->dim() == 1);
  CHECK(a1.ideal_dim == 4);
  FactorAlgebra a2 = factor_algebra(ctx, 1);
  CHECK(a2.algebra->dim() == 5);
  CHECK(a2.ideal_dim == 0);

  auto c3 = chain3();
  QHContext c3x = QHContext::make(c3.poset, c3.alg);
  FactorAlgebra f = factor_algebra(c3x, 1);
  CHECK(f.algebra->dim() == 5);
  CHECK(f.report.one_quasi_hereditary);

  for (const auto& inst : certified()) {
    QHContext c = QHContext::make(inst.poset, inst.alg);
    for (int i = 0; i < c.size(); ++i) {
      FactorAlgebra fa = factor_algebra(c, i);
      CHECK(fa.ideal_spanned_by_paths);
      CHECK(fa.dim_consistent);
      CHECK(static_cast<int>(fa.ideal_basis.size()) == fa.ideal_dim);
      // P_(i)(j) ≅ P(j) / Σ P(l) over l outside Λ_(i)
      ElementSet outside;
      for (int l = 0; l < c.size(); ++l)
        if (!inst.poset.leq(l, i)) outside.push_back(l);
      QHContext local = QHContext::make(fa.poset, fa.algebra);
      for (std::size_t k = 0; k < fa.members.size(); ++k) {
        int j = fa.members[k];
        Representation q =
            quotient(c.projective[j], generated_by_vertices(c.projective[j], outside)).module;
        int expected = 0;
        for (int l : inst.poset.up_set(j))
          if (inst.poset.leq(l, i)) expected += static_cast<int>(inst.poset.down_set(l).size());
        CHECK(local.projective[k].total_dim() == q.total_dim());
        CHECK(q.total_dim() == expected);
      }
    }
  }
}

TEST_CASE("universal extensions give tilting modules") {
  auto c2 = chain2();
  QHContext ctx = QHContext::make(c2.poset, c2.alg);
  Representation t1 = tilting_module(ctx, 0), t2 = tilting_module(ctx, 1);
  CHECK(t1.total_dim() == 1);
  CHECK(t2.total_dim() == 3);
  CHECK(is_isomorphic(t1, ctx.simple[0]).verdict == SearchVerdict::Found);
  CHECK(is_isomorphic(t2, ctx.projective[0]).verdict == SearchVerdict::Found);
  CHECK(ext1_delta(ctx, 0, ctx.delta[1]).size() == 1);
  CHECK(ext1_delta(ctx, 0, t2).empty());

  for (const auto& inst : certified()) {
    QHContext c = QHContext::make(inst.poset, inst.alg);
    for (int i = 0; i < c.size(); ++i) {
      TiltingSummand t = tilting_candidate(c, i);
      CHECK(t.certified());
      CHECK(t.module.total_dim() == predicted_tilting_dim(inst.poset, i));
      CHECK(t.module.dim(i) == 1);
      CHECK(t.formula_match == SearchVerdict::Found);
      CHECK(t.dual_formula_match == SearchVerdict::Found);
      CHECK(t.candidate_delta_good);
      CHECK(t.candidate_nabla_good);
    }
  }
}

TEST_CASE("equivalence battery on the certified fixtures") {
  for (const auto& inst : certified()) {
    QHContext c = QHContext::make(inst.poset, inst.alg);
    for (int i = 0; i < c.size(); ++i) {
      EquivalenceReport r = check_T_equivalences(c, i);
      REQUIRE(r.conditions.size() == 5);
      CHECK(r.agree);
      CHECK(r.value);
      for (const auto& cond : r.conditions) CHECK_MESSAGE(cond.value, cond.name << ": " << cond.detail);
      CHECK_NOTHROW(certify(r));
    }
    CharacteristicTilting ct = characteristic_tilting(c);
    CHECK(ct.complete);
    for (int i = 0; i < c.size(); ++i) CHECK(ct.multiplicity_ok[i]);
    for (int j = 0; j < c.size(); ++j) CHECK(ct.delta_multiplicity[c.top()][j] == 1);
  }
}

TEST_CASE("special tilting summands") {
  for (const auto& inst : certified()) {
    QHContext c = QHContext::make(inst.poset, inst.alg);
    const int n = c.size();
    CHECK(is_isomorphic(tilting_module(c, 0), c.simple[0]).verdict == SearchVerdict::Found);
    Representation tn = tilting_module(c, n - 1);
    CHECK(is_isomorphic(tn, c.projective[0]).verdict == SearchVerdict::Found);
    CHECK(is_isomorphic(tn, c.injective[0]).verdict == SearchVerdict::Found);
    for (int i : inst.poset.upper_covers(0)) {
      ElementSet others;
      for (int j = 0; j < n; ++j)
        if (j != 0 && j != i) others.push_back(j);
      Representation m = quotient(c.projective[0], generated_by_vertices(c.projective[0], others)).module;
      CHECK(is_isomorphic(tilting_module(c, i), m).verdict == SearchVerdict::Found);
      CHECK(factor_algebra(c, i).report.one_quasi_hereditary);
    }
  }
}

TEST_CASE("disagreeing conditions are reported") {
  EquivalenceReport r;
  r.agree = false;
  r.witness = "i=2: forced";
  CHECK_THROWS_AS(certify(r), EquivalenceViolated);
}

TEST_CASE("a searched instance with a failing summand") {
  auto inst = diamond_top();
  REQUIRE(inst.alg->dim() == 50);
  QHContext c = QHContext::make(inst.poset, inst.alg);
  REQUIRE(check_one_quasi_hereditary(c).one_quasi_hereditary);
  for (int i = 0; i < c.size(); ++i) {
    EquivalenceReport r = check_T_equivalences(c, i);
    CHECK(r.agree);
    CHECK(r.value == (i != 3));
    for (const auto& cond : r.conditions) CHECK_FALSE(cond.inconclusive);
  }
  TiltingSummand t = tilting_candidate(c, 3);
  CHECK(t.certified());
  CHECK_FALSE(t.soc_simple);
  CHECK_FALSE(t.top_simple);
  CHECK(t.formula_match == SearchVerdict::NotFound);
  CHECK_FALSE(characteristic_tilting(c).complete);
}

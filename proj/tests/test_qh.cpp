#include <doctest.h>

#include "fixtures.hpp"
#include "qhalg/errors.hpp"
#include "qhalg/qh.hpp"

using namespace qhalg;
using namespace fixtures;

namespace {

std::vector<Instance> certified() { return {chain2(), chain3(), diamond(), single_vertex()}; }

// Down-closed subsets of the poset, counted directly.
int count_down_sets(const Poset& p) {
  const int n = p.size();
  int count = 0;
  for (int mask = 0; mask < (1 << n); ++mask) {
    bool closed = true;
    for (int a = 0; a < n && closed; ++a)
      if (mask >> a & 1)
        for (int b : p.down_set(a))
          if (!(mask >> b & 1)) closed = false;
    count += closed;
  }
  return count;
}

}  // namespace

TEST_CASE("standard and costandard modules of chain2") {
  auto c2 = chain2();
  QHContext ctx = QHContext::make(c2.poset, c2.alg);
  CHECK(ctx.delta[1].total_dim() == 2);
  CHECK(ctx.nabla[1].total_dim() == 2);
  CHECK(is_isomorphic(ctx.delta[1], ctx.projective[1]).verdict == SearchVerdict::Found);
  CHECK(is_isomorphic(ctx.delta[0], ctx.simple[0]).verdict == SearchVerdict::Found);
  CHECK(is_isomorphic(ctx.nabla[0], ctx.simple[0]).verdict == SearchVerdict::Found);
  CHECK(ctx.delta[1].satisfies_relations());
  CHECK(ctx.nabla[1].satisfies_relations());
}

TEST_CASE("extreme standard modules on every fixture") {
  for (const auto& inst : certified()) {
    QHContext ctx = QHContext::make(inst.poset, inst.alg);
    const int n = ctx.size();
    CHECK(is_isomorphic(ctx.delta[n - 1], ctx.projective[n - 1]).verdict == SearchVerdict::Found);
    CHECK(is_isomorphic(ctx.nabla[n - 1], ctx.injective[n - 1]).verdict == SearchVerdict::Found);
    CHECK(ctx.delta[0].dims() == ctx.simple[0].dims());
    CHECK(ctx.nabla[0].dims() == ctx.simple[0].dims());
    DimReport r = inst.poset.predicted_dims();
    for (int k = 0; k < n; ++k) {
      CHECK(ctx.delta[k].total_dim() == r.dim_standard[k]);
      CHECK(ctx.nabla[k].total_dim() == r.dim_standard[k]);
    }
    CHECK(static_cast<int>(inst.alg->dim()) == r.dim_algebra);
  }
}

TEST_CASE("standard modules agree with the quotient by strictly larger traces") {
  for (const auto& inst : certified()) {
    QHContext ctx = QHContext::make(inst.poset, inst.alg);
    for (int i = 0; i < ctx.size(); ++i) {
      ElementSet above;
      for (int j = 0; j < ctx.size(); ++j)
        if (inst.poset.lt(i, j)) above.push_back(j);
      auto q = quotient(ctx.projective[i], generated_by_vertices(ctx.projective[i], above));
      CHECK(q.module.dims() == ctx.delta[i].dims());
    }
  }
}

TEST_CASE("quasi-hereditary check") {
  auto c2 = chain2();
  QHReport r = check_quasi_hereditary(QHContext::make(c2.poset, c2.alg));
  CHECK(r.quasi_hereditary);
  CHECK(r.projective_multiplicity[0] == std::vector<int>{1, 1});
  CHECK(r.projective_multiplicity[1] == std::vector<int>{0, 1});

  auto one = single_vertex();
  CHECK(check_one_quasi_hereditary(QHContext::make(one.poset, one.alg)).one_quasi_hereditary);

  // chain2 quiver with 1-2-1 = 0: P(2) has S(2) twice and Δ(2) = P(2)
  auto bad = make(Poset::chain(2), {{{1, 2, 1}, {}}});
  QHReport rb = check_quasi_hereditary(QHContext::make(bad.poset, bad.alg));
  CHECK_FALSE(rb.quasi_hereditary);
  CHECK_FALSE(rb.find("qh.delta_top")->pass);
  CHECK(rb.find("qh.delta_top")->witness == "[Δ(2):S(2)] = 2");
  CHECK_THROWS_AS(certify(rb, false), NotQuasiHereditary);
}

TEST_CASE("1-quasi-hereditary check on the fixtures and their opposites") {
  for (const auto& inst : certified()) {
    QHReport r = check_one_quasi_hereditary(QHContext::make(inst.poset, inst.alg));
    CHECK(r.one_quasi_hereditary);
    CHECK(r.reciprocity);
    for (const auto& c : r.checks) CHECK_MESSAGE(c.pass, c.axiom << ": " << c.witness);
    CHECK_NOTHROW(certify(r));
    QHReport ro = check_one_quasi_hereditary(QHContext::make(inst.poset, inst.alg->opposite()));
    CHECK(ro.one_quasi_hereditary);
  }
  auto c2 = chain2();
  QHReport r = check_one_quasi_hereditary(QHContext::make(c2.poset, c2.alg));
  CHECK(r.delta_composition[1][0] == 1);
  CHECK(r.projective_multiplicity[0][1] == 1);
  CHECK(r.nabla_composition[1][0] == 1);
  CHECK(r.injective_multiplicity[0][1] == 1);
}

TEST_CASE("chain3 without the correction term fails the socle axiom") {
  auto c = chain3(Field::rationals(), 0);
  QHReport r = check_one_quasi_hereditary(QHContext::make(c.poset, c.alg));
  CHECK_FALSE(r.one_quasi_hereditary);
  CHECK_FALSE(r.find("3")->pass);
  CHECK(r.find("3")->witness == "j=1: soc P(j) is not S(1)");
  CHECK_THROWS_AS(certify(r), NotOneQuasiHereditary);
}

TEST_CASE("good filtrations") {
  auto c2 = chain2();
  QHContext ctx = QHContext::make(c2.poset, c2.alg);
  auto f = delta_good_filtration(ctx, ctx.projective[0]);
  REQUIRE(f.ok);
  CHECK(f.filtration.labels == std::vector<int>{1, 0});
  CHECK(f.filtration.chain[0] == generated_by_vertices(ctx.projective[0], {1}));
  CHECK(f.filtration.chain[1] == whole_module(ctx.projective[0]));
  auto s2 = delta_good_filtration(ctx, ctx.simple[1]);
  CHECK_FALSE(s2.ok);
  CHECK(nabla_good_filtration(ctx, ctx.simple[1]).ok == false);

  auto d = diamond();
  QHContext dc = QHContext::make(d.poset, d.alg);
  for (int j = 0; j < dc.size(); ++j) {
    auto g = nabla_good_filtration(dc, dc.injective[j]);
    REQUIRE(g.ok);
    const auto& fl = g.filtration;
    for (std::size_t t = 0; t < fl.chain.size(); ++t) {
      CHECK(is_submodule(dc.injective[j], fl.chain[t]));
      CHECK(fl.layer_dims(static_cast<int>(t)) == dc.nabla[fl.labels[t]].dims());
      if (t > 0) CHECK(contains(fl.chain[t], fl.chain[t - 1]));
    }
    // the bottom of a ∇-filtration of I(j) is ∇(j)
    CHECK(fl.labels.front() == j);
  }
}

TEST_CASE("submodules of the top standard module are down-sets") {
  for (const auto& inst : {chain3(Field::prime(2)), diamond(Field::prime(2)), diamond(Field::prime(3))}) {
    QHContext ctx = QHContext::make(inst.poset, inst.alg);
    const int n = ctx.size();
    const Representation& dn = ctx.delta[n - 1];
    REQUIRE(dn.dims() == std::vector<int>(n, 1));
    int found = 0;
    for (int mask = 0; mask < (1 << n); ++mask) {
      Submodule u;
      ElementSet support;
      for (int v = 0; v < n; ++v) {
        bool in = mask >> v & 1;
        u.parts.push_back(in ? Subspace::full(1, dn.field()) : Subspace(1, dn.field()));
        if (in) support.push_back(v);
      }
      if (!is_submodule(dn, u)) continue;
      ++found;
      CHECK(u == generated_by_vertices(dn, support));
    }
    CHECK(found == count_down_sets(inst.poset));
    for (int j = 0; j < n; ++j)
      CHECK(radical(ctx.delta[j]) == generated_by_vertices(ctx.delta[j], inst.poset.lower_covers(j)));
  }
}

TEST_CASE("basis theorem") {
  auto c2 = chain2();
  BasisReport r2 = verify_basis_theorem(*c2.alg, CanonicalPathTable(c2.poset, c2.alg->quiver()));
  CHECK(r2.pass);
  CHECK(r2.blocks.size() == 4);
  CHECK(r2.total == 5);
  auto c3 = chain3();
  CHECK(verify_basis_theorem(*c3.alg, CanonicalPathTable(c3.poset, c3.alg->quiver())).total == 14);
  auto d = diamond();
  BasisReport rd = verify_basis_theorem(*d.alg, CanonicalPathTable(d.poset, d.alg->quiver()));
  CHECK(rd.pass);
  for (const auto& b : rd.blocks)
    if (b.j == 1 && b.k == 2) {
      CHECK(b.apexes == ElementSet{3});
      CHECK(b.block_dim == 1);
    }
  CHECK_NOTHROW(certify(rd));

  // chain3 with c = 0 keeps the canonical basis although axiom 3 fails
  auto c30 = chain3(Field::rationals(), 0);
  BasisReport r0 = verify_basis_theorem(*c30.alg, CanonicalPathTable(c30.poset, c30.alg->quiver()));
  CHECK(r0.pass);
  CHECK(r0.total == 14);

  // chain2 with 1-2-1 = 0: 2-1-2 survives next to e_2, so block (2,2) is too big
  auto bad = make(Poset::chain(2), {{{1, 2, 1}, {}}});
  BasisReport rb = verify_basis_theorem(*bad.alg, CanonicalPathTable(bad.poset, bad.alg->quiver()));
  CHECK_FALSE(rb.pass);
  CHECK_THROWS_WITH_AS(certify(rb), doctest::Contains("block (j,k) = (1,1)"), BasisDefect);
}

TEST_CASE("ext quiver") {
  auto c2 = chain2();
  CHECK(ext_quiver_counts(c2.alg) == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
  auto d = diamond();
  CHECK(ext_quiver_counts(d.alg) == arrow_counts(Quiver::doubled_hasse(d.poset)));
  CHECK(arrow_counts(ext_quiver(d.alg)) == arrow_counts(d.alg->quiver()));
  auto one = single_vertex();
  CHECK(ext_quiver(one.alg).arrows().empty());
}

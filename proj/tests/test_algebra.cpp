#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "qhalg/errors.hpp"

using namespace qhalg;
using namespace fixtures;

namespace {

std::vector<std::string> basis_strings(const BoundQuiverAlgebra& a) {
  std::vector<std::string> out;
  for (const Path& p : a.basis()) out.push_back(p.str(a.quiver()));
  return out;
}

void check_associative_unital(const BoundQuiverAlgebra& a) {
  const int d = static_cast<int>(a.dim());
  const Field& f = a.field();
  AlgebraElement one = a.one();
  for (int x = 0; x < d; ++x) {
    AlgebraElement ex = AlgebraElement::basis(x, f);
    CHECK(a.multiply(one, ex) == ex);
    CHECK(a.multiply(ex, one) == ex);
    for (int y = 0; y < d; ++y) {
      AlgebraElement xy = a.multiply(ex, AlgebraElement::basis(y, f));
      for (int z = 0; z < d; ++z) {
        AlgebraElement ez = AlgebraElement::basis(z, f);
        CHECK(a.multiply(xy, ez) == a.multiply(ex, a.multiply(AlgebraElement::basis(y, f), ez)));
      }
    }
  }
}

}  // namespace

TEST_CASE("chain2 closure") {
  auto c2 = chain2();
  CHECK(c2.alg->dim() == 5);
  auto b = basis_strings(*c2.alg);
  std::sort(b.begin(), b.end());
  CHECK(b == std::vector<std::string>{"1", "1-2", "1-2-1", "2", "2-1"});
}

TEST_CASE("no relations on chain2 is infinite dimensional") {
  Quiver q = Quiver::doubled_hasse(Poset::chain(2));
  CHECK_THROWS_AS(BoundQuiverAlgebra::build(q, {}, 4, Field::rationals()), NotFiniteDimensional);
}

TEST_CASE("single vertex") {
  auto s = single_vertex();
  CHECK(s.alg->dim() == 1);
  CHECK(s.alg->basis()[0].length() == 0);
}

TEST_CASE("inadmissible relations") {
  Poset p = Poset::chain(2);
  Quiver q = Quiver::doubled_hasse(p);
  Relation short_term{{{Scalar(1), path_from_vertices(q, {0, 1})}}};
  CHECK_THROWS_AS(BoundQuiverAlgebra::build(q, {short_term}, 6, Field::rationals()), InadmissibleRelation);
  Relation mixed{{{Scalar(1), path_from_vertices(q, {0, 1, 0})}, {Scalar(1), path_from_vertices(q, {1, 0, 1})}}};
  CHECK_THROWS_AS(BoundQuiverAlgebra::build(q, {mixed}, 6, Field::rationals()), InadmissibleRelation);
}

TEST_CASE("multiplication convention") {
  auto c2 = chain2();
  const auto& a = *c2.alg;
  const Field& f = a.field();
  AlgebraElement e1 = AlgebraElement::basis(a.idempotent_index(0), f);
  AlgebraElement e2 = AlgebraElement::basis(a.idempotent_index(1), f);
  CHECK(a.multiply(e1, e1) == e1);
  CHECK(a.multiply(e2, e1).is_zero());
  const Quiver& q = a.quiver();
  AlgebraElement up = AlgebraElement::basis(a.arrow_index(*q.arrow_between(0, 1)), f);
  AlgebraElement down = AlgebraElement::basis(a.arrow_index(*q.arrow_between(1, 0)), f);
  // up · down: traverse 2->1 then 1->2
  CHECK(a.multiply(up, down).is_zero());
  CHECK(a.multiply(down, up) == a.normal_form(path_from_vertices(q, {0, 1, 0})));
  CHECK_FALSE(a.multiply(down, up).is_zero());
}

TEST_CASE("associativity and unit on the fixtures") {
  check_associative_unital(*chain2().alg);
  check_associative_unital(*chain3().alg);
  check_associative_unital(*diamond().alg);
  check_associative_unital(*chain3(Field::prime(2)).alg);
}

TEST_CASE("dimension matches the poset formula") {
  CHECK(chain3().alg->dim() == 14);
  CHECK(diamond().alg->dim() == 25);
  CHECK(diamond(Field::prime(3)).alg->dim() == 25);
}

TEST_CASE("relations evaluate to zero") {
  for (const auto& inst : {chain2(), chain3(), diamond()})
    for (const Relation& r : inst.alg->relations()) CHECK(inst.alg->evaluate(r.terms).is_zero());
}

TEST_CASE("build is independent of relation order") {
  Poset p = diamond_poset();
  auto ref = diamond();
  std::vector<Relation> rels = ref.alg->relations();
  std::mt19937 rng(7);
  for (int round = 0; round < 3; ++round) {
    std::shuffle(rels.begin(), rels.end(), rng);
    auto again = BoundQuiverAlgebra::build(ref.alg->quiver(), rels, 10, Field::rationals());
    REQUIRE(again->dim() == ref.alg->dim());
    CHECK(again->basis() == ref.alg->basis());
    for (std::size_t x = 0; x < again->dim(); ++x)
      for (std::size_t y = 0; y < again->dim(); ++y)
        CHECK(again->product(static_cast<int>(x), static_cast<int>(y)) ==
              ref.alg->product(static_cast<int>(x), static_cast<int>(y)));
  }
}

TEST_CASE("opposite algebra") {
  auto c2 = chain2();
  auto op = c2.alg->opposite();
  CHECK(op->dim() == 5);
  check_associative_unital(*op);
  for (const Relation& r : op->relations()) CHECK(op->evaluate(r.terms).is_zero());
  auto opop = op->opposite();
  CHECK(opop->basis() == c2.alg->basis());
  CHECK(opop->quiver() == c2.alg->quiver());
  check_associative_unital(*diamond().alg->opposite());
  CHECK(single_vertex().alg->opposite()->dim() == 1);
}

TEST_CASE("relation templates") {
  auto shapes = [](const Poset& p, int deg) {
    Quiver q = Quiver::doubled_hasse(p);
    CanonicalPathTable t(p, q);
    std::vector<std::pair<std::string, ElementSet>> out;
    for (const auto& tpl : relation_template(p, t, deg)) out.emplace_back(tpl.path.str(q), tpl.slots);
    return out;
  };
  auto c2 = shapes(Poset::chain(2), 2);
  REQUIRE(c2.size() == 1);
  CHECK(c2[0].first == "2-1-2");
  CHECK(c2[0].second.empty());

  auto c3 = shapes(Poset::chain(3), 2);
  REQUIRE(c3.size() == 2);
  CHECK(c3[0] == std::pair<std::string, ElementSet>{"2-1-2", {2}});
  CHECK(c3[1] == std::pair<std::string, ElementSet>{"3-2-3", {}});

  auto d = shapes(diamond_poset(), 2);
  std::map<std::string, ElementSet> dm(d.begin(), d.end());
  CHECK(d.size() == 8);
  CHECK(dm.at("2-1-3") == ElementSet{3});
  CHECK(dm.at("1-3-4") == ElementSet{3});
  CHECK(dm.at("4-3-1") == ElementSet{3});
  CHECK(dm.at("4-2-4").empty());
  std::size_t slots = 0;
  for (const auto& [s, sl] : d) slots += sl.size();
  CHECK(slots == 6);
}

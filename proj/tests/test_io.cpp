#include <doctest.h>

#include <string>

#include "fixtures.hpp"
#include "qhalg/errors.hpp"
#include "qhalg/io.hpp"
#include "qhalg/qh.hpp"

using namespace qhalg;
using io::json;

namespace {

std::string data(const std::string& name) { return std::string(QHALG_DATA_DIR) + "/" + name; }

io::AlgebraInput load(const std::string& name, const Field& f = Field::rationals()) {
  return io::algebra_from_json(io::read_json_file(data(name)), f);
}

std::string error_code(const std::string& name) {
  try {
    load(name);
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST_CASE("fields") {
  CHECK(io::parse_field("Q") == Field::rationals());
  CHECK(io::parse_field("F3") == Field::prime(3));
  CHECK(io::parse_field("GF(5)") == Field::prime(5));
  CHECK_THROWS_AS(io::parse_field("F4"), UsageError);
  CHECK_THROWS_AS(io::parse_field("R"), UsageError);
}

TEST_CASE("poset json") {
  Poset p = io::poset_from_json(json::parse(R"({"n": 4, "relations": [[1,2],[1,3],[2,4],[3,4]]})"));
  CHECK(p == fixtures::diamond_poset());
  CHECK(io::poset_from_json(io::poset_to_json(p)) == p);
  // labels given out of order are re-indexed min first
  Poset q = io::poset_from_json(json::parse(R"({"n": 3, "relations": [[3,1],[1,2]]})"));
  CHECK(q == Poset::chain(3));
  CHECK(q.labels() == std::vector<std::string>{"3", "1", "2"});

  CHECK_THROWS_AS(io::poset_from_json(json::parse(R"({"n": 3, "relations": [[1,2],[1,3]]})")), NotBounded);
  CHECK_THROWS_AS(io::poset_from_json(json::parse(R"({"n": 2, "relations": [[1,2],[2,1]]})")), NotAPartialOrder);
  CHECK_THROWS_AS(io::poset_from_json(json::parse(R"({"n": 2, "relations": [[1,3]]})")), ElementOutOfRange);
  CHECK_THROWS_AS(io::poset_from_json(json::parse(R"({"relations": []})")), ParseError);
  CHECK_THROWS_AS(io::poset_from_json(json::parse(R"({"n": "two"})")), ParseError);
}

TEST_CASE("bundled instances match the fixtures") {
  struct Row {
    const char* file;
    fixtures::Instance inst;
  };
  for (const auto& [file, inst] : {Row{"chain2.json", fixtures::chain2()}, Row{"chain3.json", fixtures::chain3()},
                                   Row{"diamond.json", fixtures::diamond()},
                                   Row{"diamond_top.json", fixtures::diamond_top()}}) {
    CAPTURE(file);
    auto in = load(file);
    CHECK(in.poset == inst.poset);
    CHECK(in.algebra->dim() == inst.alg->dim());
    CHECK(in.algebra->basis() == inst.alg->basis());
  }
  // a bare poset is the free doubled quiver, which is infinite
  CHECK_THROWS_AS(load("chain3_poset.json"), NotFiniteDimensional);
}

TEST_CASE("one broken instance per failure mode") {
  CHECK(error_code("broken/not_bounded.json") == "NotBounded");
  CHECK(error_code("broken/infinite.json") == "NotFiniteDimensional");
  CHECK(error_code("broken/inadmissible.json") == "InadmissibleRelation");
  CHECK(error_code("missing.json") == "ParseError");
  auto in = load("broken/not_one_qh.json");
  QHReport r = check_one_quasi_hereditary(QHContext::make(in.poset, in.algebra));
  CHECK_FALSE(r.one_quasi_hereditary);
}

TEST_CASE("algebra export round trips") {
  auto in = load("diamond.json");
  json out = io::algebra_to_json(*in.algebra, &in.poset);
  CHECK(out["dimension"] == 25);
  auto back = io::algebra_from_json(json::parse(out.dump()), Field::rationals());
  CHECK(back.algebra->dim() == 25);
  CHECK(back.algebra->basis() == in.algebra->basis());
  CHECK(back.algebra->quiver() == in.algebra->quiver());
  CHECK(io::algebra_to_json(*back.algebra, &back.poset).dump() == out.dump());

  auto f3 = load("chain2.json", Field::prime(3));
  CHECK(io::algebra_to_json(*f3.algebra)["field"] == "F3");
}

TEST_CASE("representation dump") {
  auto in = load("chain2.json");
  json m = io::representation_to_json(Representation::projective(in.algebra, 0));
  CHECK(m["dims"] == json::array({2, 1}));
  CHECK(m["total_dim"] == 3);
  CHECK(m["arrows"].size() == 2);
  CHECK(m["arrows"][0]["matrix"].size() == static_cast<std::size_t>(m["dims"][m["arrows"][0]["dst"].get<int>() - 1]));
}

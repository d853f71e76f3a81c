#include "doctest.h"
#include "test_util.hpp"

#include "dtw/errors.hpp"
#include "dtw/serialize.hpp"

using namespace dtw;
using dtw::io::json;
using dtw::test::K;
using dtw::test::P;

TEST_CASE("field elements are base-p digit arrays") {
  const Field* F9 = Field::ground(3, 2);
  CHECK(io::to_json(FieldElem{F9, 0}) == json::array());
  CHECK(io::to_json(FieldElem{F9, 1}) == json::parse("[1]"));
  CHECK(io::to_json(FieldElem{F9, 5}) == json::parse("[2, 1]"));
  const Field* F5 = Field::prime(5);
  CHECK(io::to_json(P(F5, "θ^2+4")) == json::parse("[[4], [], [1]]"));
  CHECK(io::to_json(K(F5, "1", "θ")) == json::parse(R"({"den": [[], [1]], "num": [[1]]})"));
}

TEST_CASE("fields round trip") {
  const Field* F2 = Field::prime(2);
  for (const Field* F : {F2, Field::prime(7), Field::ground(2, 2), Field::ground(3, 2), Field::extension(F2, 2u),
                         Field::extension(Field::ground(2, 2), 2u)}) {
    json j = io::to_json(F);
    CHECK(io::field_from_json(j) == F);
    CHECK(io::field_from_json(json::parse(io::dump(j))) == F);
  }
  CHECK(io::field_from_q(9) == Field::ground(3, 2));
  CHECK(io::field_from_json(json::parse(R"({"q": 4})")) == Field::ground(2, 2));
  CHECK(io::field_from_json(json::parse(R"({"p": 3})")) == Field::prime(3));
  CHECK_THROWS_AS(io::field_from_q(6), InvalidArgument);
  CHECK_THROWS_AS(io::field_from_json(json::parse(R"({"p": "two"})")), ParseError);
  CHECK_THROWS_AS(io::field_from_json(json::parse("[]")), ParseError);
}

TEST_CASE("polynomials and rational functions round trip") {
  const Field* F4 = Field::ground(2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    APoly a = test::random_poly(F4, 5);
    CHECK(io::apoly_from_json(F4, io::to_json(a)) == a);
    KElem x = test::random_kelem(F4, 3);
    CHECK(io::kelem_from_json(F4, io::to_json(x)) == x);
  }
  const Field* F5 = Field::prime(5);
  CHECK(io::apoly_from_json(F5, json("θ^3+2")) == P(F5, "θ^3+2"));
  CHECK(io::apoly_from_json(F5, json(7)) == P(F5, "2"));
  CHECK(io::apoly_from_json(F5, json::parse("[1, 0, 3]")) == P(F5, "3θ^2+1"));
  CHECK(io::kelem_from_json(F5, json("(θ+1)/(θ^2+2)")) == K(F5, "θ+1", "θ^2+2"));
  CHECK(io::kelem_from_json(F5, json("1/θ")) == K(F5, "1", "θ"));
  CHECK(io::kelem_from_json(F5, json::parse(R"({"num": "θ"})")) == K(F5, "θ"));
  CHECK_THROWS_AS(io::kelem_from_json(F5, json("1/0")), ParseError);
  CHECK_THROWS_AS(io::apoly_from_json(F5, json::parse("[5]")), ParseError);
  CHECK_THROWS_AS(io::apoly_from_json(F5, json::parse("[[5]]")), ParseError);
  CHECK_THROWS_AS(io::apoly_from_json(F5, json(true)), ParseError);
  CHECK_THROWS_AS(io::apoly_from_json(F5, json("θ^^2")), ParseError);
}

TEST_CASE("Laurent numbers round trip") {
  const Field* F3 = Field::prime(3);
  const Field* F9 = Field::extension(F3, 2u);
  for (const auto& x : {embed_rational(K(F3, "θ", "θ-1"), 10), LaurentNumber::zero(F3),
                        LaurentNumber::zero_to(F3, -4), LaurentNumber::from_coeffs(F9, 2, {5, 0, 7, 1})}) {
    json j = io::to_json(x);
    LaurentNumber y = io::laurent_from_json(j);
    CHECK(y.field() == x.field());
    CHECK(y.top_degree() == x.top_degree());
    CHECK(y.coeffs() == x.coeffs());
    CHECK(j.at("text") == x.to_string());
  }
  json j = io::to_json(embed_rational(K(F3, "θ^2+2θ"), 4));
  CHECK(j.at("top_degree") == 2);
  CHECK(j.at("error_exponent") == -2);
  CHECK(j.at("precision") == 4);
}

TEST_CASE("Ore polynomials round trip") {
  const Field* F3 = Field::prime(3);
  using M = Matrix<KElem>;
  OrePoly<KElem> e(std::vector<M>{M::diagonal(2, K(F3, "θ")),
                                  M::from_rows({{K(F3, "1", "θ"), K(F3, "2")}, {K(F3, "θ^2"), K(F3, "0")}})});
  json j = io::to_json(e);
  CHECK(j.at("shape") == json::parse("[2, 2]"));
  CHECK(io::ore_from_json(F3, j) == e);
  CHECK_THROWS_AS(io::ore_from_json(F3, json::parse(R"({"shape": [2, 2], "terms": [[[1]]]})")), ParseError);
  CHECK_THROWS_AS(io::ore_from_json(F3, json::parse(R"({"terms": []})")), ParseError);
}

TEST_CASE("module descriptions") {
  auto carl = io::module_from_json(json::parse(R"({"q": 3, "carlitz": true})"));
  CHECK(carl.module.Et() == carlitz(Field::prime(3)).phi_t());
  CHECK(carl.extra_bad.empty());

  auto pt = io::module_from_json(json::parse(R"({"field": {"q": 3}, "power_twist": {"f": "θ", "n": 2}})"));
  CHECK(pt.module.Et() == power_twist_module(P(Field::prime(3), "θ"), 2).module().Et());

  auto dr = io::module_from_json(
      json::parse(R"({"q": 2, "drinfeld": ["θ", "1"], "rank": 2, "extra_bad": ["θ^2+θ+1"]})"));
  CHECK(dr.module.tau_degree() == 2);
  REQUIRE(dr.extra_bad.size() == 1);
  CHECK(dr.extra_bad[0] == P(Field::prime(2), "θ^2+θ+1"));

  auto et = io::module_from_json(json::parse(
      R"({"q": 2, "Et": {"shape": [2, 2], "terms": [[["θ", 0], [0, "θ"]], [["θ^2+θ", 1], ["θ^2+1", 0]]]}})"));
  CHECK(et.module.dimension() == 2);

  CHECK_THROWS_AS(io::module_from_json(json::parse(R"({"q": 3})")), ParseError);
  CHECK_THROWS_AS(io::module_from_json(json::parse(R"({"q": 3, "drinfeld": ["θ"], "rank": 2})")), ParseError);
  CHECK_THROWS_AS(io::module_from_json(json::parse(R"({"q": 3, "power_twist": {"f": "θ"}})")), ParseError);
  CHECK_THROWS_AS(io::module_from_json(json::parse(R"({"carlitz": true})")), ParseError);
}

TEST_CASE("twist requests") {
  TwistExample s3 = io::twist_request_from_json(json::parse(R"({"example": "s3"})"));
  CHECK(s3.name == "s3");
  CHECK(build_twist(s3).ok());

  // The cyclotomic example written out in full.
  json req = json::parse(R"({
    "name": "cyclotomic-explicit",
    "field": {"q": 2},
    "phi": ["1"],
    "tower": [["θ+1", "θ+1", "1"]],
    "action": {"names": ["1", "θ"], "images": [[[0, 1]], [["θ+1", 1]]],
               "relations": [[0], [1, 1]]},
    "rho": {"matrices": [[[1, 0], [0, 1]], [[0, 1], [1, 0]]]},
    "u": [[0, 1], ["θ+1", 1]]
  })");
  TwistExample ex = io::twist_request_from_json(req);
  TwistResult r = build_twist(ex);
  REQUIRE(r.ok());
  const Field* F2 = Field::prime(2);
  CHECK(r.fvec->f == std::vector<KElem>{K(F2, "θ^2+1"), K(F2, "θ^2+θ")});

  json avg = req;
  avg.erase("u");
  avg["y"] = json::parse(R"([[0, 1], 0])");
  CHECK(build_twist(io::twist_request_from_json(avg)).ok());

  json bad = req;
  bad["rho"]["matrices"][1] = json::parse("[[1, 1], [1, 1]]");
  CHECK_THROWS_AS(io::twist_request_from_json(bad), SingularError);
  json missing = req;
  missing.erase("action");
  CHECK_THROWS_AS(io::twist_request_from_json(missing), ParseError);
  CHECK_THROWS_AS(io::twist_request_from_json(json::parse(R"({"example": "nope"})")), ParseError);
}

TEST_CASE("twist output") {
  TwistExample ex = cyclotomic_example();
  json j = io::to_json(ex, build_twist(ex));
  CHECK(j.at("ok") == true);
  CHECK(j.at("f_vector_text") == json::parse(R"(["θ^2 + 1", "θ^2 + θ"])"));
  CHECK(j.at("integral_model").at("shape") == json::parse("[2, 2]"));
  CHECK(io::dump(j) == io::dump(io::to_json(ex, build_twist(cyclotomic_example()))));
}

TEST_CASE("reading files") {
  CHECK_THROWS_AS(io::read_file("/nonexistent/request.json"), ParseError);
}

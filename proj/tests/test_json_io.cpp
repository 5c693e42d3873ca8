#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include <polycert/json_io.hpp>

#include "support/oracles.hpp"

using namespace polycert;

namespace {

std::vector<std::string> keys_of(const Json& j) {
  std::vector<std::string> keys;
  for (const auto& item : j.items()) keys.push_back(item.key());
  return keys;
}

}  // namespace

TEST_SUITE("json_io") {
  TEST_CASE("integers use numbers in 64-bit range, strings beyond") {
    CHECK(int_to_json(Int(42)).dump() == "42");
    CHECK(int_to_json(Int(-7)).dump() == "-7");
    CHECK(int_to_json(Int("9223372036854775807")).is_number_integer());
    CHECK(int_to_json(Int("9223372036854775808")).dump() == "\"9223372036854775808\"");
    CHECK(int_to_json(Int("-9223372036854775808")).is_number_integer());
    CHECK(int_to_json(Int("-9223372036854775809")).dump() == "\"-9223372036854775809\"");

    CHECK(int_from_json(Json(5)) == Int(5));
    CHECK(int_from_json(Json(-12)) == Int(-12));
    CHECK(int_from_json(Json("123456789012345678901234567890")) ==
          Int("123456789012345678901234567890"));
    CHECK(int_from_json(Json("-4")) == Int(-4));

    CHECK_THROWS_AS(int_from_json(Json(1.5)), std::invalid_argument);
    CHECK_THROWS_AS(int_from_json(Json(true)), std::invalid_argument);
    CHECK_THROWS_AS(int_from_json(Json()), std::invalid_argument);
    CHECK_THROWS_AS(int_from_json(Json::array()), std::invalid_argument);
    CHECK_THROWS(int_from_json(Json("not a number")));
  }

  TEST_CASE("integer round-trip across magnitudes") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> bits(1, 300);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int trial = 0; trial < 200; ++trial) {
      Int v = 0;
      int width = bits(rng);
      for (int i = 0; i < width; ++i) v = v * 2 + bit(rng);
      if (bit(rng)) v = -v;
      CAPTURE(v.str());
      CHECK(int_from_json(int_to_json(v)) == v);
      CHECK(int_from_json(Json::parse(int_to_json(v).dump())) == v);
    }
  }

  TEST_CASE("polynomials are constant-first coefficient arrays") {
    Polynomial cubic = parse_polynomial("x^3 - x^2 - 10x + 16");
    CHECK(polynomial_to_json(cubic).dump() == "[16,-10,-1,1]");
    CHECK(polynomial_to_json(Polynomial{}).dump() == "[]");
    CHECK(polynomial_from_json(Json::parse("[16,-10,-1,1]")) == cubic);
    CHECK(polynomial_from_json(Json::parse("[]")) == Polynomial{});
    CHECK(polynomial_from_json(Json::parse("[1,2,0]")) == Polynomial{1, 2});
    CHECK(polynomial_from_json(Json::parse(R"([16,"-10",-1,"1"])")) == cubic);

    Polynomial big(std::vector<Int>{Int(1) << 100, Int(-3), Int(1)});
    Json j = polynomial_to_json(big);
    CHECK(j[0].is_string());
    CHECK(j[1].is_number_integer());
    CHECK(polynomial_from_json(j) == big);

    CHECK_THROWS_AS(polynomial_from_json(Json::parse("{}")), std::invalid_argument);
    CHECK_THROWS_AS(polynomial_from_json(Json::parse("3")), std::invalid_argument);
    CHECK_THROWS_AS(polynomial_from_json(Json::parse("[1.5]")), std::invalid_argument);
    CHECK_THROWS_AS(polynomial_from_json(Json::parse("[[2]]")), std::invalid_argument);
  }

  TEST_CASE("polynomial round-trips are byte-identical") {
    std::mt19937_64 rng(78);
    std::uniform_int_distribution<int> deg(0, 10);
    for (int trial = 0; trial < 200; ++trial) {
      Polynomial f = oracles::random_poly(rng, deg(rng), 1000000);
      std::string dumped = polynomial_to_json(f).dump();
      Polynomial back = polynomial_from_json(Json::parse(dumped));
      CHECK(back == f);
      CHECK(polynomial_to_json(back).dump() == dumped);
    }
  }

  TEST_CASE("polygon serialization carries prime, vertices and segments") {
    NewtonPolygon polygon = newton_polygon(parse_polynomial("x^3 - x^2 - 10x + 16"), Int(2));
    Json j = polygon_to_json(polygon);
    CHECK(keys_of(j) == std::vector<std::string>{"prime", "vertices", "segments"});
    CHECK(j["prime"] == 2);
    CHECK(j["vertices"].dump() == "[[0,4],[1,1],[2,0],[3,0]]");
    REQUIRE(j["segments"].size() == 3);
    CHECK(j["segments"][0].dump() == R"({"dx":1,"dy":-3,"multiplicity":1})");
    CHECK(j["segments"][1].dump() == R"({"dx":1,"dy":-1,"multiplicity":1})");
    CHECK(j["segments"][2].dump() == R"({"dx":1,"dy":0,"multiplicity":1})");

    NewtonPolygon quintic = newton_polygon(parse_polynomial("x^5 + x^3 + 32"), Int(2));
    Json q = polygon_to_json(quintic);
    CHECK(q["vertices"].dump() == "[[0,5],[3,0],[5,0]]");
    CHECK(q["segments"][0].dump() == R"({"dx":3,"dy":-5,"multiplicity":1})");
    CHECK(q["segments"][1].dump() == R"({"dx":1,"dy":0,"multiplicity":2})");
  }

  TEST_CASE("factorization serialization records the search limits") {
    Factorization fact = full_factor(parse_polynomial("x^3 - x^2 - 10x + 16"));
    Json j = factorization_to_json(fact);
    CHECK(keys_of(j) == std::vector<std::string>{"unit", "factors", "exhaustive", "limits"});
    CHECK(j["unit"] == 1);
    CHECK(j["factors"].dump() == "[[-2,1],[-8,1,1]]");
    CHECK(j["exhaustive"] == true);
    CHECK(j["limits"]["max_degree"] == 0);
    CHECK(j["limits"]["divisor_cap"] == 100000);
    CHECK(j["limits"]["value_bound"] == 1000000000000);

    KroneckerLimits tight;
    tight.divisor_cap = 1;
    Json capped = factorization_to_json(full_factor(parse_polynomial("x^2 + 3x + 8"), tight));
    CHECK(capped["exhaustive"] == false);
    CHECK(capped["limits"]["divisor_cap"] == 1);
  }

  TEST_CASE("certificate serialization, certified case") {
    Json j = certificate_to_json(check_theorem(parse_polynomial("x^5 + x^3 + 32")));
    CHECK(keys_of(j) ==
          std::vector<std::string>{"verdict", "criterion", "prime", "exponent", "m", "bound_lhs",
                                   "bound_rhs", "primality_probabilistic", "reports"});
    CHECK(j["verdict"] == "Irreducible");
    CHECK(j["criterion"] == "Theorem");
    CHECK(j["prime"] == 2);
    CHECK(j["exponent"] == 5);
    CHECK(j["m"] == 3);
    CHECK(j["bound_lhs"] == 32);
    CHECK(j["bound_rhs"] == 2);
    CHECK(j["primality_probabilistic"] == false);
    REQUIRE(j["reports"].size() == 5);
    for (const Json& r : j["reports"]) {
      CHECK(keys_of(r) == std::vector<std::string>{"name", "holds", "detail"});
      CHECK(r["holds"] == true);
    }
    CHECK(j["reports"][0]["name"] == "constant term is p^u");
  }

  TEST_CASE("certificate serialization, open and witnessed cases") {
    Json open = certificate_to_json(check_all(parse_polynomial("x^2 + x + 1")));
    CHECK(open["verdict"] == "Inconclusive");
    CHECK(open["criterion"] == "None");
    CHECK_FALSE(open.contains("prime"));
    CHECK_FALSE(open.contains("exponent"));
    CHECK_FALSE(open.contains("witness"));
    CHECK(open["m"] == 1);

    CheckAllOptions opts;
    opts.use_oracle = true;
    Json witnessed =
        certificate_to_json(check_all(parse_polynomial("x^3 - x^2 - 10x + 16"), opts));
    CHECK(witnessed["verdict"] == "ReducibleWitness");
    CHECK(witnessed["criterion"] == "Oracle");
    REQUIRE(witnessed.contains("witness"));
    CHECK(witnessed["witness"]["factors"].dump() == "[[-2,1],[-8,1,1]]");
    CHECK(witnessed["witness"]["unit"] == 1);
  }

  TEST_CASE("root set serialization") {
    RootSet rs = numeric_roots(parse_polynomial("x^2 - 1"));
    Json j = root_set_to_json(rs);
    CHECK(keys_of(j) == std::vector<std::string>{"roots", "residuals"});
    REQUIRE(j["roots"].size() == 2);
    CHECK(j["roots"][0][0].get<double>() == doctest::Approx(-1.0));
    CHECK(j["roots"][0][1].get<double>() == doctest::Approx(0.0));
    CHECK(j["roots"][1][0].get<double>() == doctest::Approx(1.0));
    REQUIRE(j["residuals"].size() == 2);
    for (const Json& r : j["residuals"]) CHECK(r.get<double>() < 1e-10);
  }
}

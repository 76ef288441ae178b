#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "holant/serialize.hpp"

using namespace holant;

TEST_CASE("parse_rational") {
  CHECK(*parse_rational("3") == Rational(3));
  CHECK(*parse_rational("-2/6") == Rational(-1, 3));
  CHECK(*parse_rational("0.25") == Rational(1, 4));
  CHECK(*parse_rational("1.5e-2") == Rational(3, 200));
  CHECK(*parse_rational("0.7071067811865476") == Rational(BigInt("7071067811865476"), BigInt("10000000000000000")));
  CHECK_FALSE(parse_rational("1/0"));
  CHECK_FALSE(parse_rational("abc"));
}

TEST_CASE("text signatures") {
  const auto a = parse_signature("sig d=3 [1, 1, 0, 0]");
  CHECK(a.numeric == SymmetricSignature{1, 1, 0, 0});
  REQUIRE(a.exact);
  CHECK(a.exact->values[1] == Rational(1));
  const auto b = parse_signature("sig d=4 [0, 1, 0, 1/4, 0]");
  CHECK(b.numeric[3] == 0.25);
  CHECK_THROWS_AS(parse_signature("sig d=2 [1, 0, 1, 0]"), ArgumentError);
  CHECK_THROWS_AS(parse_signature("[1,0]"), ArgumentError);
  CHECK_THROWS_AS(parse_signature("sig d=1 [1, x]"), ArgumentError);
}

TEST_CASE("JSON signatures") {
  const auto a = parse_signature(R"({"arity": 3, "values": [0, 1, 0, "1/2"]})");
  CHECK(a.numeric == SymmetricSignature{0, 1, 0, 0.5});
  CHECK(a.exact);
  const auto b = parse_signature(R"({"values": [1, 0.5, 0]})");
  CHECK_FALSE(b.exact);
  CHECK(b.numeric[1] == 0.5);
}

TEST_CASE("round trip through text and JSON") {
  const SymmetricSignature f{0.1, 1.0 / 3, 2.5e-7, 9};
  CHECK(parse_signature(signature_to_text(f)).numeric == f);
  CHECK(parse_signature(signature_to_json(f).dump()).numeric == f);
}

TEST_CASE("outcome JSON layout") {
  const Json j = outcome_to_json(classify({0, 1, 0, 0.5}));
  CHECK(j["tag"] == "PMEquivalent");
  CHECK(j["params"]["lambda"].get<double>() == doctest::Approx(0.5));
  CHECK(j["certificate"].is_null());
  const Json s = outcome_to_json(classify({1, 1, 0, 0}));
  CHECK(s["tag"] == "StableTransform");
  CHECK(s["certificate"]["eps"].get<double>() == doctest::Approx(1.0 / 6));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "holant/polynomial.hpp"
#include "holant/signature.hpp"

using namespace holant;

namespace {

void check_triple_proportional(const RecurrenceTriple& t, double a, double b, double c) {
  const RecurrenceTriple want = canonical(RecurrenceTriple{a, b, c});
  CHECK(t.a == doctest::Approx(want.a).epsilon(1e-9));
  CHECK(t.b == doctest::Approx(want.b).epsilon(1e-9));
  CHECK(t.c == doctest::Approx(want.c).epsilon(1e-9));
}

}  // namespace

TEST_CASE("detect_recurrence on the Fibonacci signature") {
  auto t = detect_recurrence({1, 1, 2, 3});
  REQUIRE(t);
  check_triple_proportional(*t, 1, 1, -1);
  CHECK_FALSE(t->ambiguous);
}

TEST_CASE("detect_recurrence on even subgraphs") {
  auto t = detect_recurrence({1, 0, 1, 0});
  REQUIRE(t);
  check_triple_proportional(*t, 1, 0, -1);
}

TEST_CASE("detect_recurrence on perfect matchings picks (0,0,1)") {
  auto t = detect_recurrence({0, 1, 0, 0});
  REQUIRE(t);
  check_triple_proportional(*t, 0, 0, 1);
  CHECK(recurrence_residual({0, 1, 0, 0}, *t) == 0.0);
}

TEST_CASE("detect_recurrence flags a two-dimensional solution space") {
  // Arity 3 geometric: rank one system, so every combination with a fixed ratio works.
  auto t = detect_recurrence({1, 2, 4, 8});
  REQUIRE(t);
  CHECK(t->ambiguous);
  CHECK(recurrence_residual({1, 2, 4, 8}, *t) <= 1e-9 * 8);
}

TEST_CASE("detect_recurrence rejects signatures without a recurrence") {
  CHECK_FALSE(detect_recurrence({1, 0, 0, 0, 1, 5}));
  CHECK_THROWS_AS(detect_recurrence({1, 2}), ArgumentError);
}

TEST_CASE("local_polynomial examples") {
  const ComplexPoly a = local_polynomial(SymmetricSignature{1, 1, 0, 0});
  CHECK(a(0) == Complex(1.0));
  CHECK(a(1) == Complex(3.0));
  CHECK(a(2) == Complex(0.0));
  const ComplexPoly b = local_polynomial(SymmetricSignature{1, 0, 1, 0});
  CHECK(b(2) == Complex(3.0));
  const ComplexPoly c = local_polynomial(SymmetricSignature{0, 1, 0, 0});
  CHECK(c(1) == Complex(3.0));
  CHECK(c(0) == Complex(0.0));
}

TEST_CASE("binomials are exact") {
  CHECK(binomial(60, 30) == BigInt("118264581564861424"));
  CHECK(binomial(5, 7) == 0);
}

TEST_CASE("reverse examples and involution") {
  CHECK(reverse(SymmetricSignature{0, 1, 1, 1}) == SymmetricSignature{1, 1, 1, 0});
  CHECK(reverse(SymmetricSignature{1, 0, 1, 0}) == SymmetricSignature{0, 1, 0, 1});
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0, 5);
  for (int i = 0; i < 20; ++i) {
    SymmetricSignature f;
    for (int j = 0; j < 6; ++j) f.values.push_back(u(rng));
    CHECK(reverse(reverse(f)) == f);
  }
}

TEST_CASE("tensor_decompose on Fibonacci") {
  const SymmetricSignature f{1, 1, 2, 3};
  const auto dec = tensor_decompose(f, {1, 1, -1});
  REQUIRE_FALSE(dec.confluent());
  const auto& d = std::get<DistinctRoots>(dec.form);
  // Quadratic formula on -z^2 + z + 1.
  CHECK(d.phi1.real() == doctest::Approx((1 + std::sqrt(5.0)) / 2));
  CHECK(d.phi2.real() == doctest::Approx((1 - std::sqrt(5.0)) / 2));
  for (int k = 0; k <= 3; ++k) CHECK(std::abs(dec.entry(k) - f[k]) < 1e-12);
}

TEST_CASE("tensor_decompose on even subgraphs") {
  const auto dec = tensor_decompose({1, 0, 1, 0}, {1, 0, -1});
  const auto& d = std::get<DistinctRoots>(dec.form);
  CHECK(d.phi1.real() == doctest::Approx(1.0));
  CHECK(d.phi2.real() == doctest::Approx(-1.0));
  CHECK(d.x.real() == doctest::Approx(0.5));
  CHECK(d.y.real() == doctest::Approx(0.5));
}

TEST_CASE("tensor_decompose on a geometric sequence") {
  const auto dec = tensor_decompose({1, 2, 4, 8}, {0, 2, -1});
  const auto& d = std::get<DistinctRoots>(dec.form);
  CHECK(d.phi1.real() == doctest::Approx(2.0));
  CHECK(d.x.real() == doctest::Approx(1.0));
  CHECK(std::abs(d.y) < 1e-12);
}

TEST_CASE("tensor_decompose rejects an inconsistent triple and c = 0") {
  CHECK_THROWS_AS(tensor_decompose({1, 1, 2, 3}, {1, 0, -1}), NumericalError);
  CHECK_THROWS_AS(tensor_decompose({1, 1, 0, 0}, {1, 1, 0}), ArgumentError);
}

TEST_CASE("tensor_decompose confluent case") {
  // f_k = (1 + k) 2^k: double root 2 of z^2 - 4z + 4.
  const SymmetricSignature f{1, 4, 12, 32, 80};
  const auto dec = tensor_decompose(f, {4, -4, 1});
  REQUIRE(dec.confluent());
  for (int k = 0; k <= 4; ++k) CHECK(std::abs(dec.entry(k) - f[k]) < 1e-9 * 80);
}

TEST_CASE("normalize_leading examples") {
  const auto a = normalize_leading({2, 2, 0, 0});
  CHECK(a.signature == SymmetricSignature{1, 1, 0, 0});
  CHECK(a.scale == 2.0);
  CHECK_FALSE(a.reversed);
  const auto b = normalize_leading({0, 1, 1, 1});
  CHECK(b.signature == SymmetricSignature{1, 1, 1, 0});
  CHECK(b.scale == 1.0);
  CHECK(b.reversed);
  CHECK_THROWS_AS(normalize_leading({0, 1, 0, 0}), ArgumentError);
}

TEST_CASE("property: recurrence residuals are within 1e-9 of max|f|") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.1, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double x = u(rng), y = u(rng), p1 = u(rng), p2 = u(rng);
    SymmetricSignature f;
    for (int k = 0; k <= 5; ++k) f.values.push_back(x * std::pow(p1, k) + y * std::pow(p2, k));
    auto t = detect_recurrence(f);
    REQUIRE(t);
    CHECK(recurrence_residual(f, *t) <= 1e-9 * max_abs(f));
  }
}

TEST_CASE("property: reversal mirrors the local polynomial") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0, 3);
  std::uniform_real_distribution<double> w(-2, 2);
  for (int trial = 0; trial < 10; ++trial) {
    SymmetricSignature f;
    for (int k = 0; k <= 5; ++k) f.values.push_back(u(rng));
    const ComplexPoly p = local_polynomial(f), q = local_polynomial(reverse(f));
    const Complex z(w(rng), w(rng));
    const Complex lhs = evaluate(q, z);
    const Complex rhs = std::pow(z, 5) * evaluate(p, 1.0 / z);
    CHECK(std::abs(lhs - rhs) <= 1e-9 * std::abs(rhs));
  }
}

TEST_CASE("property: tensor_decompose reconstructs random recurrent signatures") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.05, 2.0);
  int checked = 0;
  while (checked < 100) {
    const double x = u(rng), y = u(rng), p1 = u(rng), p2 = -u(rng) / 4;
    SymmetricSignature f;
    for (int k = 0; k <= 4; ++k) f.values.push_back(x * std::pow(p1, k) + y * std::pow(p2, k));
    bool non_negative = true;
    for (double v : f.values) non_negative = non_negative && v >= 0;
    if (!non_negative) continue;
    auto t = detect_recurrence(f);
    REQUIRE(t);
    const auto dec = tensor_decompose(f, *t);
    for (int k = 0; k <= 4; ++k) CHECK(std::abs(dec.entry(k) - f[k]) <= 1e-9 * max_abs(f));
    ++checked;
  }
}

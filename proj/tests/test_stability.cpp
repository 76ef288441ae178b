#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "holant/polynomial.hpp"
#include "holant/stability.hpp"
#include "oracles.hpp"

using namespace holant;

namespace {

ComplexPoly poly(std::initializer_list<Complex> c) {
  ComplexPoly p(static_cast<Eigen::Index>(c.size()));
  Eigen::Index i = 0;
  for (const Complex& v : c) p(i++) = v;
  return p;
}

bool contains_root(const std::vector<Complex>& roots, Complex r) {
  for (const Complex& x : roots)
    if (std::abs(x - r) < 1e-9) return true;
  return false;
}

}  // namespace

TEST_CASE("find_roots examples") {
  auto a = find_roots(poly({1, 3}));
  REQUIRE(a.size() == 1);
  CHECK(std::abs(a[0] + 1.0 / 3.0) < 1e-12);

  auto b = find_roots(poly({1, 0, 3}));
  REQUIRE(b.size() == 2);
  CHECK(contains_root(b, Complex(0, 1 / std::sqrt(3.0))));
  CHECK(contains_root(b, Complex(0, -1 / std::sqrt(3.0))));

  auto c = find_roots(poly({1, 0, 0, 0, 1}));
  REQUIRE(c.size() == 4);
  for (int k : {1, 3, 5, 7}) CHECK(contains_root(c, std::polar(1.0, k * M_PI / 4)));

  CHECK_THROWS_AS(find_roots(poly({0, 0})), ArgumentError);
}

TEST_CASE("h_eps_stability examples") {
  auto a = h_eps_stability(poly({1, 3}));
  REQUIRE(a);
  CHECK(a->margin == doctest::Approx(1.0 / 3.0));
  CHECK(a->eps == doctest::Approx(1.0 / 6.0));
  CHECK_FALSE(h_eps_stability(poly({1, 0, 3})));
  CHECK(h_eps_stability(poly({1})));
}

TEST_CASE("strip_halfwidth examples") {
  CHECK(strip_halfwidth(0.2) == doctest::Approx(0.02));
  CHECK(strip_halfwidth(1.0 / 6.0) == doctest::Approx(1.0 / 72.0));
  CHECK(strip_halfwidth(2.0) == doctest::Approx(0.45));
}

TEST_CASE("verify_strip_zero_free examples") {
  CHECK(verify_strip_zero_free(poly({1, 0, 0, 1}), 0.1).zero_free);
  CHECK(verify_strip_zero_free(oracle::poly_from_roots({-1.0 / 3, -1.0 / 3, -1.0 / 3, -1.0 / 3}), 0.2).zero_free);
  const auto bad = verify_strip_zero_free(oracle::poly_from_roots({0.5}), 0.1);
  CHECK_FALSE(bad.zero_free);
  CHECK(bad.min_distance == doctest::Approx(0.0));
}

TEST_CASE("distance_to_strip geometry") {
  CHECK(distance_to_strip(Complex(0.5, 0.0), 0.1) == 0.0);
  CHECK(distance_to_strip(Complex(0.5, 0.3), 0.1) == doctest::Approx(0.2));
  CHECK(distance_to_strip(Complex(-0.5, 0.0), 0.1) == doctest::Approx(0.4));
  CHECK(distance_to_strip(Complex(1.5, 0.0), 0.1) == doctest::Approx(0.4));
}

TEST_CASE("property: roots satisfy the residual bound") {
  std::mt19937_64 rng(23);
  std::normal_distribution<double> n(0, 1);
  for (int trial = 0; trial < 50; ++trial) {
    ComplexPoly p(9);
    for (int i = 0; i < 9; ++i) p(i) = Complex(n(rng), n(rng));
    const double scale = p.cwiseAbs().maxCoeff();
    for (const Complex& r : find_roots(p)) CHECK(std::abs(evaluate(p, r)) <= 1e-8 * scale);
  }
}

TEST_CASE("property: a certificate means every root is at least margin from the right half-plane") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(0.1, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Complex> roots;
    for (int i = 0; i < 4; ++i) roots.push_back(Complex(-u(rng), u(rng) - 1.5));
    const auto cert = h_eps_stability(oracle::poly_from_roots(roots));
    REQUIRE(cert);
    for (const Complex& r : roots) CHECK(r.real() <= -cert->margin + 1e-9);
    CHECK(cert->eps == doctest::Approx(cert->margin / 2));
  }
}

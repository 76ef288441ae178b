// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "holant/barvinok.hpp"
#include "holant/classifier.hpp"
#include "holant/gadget.hpp"
#include "holant/oracle.hpp"
#include "holant/polynomial.hpp"
#include "holant/serialize.hpp"
#include "oracles.hpp"

using namespace holant;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<std::pair<std::string, Multigraph>> oracle_instances() {
  std::vector<std::pair<std::string, Multigraph>> out{{"K4", complete(4)}};
  for (int i = 0; i < 10; ++i) {
    const int n = 8 + 2 * (i % 3);
    const std::uint64_t seed = 100 + static_cast<std::uint64_t>(i);
    out.emplace_back("rr(" + std::to_string(n) + ",3," + std::to_string(seed) + ")", random_regular(n, 3, seed).graph);
  }
  return out;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Verdict oracle_equivalence(const SymmetricSignature& f, const std::vector<std::pair<std::string, Multigraph>>& graphs,
                           double budget) {
  const auto t0 = Clock::now();
  double worst = 0.0;
  std::string worst_name, errors;
  int bad = 0;
  for (const auto& [name, g] : graphs) {
    const double z = brute_force_Z(g, f);
    try {
      const ApproxResult r = approximate_Z(g, f, 0.05);
      const double err = oracle::rel_err(r.estimate, z);
      if (err > worst) {
        worst = err;
        worst_name = name + " est " + fmt("%.6g", r.estimate) + " oracle " + fmt("%.6g", z) +
                     (r.converged ? " (converged" : " (not converged") + fmt(", k=%.0f)", r.k_used);
      }
      bad += err > 0.05;
    } catch (const std::exception& e) {
      ++bad;
      errors = std::string(" error: ") + e.what();
    }
  }
  const double secs = seconds_since(t0);
  Verdict v;
  v.pass = bad == 0 && secs < budget;
  v.detail = fmt("%.0f/%.0f outside 5%%, worst rel err %.4g", bad, static_cast<double>(graphs.size()), worst) +
             " at " + worst_name + errors;
  return v;
}

SymmetricSignature evaluator_signature(const SymmetricSignature& f) {
  const auto o = classify(f);
  const auto& st = std::get<outcome::StableTransform>(o).transform;
  SymmetricSignature g = transformed_signature(f, st);
  const double s = g[0];
  for (double& x : g.values) x /= s;
  g[0] = 1.0;
  return g;
}

Verdict criterion4() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(404);
  const std::vector<SymmetricSignature> fs{evaluator_signature({1, 1, 0, 0}), evaluator_signature({0, 1, 1, 1}),
                                           evaluator_signature({1, 1, 2, 3})};
  double worst = 0.0;
  int bad = 0;
  for (int i = 0; i < 30; ++i) {
    const int n = 6 + 2 * static_cast<int>(rng() % 3);
    const auto g = random_regular(n, 3, rng()).graph;
    const auto& f = fs[static_cast<std::size_t>(i) % 3];
    const int k = 1 + static_cast<int>(rng() % 5);
    const auto z = naive_low_coeffs(g, f, k);
    ComplexPoly c(k + 1);
    for (int j = 0; j <= k; ++j) c(j) = z[static_cast<std::size_t>(j)];
    const ComplexPoly pn = power_sums_from_coeffs(c, g.m()).p;
    const ComplexPoly pa = additive_power_sums(g, f, k).p;
    for (int j = 1; j <= k; ++j) {
      const double err = std::abs(pa(j) - pn(j)) / std::max(std::abs(pn(j)), 1e-12);
      worst = std::max(worst, err);
      bad += err > 1e-7;
    }
  }
  const double secs = seconds_since(t0);
  return {bad == 0 && secs < 120, fmt("worst rel diff %.3g over 30 cases", worst)};
}

Verdict criterion5() {
  std::vector<Multigraph> graphs{complete(4)};
  for (std::uint64_t seed = 0; seed < 4; ++seed) graphs.push_back(random_regular(6, 3, seed).graph);
  double min_dist = 1e300;
  bool ok = true;
  for (const SymmetricSignature& f : {SymmetricSignature{1, 1, 0, 0}, SymmetricSignature{0, 1, 1, 1},
                                      SymmetricSignature{1, 1, 2, 3}}) {
    const auto o = classify(f);
    const auto& st = std::get<outcome::StableTransform>(o).transform;
    const double delta = strip_halfwidth(st.certificate.eps);
    const SymmetricSignature g = evaluator_signature(f);
    for (const auto& h : graphs) {
      const auto z = brute_force_coeffs(h, g);
      ComplexPoly p(static_cast<Eigen::Index>(z.size()));
      for (std::size_t i = 0; i < z.size(); ++i) p(static_cast<Eigen::Index>(i)) = z[i];
      p = trimmed(p, 1e-12);
      if (p.size() < 2) continue;
      const StripCheck check = verify_strip_zero_free(p, delta);
      ok = ok && check.zero_free;
      min_dist = std::min(min_dist, check.min_distance);
    }
  }
  return {ok && min_dist > 0, fmt("min distance to strip %.4g", min_dist)};
}

Verdict criterion6() {
  std::mt19937_64 rng(606);
  std::uniform_real_distribution<double> r(0, 1), t(0, 2 * M_PI);
  int violations = 0;
  double endpoint = 0.0;
  for (double delta : {0.05, 0.1, 0.3}) {
    const PhiMap phi = build_phi(delta);
    endpoint = std::max({endpoint, std::abs(phi(0.0)), std::abs(phi(1.0) - 1.0)});
    for (int i = 0; i < 500; ++i) {
      const Complex w = phi(std::polar(phi.beta() * std::sqrt(r(rng)), t(rng)));
      violations += std::abs(w.imag()) > 2 * delta || w.real() < -2 * delta || w.real() > 1 + 2 * delta;
    }
  }
  return {violations == 0 && endpoint <= 1e-12,
          fmt("%.0f violations in 1500 samples, endpoint error %.3g", violations, endpoint)};
}

Verdict criterion7() {
  std::mt19937_64 rng(707);
  std::uniform_real_distribution<double> u(0, 2), angle(0, 2 * M_PI);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const int n = 4 + 2 * static_cast<int>(rng() % 3);
    const auto g = random_regular(n, 3, rng()).graph;
    SymmetricSignature f;
    for (int j = 0; j <= 3; ++j) f.values.push_back(u(rng));
    const double th = angle(rng), c = std::cos(th), s = std::sin(th);
    const Matrix2 m = rng() % 2 ? Matrix2::from_real(c, s, -s, c) : Matrix2::from_real(c, s, s, -c);
    const double z = brute_force_Z(g, f);
    const Complex zt = brute_force_Z(g, apply_holographic(f, m));
    worst = std::max(worst, std::abs(zt - z) / std::abs(z));
  }
  return {worst <= 1e-8, fmt("worst rel diff %.3g over 20 triples", worst)};
}

Verdict criterion8() {
  struct Row {
    SymmetricSignature f;
    std::string tag;
    std::function<bool(const ClassificationOutcome&)> params;
  };
  const auto near = [](double a, double b) { return std::abs(a - b) <= 1e-8; };
  const std::vector<Row> rows{
      {{1, 0, 1, 0}, "ExactPolyTime", nullptr},
      {{9, 6, 6, 9},
       "FerroIsing",
       [&](const ClassificationOutcome& o) { return near(std::get<outcome::FerroIsing>(o).beta, 5.0 / 4.0); }},
      {{0, 1, 0, 0},
       "PMEquivalent",
       [&](const ClassificationOutcome& o) { return near(std::get<outcome::PMEquivalent>(o).lambda, 0.0); }},
      {{0, 1, 0, 0.5},
       "PMEquivalent",
       [&](const ClassificationOutcome& o) { return near(std::get<outcome::PMEquivalent>(o).lambda, 0.5); }},
      {{0, std::sin(M_PI / 4), std::sin(M_PI / 2), std::sin(3 * M_PI / 4), 0},
       "TypeI",
       [&](const ClassificationOutcome& o) { return near(std::get<outcome::TypeI>(o).lambda, 1.0); }},
      {{1, 1, 0, 0}, "StableTransform", nullptr},
      {{1, 1, 2, 3}, "StableTransform", nullptr},
  };
  int good = 0;
  std::string misses;
  for (const auto& row : rows) {
    const auto o = classify(row.f);
    const bool ok = tag_name(o) == row.tag && (!row.params || row.params(o));
    good += ok;
    if (!ok) misses += " " + signature_to_text(row.f) + "->" + tag_name(o);
  }
  return {good == static_cast<int>(rows.size()),
          fmt("%.0f/%.0f rows match", good, static_cast<double>(rows.size())) + misses};
}

Verdict criterion9() {
  const auto load = [](const std::string& name) {
    return parse_gadget_json(Json::parse(read_file(std::string(HOLANT_FIXTURE_DIR) + "/" + name)));
  };
  double worst = 0.0;
  for (const auto& [file, mu] : {std::pair{"parity_pair_mu03.json", 0.3}, std::pair{"parity_pair_mu07.json", 0.7}}) {
    const auto spec = load(file);
    const auto eff = compose_gadget(spec.gadget, spec.edge_signature);
    const double c = 2 * mu * mu + 2 * mu * mu * mu;
    worst = std::max({worst, std::abs(eff[0] - c), std::abs(eff[1]), std::abs(eff[2] - c)});
  }
  {
    const auto spec = load("pm_triangle.json");
    const auto eff = compose_gadget(spec.gadget, spec.edge_signature);
    worst = std::max({worst, std::abs(eff[0]), std::abs(eff[1] - 1.0), std::abs(eff[2]), std::abs(eff[3] - 1.0)});
  }
  for (const auto& [n1, n2] : {std::pair{1, 2}, std::pair{3, 2}}) {
    const auto spec = load("weighted_equality_" + std::to_string(n1) + "_" + std::to_string(n2) + ".json");
    const auto eff = compose_gadget(spec.gadget, spec.edge_signature);
    const Complex s = eff[0];
    worst = std::max({worst, std::abs(eff[1] / s), std::abs(eff[2] / s - static_cast<double>(n2) / n1)});
  }
  return {worst <= 1e-10, fmt("worst entry error %.3g over 5 fixtures", worst)};
}

Verdict criterion10() {
  std::mt19937_64 rng(1010);
  std::normal_distribution<double> n(0, 1);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    ComplexPoly c(13);
    for (int j = 0; j <= 12; ++j) c(j) = Complex(n(rng), n(rng));
    c /= c(0);
    const ComplexPoly back = coeffs_from_power_sums(power_sums_from_coeffs(c, 12), 12);
    worst = std::max(worst, (back - c).cwiseAbs().maxCoeff() / c.cwiseAbs().maxCoeff());
  }
  return {worst <= 1e-10, fmt("worst rel error %.3g over 50 polynomials", worst)};
}

Verdict criterion11() {
  const ExactSignature f{Rational(1), Rational(0), Rational(1)};
  int good = 0;
  for (int n = 3; n <= 8; ++n) {
    std::vector<Rational> want(static_cast<std::size_t>(n) + 1, Rational(0));
    want.front() = want.back() = 1;
    good += brute_force_coeffs(cycle(n), f) == want;
  }
  return {good == 6, fmt("%.0f/6 cycles give 1 + z^n exactly", good)};
}

}  // namespace

int main() {
  const auto graphs = oracle_instances();
  std::vector<Multigraph> small;
  std::vector<std::pair<std::string, Multigraph>> fib;
  for (int i = 0; i < 5; ++i) {
    const int n = 6 + 2 * (i % 3);
    const std::uint64_t seed = 300 + static_cast<std::uint64_t>(i);
    fib.emplace_back("rr(" + std::to_string(n) + ",3," + std::to_string(seed) + ")", random_regular(n, 3, seed).graph);
  }

  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"oracle equivalence, matchings", [&] { return oracle_equivalence({1, 1, 0, 0}, graphs, 60); }},
      {"oracle equivalence, edge covers", [&] { return oracle_equivalence({0, 1, 1, 1}, graphs, 60); }},
      {"oracle equivalence, Fibonacci gates", [&] { return oracle_equivalence({1, 1, 2, 3}, fib, 60); }},
      {"engine agreement", criterion4},
      {"strip zero-freeness", criterion5},
      {"phi contract", criterion6},
      {"holographic invariance", criterion7},
      {"classification golden table", criterion8},
      {"gadget fixtures", criterion9},
      {"Newton round trip", criterion10},
      {"cycle even-subgraph identity", criterion11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    const auto t0 = Clock::now();
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::printf("%s %2zu %s: %s [%.1fs]\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                v.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

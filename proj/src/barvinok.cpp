#include "holant/barvinok.hpp"

#include <cmath>
#include <limits>

#include <boost/math/quadrature/exp_sinh.hpp>

#include "holant/classifier.hpp"
#include "holant/polynomial.hpp"

namespace holant {

namespace {

constexpr double kDirectDegree = 1 << 20;
constexpr double kDirectGuard = 1 << 26;

bool within(Complex a, Complex b, double rel) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

}  // namespace

PhiMap::PhiMap(double delta) : delta_(delta) {
  if (!(delta > 0.0 && delta <= 0.45)) throw ArgumentError("build_phi: delta must lie in (0, 0.45]");
  const double e = std::exp(-1.0 / delta);
  e_ = e;
  alpha_ = 1.0 - e;
  beta_ = 1.0 + e / (2.0 - 2.0 * e);
  // log(10(1+alpha)) - log(1-alpha) over log 2 - log(1+alpha), rearranged to
  // stay finite when e underflows relative to 1.
  const double num = std::log(10.0 * (2.0 - e)) + 1.0 / delta;
  const double den = -std::log1p(-e / 2.0);
  degree_ = std::ceil(num / den);
  if (degree_ <= kDirectDegree) {
    double sum = 0.0, power = 1.0;
    for (long long i = 1; i <= static_cast<long long>(degree_); ++i) {
      power *= alpha_;
      sum += power / static_cast<double>(i);
    }
    normalizer_ = delta_ * sum;
  } else {
    // h(1) = -delta log(1 - alpha) = 1 exactly.
    normalizer_ = 1.0 - delta_ * series_tail(1.0).real();
  }
}

double PhiMap::coefficient(long long i) const {
  if (i <= 0 || static_cast<double>(i) > degree_) return 0.0;
  return delta_ * std::exp(static_cast<double>(i) * std::log1p(-e_)) / static_cast<double>(i) / normalizer_;
}

ComplexPoly PhiMap::prefix(int k) const {
  ComplexPoly out = ComplexPoly::Zero(k + 1);
  for (int i = 1; i <= k; ++i) out(i) = coefficient(i);
  return out;
}

Complex PhiMap::series_tail(Complex z) const {
  const double n1 = degree_ + 1.0;
  const Complex log_lead = n1 * (std::log1p(-e_) + std::log(z));
  if (log_lead.real() < -745.0) return 0.0;
  const Complex lead = std::exp(log_lead) / n1;
  boost::math::quadrature::exp_sinh<double> integrator;
  // 1 - alpha z E written so that alpha = 1 - e keeps e when e << 1.
  const auto integrand = [&](double u, bool imag) {
    const double s = u / n1;
    const Complex denom = (1.0 - z) - z * std::expm1(-s) + e_ * z * std::exp(-s);
    const Complex v = std::exp(-u) / denom;
    return imag ? v.imag() : v.real();
  };
  const double inf = std::numeric_limits<double>::infinity();
  const double re = integrator.integrate([&](double u) { return integrand(u, false); }, 0.0, inf);
  const double im = z.imag() == 0.0 ? 0.0 : integrator.integrate([&](double u) { return integrand(u, true); }, 0.0, inf);
  return lead * Complex(re, im);
}

Complex PhiMap::evaluate_direct(Complex z) const {
  if (degree_ > kDirectGuard) throw GuardError("PhiMap: degree too large for direct evaluation");
  const Complex w = alpha_ * z;
  Complex sum = 0.0, power = 1.0;
  for (long long i = 1; i <= static_cast<long long>(degree_); ++i) {
    power *= w;
    sum += power / static_cast<double>(i);
  }
  return delta_ * sum / normalizer_;
}

Complex PhiMap::evaluate_closed(Complex z) const {
  const Complex h = -delta_ * std::log((1.0 - z) + e_ * z);
  return (h - delta_ * series_tail(z)) / normalizer_;
}

Complex PhiMap::operator()(Complex z) const {
  return degree_ <= kDirectDegree ? evaluate_direct(z) : evaluate_closed(z);
}

PhiMap build_phi(double delta) { return PhiMap(delta); }

ComplexPoly compose_prefix(const ComplexPoly& c, const ComplexPoly& phi, int k) {
  if (k < 0) throw ArgumentError("compose_prefix: k must be non-negative");
  if (phi.size() > 0 && std::abs(phi(0)) > 1e-14) throw ArgumentError("compose_prefix: requires phi(0) = 0");
  const auto coeff = [&](int i) { return i < c.size() ? c(i) : Complex(0.0); };
  ComplexPoly out = ComplexPoly::Zero(k + 1);
  out(0) = coeff(k);
  for (int i = k - 1; i >= 0; --i) {
    out = multiply_truncated(out, phi, k);
    out(0) += coeff(i);
  }
  return out;
}

Complex taylor_log_eval(const PowerSums& p, int k) {
  if (p.order() < k) throw ArgumentError("taylor_log_eval: not enough power sums");
  Complex t = 0.0;
  for (int i = 1; i <= k; ++i) t -= p.p(i) / static_cast<double>(i);
  return t;
}

ApproxResult approximate_Z(const Multigraph& g, const SymmetricSignature& f, double eps,
                           const ApproxOptions& options) {
  if (!(eps > 0.0 && eps < 1.0)) throw ArgumentError("approximate_Z: eps must lie in (0, 1)");
  require_non_negative(f);
  if (!g.regular(f.arity()))
    throw ArgumentError("approximate_Z: graph is not " + std::to_string(f.arity()) + "-regular");

  const ClassificationOutcome outcome = classify(f);
  const auto* stable = std::get_if<outcome::StableTransform>(&outcome);
  if (!stable)
    throw ArgumentError("approximate_Z: signature classifies as " + tag_name(outcome) +
                        ", which has no evaluator route");
  const StabilizingTransform& st = stable->transform;

  ApproxResult result;
  result.eps_requested = eps;
  result.transform = st.m;
  result.reversed = st.target == Target::Reversed;
  result.eps_certificate = st.certificate.eps;
  result.delta = strip_halfwidth(st.certificate.eps);

  SymmetricSignature gn = transformed_signature(f, st);
  result.scale_factor = gn[0];
  if (gn[0] == 0.0) throw NumericalError("approximate_Z: transformed signature has g_0 = 0");
  for (double& v : gn.values) v /= result.scale_factor;
  gn[0] = 1.0;

  const PhiMap phi(result.delta / 2.0);
  result.phi_degree = phi.degree();

  const int m = g.m();
  const Complex log_scale = static_cast<double>(g.n) * std::log(Complex(result.scale_factor));
  int k = static_cast<int>(std::ceil(4.0 * std::log(std::max(m, 2) / eps)));
  k = std::max(1, std::min(k, options.max_order));

  Complex last_value = 0.0;
  while (true) {
    ComplexPoly c(k + 1);
    if (options.prefer_additive && k <= kAdditiveMaxOrder) {
      c = coeffs_from_power_sums(additive_power_sums(g, gn, k), k);
      result.engine = "additive";
    } else {
      const int kk = std::min(k, m);
      if (naive_work(m, kk) > kNaiveWorkGuard) {
        if (result.diagnostics.empty()) throw GuardError("approximate_Z: coefficient work guard exceeded");
        break;
      }
      const auto z = naive_low_coeffs(g, gn, k);
      for (int j = 0; j <= k; ++j) c(j) = z[static_cast<std::size_t>(j)];
      result.engine = "naive";
    }

    const ComplexPoly composed = compose_prefix(c, phi.prefix(k), k);
    const PowerSums sums = power_sums_from_coeffs(composed, m);
    result.diagnostics.clear();
    std::vector<Complex> values;
    Complex t = 0.0;
    for (int j = 1; j <= k; ++j) {
      t -= sums.p(j) / static_cast<double>(j);
      values.push_back(std::exp(log_scale + t));
      result.diagnostics.push_back(values.back().real());
    }
    result.k_used = k;
    last_value = values.back();

    const std::size_t n = values.size();
    if (n >= 3) {
      const double tol = eps / 4.0;
      const Complex a = values[n - 3], b = values[n - 2], c3 = values[n - 1];
      if (within(a, b, tol) && within(b, c3, tol) && within(a, c3, tol)) {
        result.converged = true;
        break;
      }
    }
    if (k >= options.max_order) break;
    k = std::min(2 * k, options.max_order);
  }

  result.estimate = last_value.real();
  result.imaginary_residue = std::abs(last_value.imag()) / std::max(std::abs(last_value.real()), 1e-300);
  result.imaginary_ok = result.imaginary_residue <= 1e-6;
  return result;
}

}  // namespace holant

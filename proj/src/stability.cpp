#include "holant/stability.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

#include <Eigen/Eigenvalues>

#include "holant/polynomial.hpp"

namespace holant {

namespace {

constexpr double kStableTol = 1e-9;
constexpr double kLeadingTol = 1e-12;
constexpr double kDeltaCap = 0.45;

Complex polish(const ComplexPoly& p, const ComplexPoly& dp, Complex r) {
  const Complex value = evaluate(p, r);
  const Complex slope = evaluate(dp, r);
  if (slope == Complex(0.0)) return r;
  const Complex candidate = r - value / slope;
  return std::abs(evaluate(p, candidate)) < std::abs(value) ? candidate : r;
}

}  // namespace

std::vector<Complex> find_roots(const ComplexPoly& p) {
  const ComplexPoly q = trimmed(p);
  if (q.size() == 0) throw ArgumentError("find_roots: zero polynomial");
  const Eigen::Index n = q.size() - 1;
  if (n == 0) return {};

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) companion(i, n - 1) = -q(i) / q(n);

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw NumericalError("find_roots: eigenvalue solver failed");

  ComplexPoly dq(n);
  for (Eigen::Index i = 1; i <= n; ++i) dq(i - 1) = static_cast<double>(i) * q(i);

  std::vector<Complex> roots;
  roots.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) roots.push_back(polish(q, dq, solver.eigenvalues()(i)));
  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return roots;
}

std::optional<StabilityCertificate> h_eps_stability(const ComplexPoly& p) {
  const ComplexPoly q = trimmed(p, kLeadingTol);
  if (q.size() == 0) return std::nullopt;

  StabilityCertificate cert;
  cert.roots = find_roots(q);
  for (const Complex& r : cert.roots) {
    if (!(r.real() < -kStableTol)) return std::nullopt;
    cert.margin = std::min(cert.margin, -r.real());
  }
  cert.eps = cert.roots.empty() ? 1.0 : cert.margin / 2.0;
  return cert;
}

double strip_halfwidth(double eps) {
  if (!(eps > 0.0)) throw ArgumentError("strip_halfwidth: eps must be positive");
  return std::min(eps * eps / 2.0, kDeltaCap);
}

double distance_to_strip(Complex z, double delta) {
  const double dx = std::max({-delta - z.real(), 0.0, z.real() - (1.0 + delta)});
  const double dy = std::max(std::abs(z.imag()) - delta, 0.0);
  return std::hypot(dx, dy);
}

StripCheck verify_strip_zero_free(const ComplexPoly& p, double delta) {
  StripCheck check;
  for (const Complex& r : find_roots(p)) {
    const double dist = distance_to_strip(r, delta);
    check.min_distance = std::min(check.min_distance, dist);
    if (dist == 0.0) check.zero_free = false;
  }
  return check;
}

void write_roots_csv(std::ostream& out, const std::vector<Complex>& roots,
                     const std::string& poly_id, bool header) {
  if (header) out << "re,im,poly_id\n";
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::setprecision(17);
  for (const Complex& r : roots) out << r.real() << ',' << r.imag() << ',' << poly_id << '\n';
  out.flags(flags);
  out.precision(precision);
}

}  // namespace holant

#include "holant/signature.hpp"

#include <cmath>
#include <string>

#include <Eigen/SVD>

namespace holant {

namespace {

constexpr double kAcceptTol = 1e-6;
constexpr double kSnapTol = 1e-12;

template <typename Scalar>
ComplexPoly local_polynomial_impl(const Signature<Scalar>& f) {
  const int d = f.arity();
  if (d < 0) throw ArgumentError("local_polynomial: empty signature");
  ComplexPoly p(d + 1);
  for (int i = 0; i <= d; ++i)
    p(i) = binomial(d, i).template convert_to<double>() * scalar_cast<Complex>(f[i]);
  return p;
}

}  // namespace

void require_non_negative(const SymmetricSignature& f) {
  if (f.arity() < 0) throw ArgumentError("signature has no entries");
  for (double v : f.values) {
    if (!std::isfinite(v)) throw ArgumentError("signature entry is not finite");
    if (v < 0.0) throw ArgumentError("signature entry is negative: " + std::to_string(v));
  }
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

ComplexPoly local_polynomial(const SymmetricSignature& f) { return local_polynomial_impl(f); }
ComplexPoly local_polynomial(const ComplexSignature& f) { return local_polynomial_impl(f); }

double recurrence_residual(const SymmetricSignature& f, const RecurrenceTriple& t) {
  double worst = 0.0;
  for (int k = 0; k + 2 <= f.arity(); ++k)
    worst = std::max(worst, std::abs(t.a * f[k] + t.b * f[k + 1] + t.c * f[k + 2]));
  return worst;
}

RecurrenceTriple canonical(RecurrenceTriple t) {
  const double m = std::max({std::abs(t.a), std::abs(t.b), std::abs(t.c)});
  if (m == 0.0) throw ArgumentError("recurrence triple is (0,0,0)");
  double* entries[] = {&t.a, &t.b, &t.c};
  for (double* e : entries) {
    *e /= m;
    if (std::abs(*e) < kSnapTol) *e = 0.0;
  }
  for (double* e : entries) {
    if (*e == 0.0) continue;
    if (*e < 0.0)
      for (double* g : entries) *g = -*g + 0.0;
    break;
  }
  return t;
}

std::optional<RecurrenceTriple> detect_recurrence(const SymmetricSignature& f) {
  const int d = f.arity();
  if (d < 2) throw ArgumentError("detect_recurrence: arity must be at least 2");

  const double scale = max_abs(f);
  if (scale == 0.0) return RecurrenceTriple{0.0, 0.0, 1.0, true};

  // Padded to three rows so the SVD always exposes three singular values.
  const Eigen::Index rows = std::max(d - 1, 3);
  Eigen::MatrixXd system = Eigen::MatrixXd::Zero(rows, 3);
  for (int k = 0; k + 2 <= d; ++k) system.row(k) << f[k], f[k + 1], f[k + 2];

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(system, Eigen::ComputeFullV);
  const Eigen::Vector3d sigma = svd.singularValues();
  const Eigen::Matrix3d v = svd.matrixV();
  const double tol = kAcceptTol * scale;
  if (sigma(2) > tol) return std::nullopt;

  Eigen::Vector3d triple = v.col(2);
  bool ambiguous = false;
  if (sigma(1) <= tol) {
    ambiguous = true;
    if (sigma(0) <= tol) {
      triple = Eigen::Vector3d::UnitZ();
    } else {
      // Direction of the null plane with a = 0; the whole plane when both
      // basis vectors already have a = 0.
      const Eigen::Vector3d u = v.col(1);
      const Eigen::Vector3d w = v.col(2);
      if (std::abs(u(0)) < kSnapTol && std::abs(w(0)) < kSnapTol) {
        triple = Eigen::Vector3d::UnitZ();
        if ((system * triple).norm() > tol) triple = w;
      } else {
        triple = u * w(0) - w * u(0);
        triple(0) = 0.0;
      }
    }
  }
  return canonical(RecurrenceTriple{triple(0), triple(1), triple(2), ambiguous});
}

Complex TensorDecomposition::entry(int k) const {
  if (const auto* d = std::get_if<DistinctRoots>(&form))
    return d->x * std::pow(d->phi1, k) + d->y * std::pow(d->phi2, k);
  const auto& c = std::get<ConfluentRoot>(form);
  const double lead = k == 0 ? 1.0 : std::pow(c.phi, k);
  const double tail = k == 0 ? 0.0 : k * (k == 1 ? 1.0 : std::pow(c.phi, k - 1));
  return {c.x * lead + c.y * tail, 0.0};
}

TensorDecomposition tensor_decompose(const SymmetricSignature& f, const RecurrenceTriple& t) {
  if (f.arity() < 1) throw ArgumentError("tensor_decompose: arity must be at least 1");
  const RecurrenceTriple n = canonical(t);
  if (std::abs(n.c) < kSnapTol)
    throw ArgumentError("tensor_decompose: requires c != 0 (geometric branch is handled by the caller)");

  const double disc = n.discriminant();
  const double disc_scale = std::max(n.b * n.b, 4.0 * std::abs(n.a * n.c));
  TensorDecomposition out;
  if (std::abs(disc) <= 1e-9 * disc_scale) {
    const double phi = -n.b / (2.0 * n.c);
    out.form = ConfluentRoot{f[0], f[1] - f[0] * phi, phi};
    out.real = true;
  } else {
    const Complex root = std::sqrt(Complex(disc, 0.0));
    Complex phi1 = (-n.b + root) / (2.0 * n.c);
    Complex phi2 = (-n.b - root) / (2.0 * n.c);
    if (phi1.real() < phi2.real() || (phi1.real() == phi2.real() && phi1.imag() < phi2.imag()))
      std::swap(phi1, phi2);
    const Complex y = (f[1] - phi1 * f[0]) / (phi2 - phi1);
    out.form = DistinctRoots{Complex(f[0]) - y, y, phi1, phi2};
    out.real = disc > 0.0;
  }

  const double scale = std::max(max_abs(f), 1e-300);
  for (int k = 0; k <= f.arity(); ++k) {
    if (std::abs(out.entry(k) - f[k]) > 1e-6 * scale)
      throw NumericalError("tensor_decompose: reconstruction misses f_" + std::to_string(k) +
                           "; the triple is inconsistent with the signature");
  }
  return out;
}

NormalizedSignature normalize_leading(const SymmetricSignature& f) {
  if (f.arity() < 0) throw ArgumentError("normalize_leading: empty signature");
  NormalizedSignature out;
  if (f[0] > 0.0) {
    out.signature = f;
  } else if (f[f.arity()] > 0.0) {
    out.signature = reverse(f);
    out.reversed = true;
  } else {
    throw ArgumentError("normalize_leading: f_0 = f_d = 0 (exceptional case)");
  }
  out.scale = out.signature[0];
  for (double& v : out.signature.values) v /= out.scale;
  out.signature[0] = 1.0;
  return out;
}

}  // namespace holant

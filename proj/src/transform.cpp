#include "holant/transform.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/LU>

#include "holant/polynomial.hpp"

namespace holant {

namespace {

constexpr double kStructTol = 1e-9;

bool near(double a, double b, double scale) { return std::abs(a - b) <= kStructTol * scale; }

/// (root, sign) with sign * root^d == v; sign is +1 for odd d.
std::pair<double, int> tensor_root(double v, int d) {
  const double magnitude = std::pow(std::abs(v), 1.0 / d);
  if (d % 2 == 1) return {std::copysign(magnitude, v), 1};
  return {magnitude, v < 0.0 ? -1 : 1};
}

struct Candidate {
  double w = 0.0;
  RotationConvention convention = RotationConvention::Rotation;
  bool flip = false;
  const char* rule = "identity";
};

/// Constructive choice for a confluent characteristic root.
std::optional<Candidate> confluent_choice(const SymmetricSignature& h, const RecurrenceTriple& t) {
  if (std::abs(t.c) < kStructTol) return std::nullopt;
  if (std::abs(t.b) < kStructTol) return Candidate{0.0, RotationConvention::Rotation, false, "identity"};

  const int d = h.arity();
  const double phi = -t.b / (2.0 * t.c);
  const double x = h[0];
  const double y = (h[1] - x * phi) / phi;
  const double lead = x + y * d;
  Candidate c{0.0, RotationConvention::Rotation, false, "confluent"};
  if (std::abs(lead) <= kStructTol * (std::abs(x) + std::abs(y * d))) {
    c.w = phi < 0.0 ? -2.0 * phi : 1.0 / (2.0 * phi);
    return c;
  }
  if (phi > 0.0 && lead > 0.0) {
    c.w = std::min(1.0 / (2.0 * phi), x / (2.0 * lead * phi));
    return c;
  }
  return std::nullopt;
}

/// w for the root -(t + s w) / (s - t w) of a one-sided pair.
double one_sided_w(double s, double t) {
  if (t == 0.0) return 1.0;
  if (s == 0.0) return -1.0;
  if (s * t < 0.0) return 2.0 * s / t;
  return 0.0;
}

/// Choice for two distinct real characteristic roots.
std::optional<Candidate> distinct_choice(const SymmetricSignature& h, const RecurrenceTriple& t) {
  TensorPair pair = tensor_pair(h, t);
  double p = pair.p, q = pair.q, s = pair.s, tt = pair.t;
  const double scale = std::max({std::abs(p), std::abs(q), std::abs(s), std::abs(tt)});
  const double norm_scale = scale * scale;
  if (near(p * tt, q * s, norm_scale)) return std::nullopt;  // degenerate
  if (near(p * p + q * q, s * s + tt * tt, norm_scale)) return std::nullopt;

  Candidate c{0.0, RotationConvention::Reflection, false, "distinct"};
  if (near(std::abs(q), std::abs(tt), scale)) {
    std::swap(p, q);
    std::swap(s, tt);
    c.flip = true;
  }
  const bool first_zero = std::abs(p) <= kStructTol * scale && std::abs(q) <= kStructTol * scale;
  const bool second_zero = std::abs(s) <= kStructTol * scale && std::abs(tt) <= kStructTol * scale;
  if (first_zero) {
    c.w = one_sided_w(s, tt);
  } else if (second_zero) {
    c.w = one_sided_w(p, q);
  } else {
    const double ratio = (p * p + q * q - s * s - tt * tt) / (q * s - p * tt);
    const double alpha = ratio > 0.0 ? -1.0 : 1.0;
    c.w = (alpha * s + p) / (alpha * tt + q);
  }
  return c;
}

std::optional<StabilityCertificate> certify(const SymmetricSignature& f, const Matrix2& m) {
  return h_eps_stability(local_polynomial(apply_holographic(f, m)));
}

}  // namespace

bool is_orthogonal(const Eigen::Matrix2cd& m, double tol) {
  const Eigen::Matrix2cd prod = m * m.transpose();
  return (prod - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() <= tol;
}

Matrix2 Matrix2::from(const Eigen::Matrix2cd& m) { return Matrix2{m, is_orthogonal(m)}; }

Matrix2 Matrix2::from_real(double m00, double m01, double m10, double m11) {
  Eigen::Matrix2cd m;
  m << m00, m01, m10, m11;
  return from(m);
}

Matrix2 Matrix2::inverse() const {
  if (std::abs(m.determinant()) <= 1e-12) throw ArgumentError("Matrix2::inverse: singular matrix");
  return from(m.inverse());
}

ComplexSignature apply_holographic(const ComplexSignature& f, const Matrix2& m) {
  const int d = f.arity();
  if (d < 1) throw ArgumentError("apply_holographic: arity must be at least 1");
  ComplexPoly zero_col(2), one_col(2);
  zero_col << m(0, 0), m(1, 0);
  one_col << m(0, 1), m(1, 1);

  // Powers of each column factor, built incrementally.
  std::vector<ComplexPoly> zero_pow(d + 1), one_pow(d + 1);
  zero_pow[0] = one_pow[0] = ComplexPoly::Ones(1);
  for (int i = 1; i <= d; ++i) {
    zero_pow[i] = multiply(zero_pow[i - 1], zero_col);
    one_pow[i] = multiply(one_pow[i - 1], one_col);
  }

  ComplexSignature g;
  g.values.resize(static_cast<std::size_t>(d) + 1);
  for (int j = 0; j <= d; ++j) {
    const ComplexPoly kernel = multiply(zero_pow[d - j], one_pow[j]);
    Complex acc = 0.0;
    for (int i = 0; i <= d; ++i) acc += f[i] * kernel(i);
    g[j] = acc;
  }
  return g;
}

ComplexSignature apply_holographic(const SymmetricSignature& f, const Matrix2& m) {
  return apply_holographic(signature_cast<Complex>(f), m);
}

SymmetricSignature cast_real(const ComplexSignature& g, double rel_tol) {
  const double scale = std::max(max_abs(g), 1e-300);
  SymmetricSignature out;
  out.values.reserve(g.values.size());
  for (const Complex& v : g.values) {
    if (std::abs(v.imag()) > rel_tol * scale)
      throw NumericalError("cast_real: imaginary residue exceeds tolerance");
    out.values.push_back(v.real());
  }
  return out;
}

BinarySignature transform_equality(const Matrix2& t) {
  if (std::abs(t.m.determinant()) <= 1e-12) throw ArgumentError("transform_equality: singular matrix");
  const Complex p = t(0, 0), q = t(0, 1), s = t(1, 0), u = t(1, 1);
  return BinarySignature{{p * p + q * q, p * s + q * u, s * s + u * u}};
}

const char* to_string(RotationConvention c) {
  return c == RotationConvention::Rotation ? "delta0" : "delta1";
}

const char* to_string(Target t) { return t == Target::Original ? "f" : "reverse(f)"; }

Matrix2 rotation_from_w(double w, RotationConvention convention) {
  if (!std::isfinite(w)) throw ArgumentError("rotation_from_w: w must be finite");
  const double n = 1.0 / std::sqrt(1.0 + w * w);
  Matrix2 m = convention == RotationConvention::Rotation
                  ? Matrix2::from_real(n, w * n, -w * n, n)
                  : Matrix2::from_real(w * n, n, n, -w * n);
  if (!m.orthogonal) throw NumericalError("rotation_from_w: orthogonality check failed");
  return m;
}

TensorPair tensor_pair(const SymmetricSignature& f, const RecurrenceTriple& triple) {
  const int d = f.arity();
  if (!(f[0] > 0.0)) throw ArgumentError("tensor_pair: requires f_0 > 0");
  const RecurrenceTriple t = canonical(triple);
  if (!(t.discriminant() > 0.0)) throw ArgumentError("tensor_pair: requires b^2 - 4ac > 0");

  double x = 0.0, y = 0.0, phi1 = 0.0, phi2 = 0.0;
  bool geometric = false;
  if (std::abs(t.c) < 1e-12) {
    // f_0..f_{d-1} geometric; f = x (1, phi)^d + y (0, 1)^d.
    geometric = true;
    phi1 = -t.a / t.b;
    x = f[0];
    y = f[d] - x * std::pow(phi1, d);
  } else {
    const auto dec = std::get<DistinctRoots>(tensor_decompose(f, t).form);
    x = dec.x.real();
    y = dec.y.real();
    phi1 = dec.phi1.real();
    phi2 = dec.phi2.real();
  }
  // Roundoff in x or y would be amplified by the d-th root.
  const double snap = 1e-12 * max_abs(f);
  if (std::abs(x) < snap) x = 0.0;
  if (std::abs(y) < snap) y = 0.0;
  const auto [rx, sx] = tensor_root(x, d);
  const auto [ry, sy] = tensor_root(y, d);
  TensorPair pair;
  pair.p = rx;
  pair.q = rx * phi1;
  pair.s = geometric ? 0.0 : ry;
  pair.t = geometric ? ry : ry * phi2;
  pair.r = sx * sy;
  return pair;
}

std::optional<StabilizingTransform> find_stabilizing_transform(const SymmetricSignature& f) {
  const NormalizedSignature norm = normalize_leading(f);
  const SymmetricSignature& h = norm.signature;
  const auto triple = detect_recurrence(h);
  if (!triple) throw ArgumentError("find_stabilizing_transform: signature has no second-order recurrence");

  const auto target_for = [&](bool flip) {
    return (norm.reversed != flip) ? Target::Reversed : Target::Original;
  };
  const SymmetricSignature reversed_f = reverse(f);
  const auto signature_for = [&](Target t) -> const SymmetricSignature& {
    return t == Target::Original ? f : reversed_f;
  };

  const double disc = triple->discriminant();
  const double disc_scale = std::max(triple->b * triple->b, 4.0 * std::abs(triple->a * triple->c));
  std::optional<Candidate> constructive;
  if (std::abs(disc) <= kStructTol * disc_scale) {
    constructive = confluent_choice(h, *triple);
  } else if (disc < 0.0) {
    constructive = Candidate{};
  } else {
    constructive = distinct_choice(h, *triple);
  }

  if (constructive) {
    const Matrix2 m = rotation_from_w(constructive->w, constructive->convention);
    const Target target = target_for(constructive->flip);
    if (auto cert = certify(signature_for(target), m))
      return StabilizingTransform{m, target, *cert, constructive->w, constructive->convention,
                                  constructive->rule};
  }

  // Fallback: first stable candidate in order of |w|, then w > 0, then
  // convention, then target.
  std::vector<double> grid;
  for (int i = 0; i <= 2000; ++i) grid.push_back(-10.0 + 0.01 * i);
  std::stable_sort(grid.begin(), grid.end(), [](double a, double b) {
    const double aa = std::abs(a), ab = std::abs(b);
    if (std::abs(aa - ab) > 1e-12) return aa < ab;
    return a > b;
  });
  for (double w : grid) {
    for (RotationConvention conv : {RotationConvention::Rotation, RotationConvention::Reflection}) {
      const Matrix2 m = rotation_from_w(w, conv);
      for (Target target : {Target::Original, Target::Reversed}) {
        if (auto cert = certify(signature_for(target), m))
          return StabilizingTransform{m, target, *cert, w, conv, "grid"};
      }
    }
  }
  return std::nullopt;
}

SymmetricSignature transformed_signature(const SymmetricSignature& f, const StabilizingTransform& st) {
  const SymmetricSignature base = st.target == Target::Original ? f : reverse(f);
  return cast_real(apply_holographic(base, st.m));
}

}  // namespace holant

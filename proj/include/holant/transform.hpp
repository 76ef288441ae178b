#ifndef HOLANT_TRANSFORM_HPP
#define HOLANT_TRANSFORM_HPP

#include <array>
#include <optional>
#include <string>

#include <Eigen/Core>

#include "holant/signature.hpp"
#include "holant/stability.hpp"

namespace holant {

/// 2x2 complex matrix for holographic transformations.
struct Matrix2 {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
  /// Set only after M M^T = I has been verified to 1e-10.
  bool orthogonal = true;

  static Matrix2 identity() { return {}; }
  /// Wraps an arbitrary matrix, setting the orthogonal flag by inspection.
  static Matrix2 from(const Eigen::Matrix2cd& m);
  static Matrix2 from_real(double m00, double m01, double m10, double m11);

  Complex operator()(int i, int j) const { return m(i, j); }
  Matrix2 inverse() const;
  Matrix2 operator*(const Matrix2& other) const { return from(m * other.m); }
};

/// M M^T = I entrywise to tol (transpose, not adjoint: O_2(C)).
bool is_orthogonal(const Eigen::Matrix2cd& m, double tol = 1e-10);

/// Symmetric arity-2 signature [b_0, b_1, b_2].
struct BinarySignature {
  std::array<Complex, 3> values{};

  Complex operator[](int i) const { return values[static_cast<std::size_t>(i)]; }
};

/// g = f M^{tensor d}: g_j = sum_i f_i K(i,j), where K(., j) are the
/// coefficients of (M00 + M10 t)^(d-j) (M01 + M11 t)^j.
ComplexSignature apply_holographic(const ComplexSignature& f, const Matrix2& m);
ComplexSignature apply_holographic(const SymmetricSignature& f, const Matrix2& m);

/// Drops imaginary parts up to 1e-9 relative; NumericalError beyond that.
SymmetricSignature cast_real(const ComplexSignature& g, double rel_tol = 1e-9);

/// Edge-side image of =_2 under T: T^{tensor 2} (=_2) = [T00^2 + T01^2,
/// T00 T10 + T01 T11, T10^2 + T11^2]. Pairs with vertex transform f T^{-1}.
BinarySignature transform_equality(const Matrix2& t);

enum class RotationConvention {
  Rotation,    ///< (1 + w^2)^(-1/2) [[1, w], [-w, 1]]
  Reflection,  ///< (1 + w^2)^(-1/2) [[w, 1], [1, -w]]
};

const char* to_string(RotationConvention c);

Matrix2 rotation_from_w(double w, RotationConvention convention);

/// f ~ (p,q)^{tensor d} + r (s,t)^{tensor d} up to a nonzero factor; r = +-1.
struct TensorPair {
  double p = 0.0, q = 0.0, s = 0.0, t = 0.0;
  int r = 1;
};

/// Real rank-2 decomposition of a signature whose recurrence has a positive
/// discriminant. Requires f_0 > 0.
TensorPair tensor_pair(const SymmetricSignature& f, const RecurrenceTriple& triple);

enum class Target { Original, Reversed };

const char* to_string(Target t);

struct StabilizingTransform {
  Matrix2 m;
  Target target = Target::Original;
  StabilityCertificate certificate;
  double w = 0.0;
  RotationConvention convention = RotationConvention::Rotation;
  /// Which construction produced m: "identity", "confluent", "distinct", "grid".
  std::string rule;
};

/// Orthogonal M making the local polynomial of f M^{tensor d} (or of its
/// reversal) H_eps-stable. Constructive choice first, validated numerically;
/// a grid over w in [-10, 10] is the fallback. Requires a recurrence and
/// f_0 > 0 or f_d > 0.
std::optional<StabilizingTransform> find_stabilizing_transform(const SymmetricSignature& f);

/// The signature the transform acts on, transformed and cast to reals.
SymmetricSignature transformed_signature(const SymmetricSignature& f, const StabilizingTransform& st);

}  // namespace holant

#endif  // HOLANT_TRANSFORM_HPP

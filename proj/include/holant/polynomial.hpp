#ifndef HOLANT_POLYNOMIAL_HPP
#define HOLANT_POLYNOMIAL_HPP

#include <algorithm>
#include <cmath>

#include "holant/types.hpp"

namespace holant {

/// Horner evaluation of sum_i c_i z^i.
template <typename Derived, typename Point>
auto evaluate(const Eigen::MatrixBase<Derived>& coeffs, const Point& z) {
  using Scalar = typename Derived::Scalar;
  using Result = decltype(Scalar() * Point());
  Result acc(0);
  for (Eigen::Index i = coeffs.size() - 1; i >= 0; --i) acc = acc * z + coeffs(i);
  return acc;
}

/// Index of the last coefficient with |c_i| > tol * max|c_j|, or -1 for the
/// zero polynomial.
template <typename Derived>
Eigen::Index degree(const Eigen::MatrixBase<Derived>& coeffs, double rel_tol = 0.0) {
  const double scale = coeffs.size() ? coeffs.cwiseAbs().maxCoeff() : 0.0;
  if (scale == 0.0) return -1;
  for (Eigen::Index i = coeffs.size() - 1; i >= 0; --i)
    if (std::abs(coeffs(i)) > rel_tol * scale) return i;
  return -1;
}

/// Copy with trailing coefficients below rel_tol * max|c| removed.
template <typename Derived>
Vector<typename Derived::Scalar> trimmed(const Eigen::MatrixBase<Derived>& coeffs,
                                         double rel_tol = 0.0) {
  const Eigen::Index n = degree(coeffs, rel_tol);
  return coeffs.head(std::max<Eigen::Index>(n + 1, 0));
}

/// Product of two series truncated to order k (k+1 coefficients).
template <typename DerivedA, typename DerivedB>
Vector<typename DerivedA::Scalar> multiply_truncated(const Eigen::MatrixBase<DerivedA>& a,
                                                     const Eigen::MatrixBase<DerivedB>& b,
                                                     Eigen::Index k) {
  using Scalar = typename DerivedA::Scalar;
  Vector<Scalar> out = Vector<Scalar>::Zero(k + 1);
  const Eigen::Index na = std::min<Eigen::Index>(a.size(), k + 1);
  for (Eigen::Index i = 0; i < na; ++i) {
    if (a(i) == Scalar(0)) continue;
    const Eigen::Index nb = std::min<Eigen::Index>(b.size(), k + 1 - i);
    for (Eigen::Index j = 0; j < nb; ++j) out(i + j) += a(i) * b(j);
  }
  return out;
}

/// Full product.
template <typename DerivedA, typename DerivedB>
Vector<typename DerivedA::Scalar> multiply(const Eigen::MatrixBase<DerivedA>& a,
                                           const Eigen::MatrixBase<DerivedB>& b) {
  if (a.size() == 0 || b.size() == 0) return {};
  return multiply_truncated(a, b, a.size() + b.size() - 2);
}

}  // namespace holant

#endif  // HOLANT_POLYNOMIAL_HPP

#ifndef HOLANT_TYPES_HPP
#define HOLANT_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

namespace holant {

using Complex = std::complex<double>;
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Dense coefficient vector c_0..c_n, lowest degree first.
using ComplexPoly = Eigen::VectorXcd;
using RealPoly = Eigen::VectorXd;

/// Precondition or domain violation by the caller.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A work guard (enumeration size, truncation order) would be exceeded.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical consistency check failed (reconstruction, symmetry, cast).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

template <typename T>
struct is_complex : std::false_type {};
template <typename T>
struct is_complex<std::complex<T>> : std::true_type {};

}  // namespace detail

/// Scalar conversion used across the oracle/engine templates.
template <typename To, typename From>
To scalar_cast(const From& x) {
  if constexpr (std::is_same_v<To, From>) {
    return x;
  } else if constexpr (detail::is_complex<To>::value) {
    if constexpr (detail::is_complex<From>::value) {
      return To(x.real(), x.imag());
    } else if constexpr (std::is_same_v<From, Rational>) {
      return To(x.template convert_to<double>(), 0.0);
    } else {
      return To(static_cast<double>(x), 0.0);
    }
  } else if constexpr (std::is_same_v<From, Rational>) {
    return x.template convert_to<To>();
  } else {
    return static_cast<To>(x);
  }
}

}  // namespace holant

#endif  // HOLANT_TYPES_HPP

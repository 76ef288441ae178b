#ifndef HOLANT_SIGNATURE_HPP
#define HOLANT_SIGNATURE_HPP

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <variant>
#include <vector>

#include "holant/types.hpp"

namespace holant {

/// Symmetric Boolean constraint function [f_0, ..., f_d]; entry i is the
/// value on inputs of Hamming weight i.
template <typename Scalar>
struct Signature {
  std::vector<Scalar> values;

  Signature() = default;
  explicit Signature(std::vector<Scalar> v) : values(std::move(v)) {}
  Signature(std::initializer_list<Scalar> v) : values(v) {}

  int arity() const { return static_cast<int>(values.size()) - 1; }
  const Scalar& operator[](int i) const { return values[static_cast<std::size_t>(i)]; }
  Scalar& operator[](int i) { return values[static_cast<std::size_t>(i)]; }

  bool operator==(const Signature&) const = default;
};

using SymmetricSignature = Signature<double>;
using ComplexSignature = Signature<Complex>;
using ExactSignature = Signature<Rational>;

template <typename To, typename From>
Signature<To> signature_cast(const Signature<From>& f) {
  Signature<To> out;
  out.values.reserve(f.values.size());
  for (const auto& v : f.values) out.values.push_back(scalar_cast<To>(v));
  return out;
}

/// [f_d, ..., f_0].
template <typename Scalar>
Signature<Scalar> reverse(const Signature<Scalar>& f) {
  Signature<Scalar> out = f;
  std::reverse(out.values.begin(), out.values.end());
  return out;
}

template <typename Scalar>
Signature<Scalar> scaled(const Signature<Scalar>& f, const Scalar& t) {
  Signature<Scalar> out = f;
  for (auto& v : out.values) v *= t;
  return out;
}

template <typename Scalar>
double max_abs(const Signature<Scalar>& f) {
  double m = 0.0;
  for (const auto& v : f.values) m = std::max(m, std::abs(scalar_cast<Complex>(v)));
  return m;
}

/// Throws ArgumentError when an entry is negative or not finite.
void require_non_negative(const SymmetricSignature& f);

/// Exact binomial coefficient.
BigInt binomial(int n, int k);

/// P_f(z) = sum_i binom(d,i) f_i z^i.
ComplexPoly local_polynomial(const SymmetricSignature& f);
ComplexPoly local_polynomial(const ComplexSignature& f);

/// a f_k + b f_{k+1} + c f_{k+2} = 0 for 0 <= k <= d-2.
struct RecurrenceTriple {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  /// Set when the solution space has dimension >= 2 and a canonical
  /// representative was picked.
  bool ambiguous = false;

  double discriminant() const { return b * b - 4.0 * a * c; }
};

/// Largest residual |a f_k + b f_{k+1} + c f_{k+2}| over k.
double recurrence_residual(const SymmetricSignature& f, const RecurrenceTriple& t);

/// Least-singular-direction solve of the (d-1) x 3 recurrence system.
/// Returns nullopt when no triple fits within 1e-6 * max|f_i|.
std::optional<RecurrenceTriple> detect_recurrence(const SymmetricSignature& f);

/// Rescale so the largest-magnitude entry has magnitude 1 and the first
/// nonzero entry is positive.
RecurrenceTriple canonical(RecurrenceTriple t);

/// f_k = x phi1^k + y phi2^k.
struct DistinctRoots {
  Complex x, y, phi1, phi2;
};

/// f_k = x phi^k + y k phi^(k-1), with 0 * 0^(-1) = 0.
struct ConfluentRoot {
  double x = 0.0, y = 0.0, phi = 0.0;
};

struct TensorDecomposition {
  std::variant<DistinctRoots, ConfluentRoot> form;
  bool real = true;

  Complex entry(int k) const;
  bool confluent() const { return std::holds_alternative<ConfluentRoot>(form); }
};

/// Closed form of f from the characteristic roots of c z^2 + b z + a.
/// Requires c != 0; throws NumericalError when the reconstruction misses f
/// by more than 1e-6 relative.
TensorDecomposition tensor_decompose(const SymmetricSignature& f, const RecurrenceTriple& t);

/// g = f / f_0 (after reversal if f_0 = 0 < f_d), with Z(G;f) = scale^|V| Z(G;g).
struct NormalizedSignature {
  SymmetricSignature signature;
  double scale = 1.0;
  bool reversed = false;
};

NormalizedSignature normalize_leading(const SymmetricSignature& f);

}  // namespace holant

#endif  // HOLANT_SIGNATURE_HPP

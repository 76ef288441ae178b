#ifndef HOLANT_BARVINOK_HPP
#define HOLANT_BARVINOK_HPP

#include <string>
#include <vector>

#include "holant/coeffs.hpp"
#include "holant/graph.hpp"
#include "holant/signature.hpp"
#include "holant/transform.hpp"

namespace holant {

/// phi(z) = T_m(h)(z) / T_m(h)(1) with h(z) = -delta log(1 - alpha z).
///
/// The degree m grows like e^{1/delta}, so the polynomial is never stored:
/// coefficients are produced on demand and values come from the direct sum when
/// m <= 2^20, otherwise from h(z) minus the series tail written as a
/// Laplace-type integral.
class PhiMap {
 public:
  explicit PhiMap(double delta);

  double delta() const { return delta_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  /// ceil of the degree formula; exact below 2^53.
  double degree() const { return degree_; }
  /// T_m(h)(1); phi is divided by it.
  double normalizer() const { return normalizer_; }

  /// Coefficient of z^i in phi (0 for i = 0 and i > m).
  double coefficient(long long i) const;
  /// Coefficients 0..k.
  ComplexPoly prefix(int k) const;

  Complex operator()(Complex z) const;
  /// Sum over all m terms; GuardError when m > 2^26.
  Complex evaluate_direct(Complex z) const;
  /// h(z) - delta * tail(z), normalized.
  Complex evaluate_closed(Complex z) const;

 private:
  /// sum_{i > m} (alpha z)^i / i for |alpha z| < 1.
  Complex series_tail(Complex z) const;

  double delta_, e_, alpha_, beta_, degree_, normalizer_;
};

/// The map is built lazily; see PhiMap. delta must lie in (0, 0.45].
PhiMap build_phi(double delta);

/// First k+1 coefficients of P(phi(z)) by Horner on truncated series.
/// Requires phi(0) = 0.
ComplexPoly compose_prefix(const ComplexPoly& c, const ComplexPoly& phi, int k);

/// -sum_{i=1}^k p_i / i, the truncated Taylor value of log P at 1 when P(0) = 1.
Complex taylor_log_eval(const PowerSums& p, int k);

struct ApproxOptions {
  /// Hard cap on the truncation order.
  int max_order = 512;
  /// Use the additive engine whenever k <= 8.
  bool prefer_additive = true;
};

struct ApproxResult {
  double estimate = 0.0;
  int k_used = 0;
  double eps_requested = 0.0;
  double eps_certificate = 0.0;
  double delta = 0.0;
  Matrix2 transform;
  bool reversed = false;
  /// g_0 of the transformed signature; Z = scale^|V| * P(1) of g / g_0.
  double scale_factor = 1.0;
  bool converged = false;
  /// "additive" or "naive" for the last order computed.
  std::string engine;
  double phi_degree = 0.0;
  /// |Im| / |Re| of the final complex estimate.
  double imaginary_residue = 0.0;
  bool imaginary_ok = true;
  /// scale^|V| * Re exp(T_j) for j = 1..k_used.
  std::vector<double> diagnostics;
};

/// Classify, transform, truncate and evaluate. Throws ArgumentError when the
/// signature does not classify as StableTransform or G is not arity-regular.
ApproxResult approximate_Z(const Multigraph& g, const SymmetricSignature& f, double eps,
                           const ApproxOptions& options = {});

}  // namespace holant

#endif  // HOLANT_BARVINOK_HPP

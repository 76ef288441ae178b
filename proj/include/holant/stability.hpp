#ifndef HOLANT_STABILITY_HPP
#define HOLANT_STABILITY_HPP

#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "holant/types.hpp"

namespace holant {

/// Companion-matrix eigenvalues followed by one Newton polish per root.
/// Exact trailing zeros are dropped first; the zero polynomial is rejected.
std::vector<Complex> find_roots(const ComplexPoly& p);

/// Nonvanishing on Re z >= -eps, witnessed by the root list.
struct StabilityCertificate {
  double eps = 0.0;
  /// min over roots of -Re(root); +inf when there are no roots.
  double margin = std::numeric_limits<double>::infinity();
  std::vector<Complex> roots;
};

/// Certificate with eps = margin / 2 when every root has Re < -1e-9.
/// Coefficients below 1e-12 relative at the top are treated as zeros at
/// infinity. Constant nonzero polynomials get eps = 1.
std::optional<StabilityCertificate> h_eps_stability(const ComplexPoly& p);

/// delta = eps^2 / 2, capped at 0.45.
double strip_halfwidth(double eps);

struct StripCheck {
  bool zero_free = true;
  /// Euclidean distance from the nearest root to the strip (0 when inside).
  double min_distance = std::numeric_limits<double>::infinity();
};

/// Euclidean distance from z to {|Im w| <= delta, -delta <= Re w <= 1+delta}.
double distance_to_strip(Complex z, double delta);

StripCheck verify_strip_zero_free(const ComplexPoly& p, double delta);

/// Rows `re,im,poly_id`, with a header line.
void write_roots_csv(std::ostream& out, const std::vector<Complex>& roots,
                     const std::string& poly_id, bool header = true);

}  // namespace holant

#endif  // HOLANT_STABILITY_HPP

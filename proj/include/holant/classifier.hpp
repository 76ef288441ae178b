#ifndef HOLANT_CLASSIFIER_HPP
#define HOLANT_CLASSIFIER_HPP

#include <string>
#include <variant>

#include "holant/signature.hpp"
#include "holant/transform.hpp"

namespace holant {

namespace outcome {

struct IdenticallyZero {};

struct NoRecurrence {};

/// f = lambda (u, v)^{tensor d}; Z = lambda^|V| (u^2 + v^2)^|E|.
struct Degenerate {
  double lambda = 0.0;
  double u = 0.0;
  double v = 0.0;
};

struct ExactPolyTime {};

/// Equivalent to Ising with edge signature [beta, 1, beta] after f T^{tensor d} = (=_d),
/// T = `transform`.
struct FerroIsing {
  double beta = 0.0;
  Matrix2 transform;
};

struct StableTransform {
  StabilizingTransform transform;
};

/// f or its reversal is proportional to [0,1,0,lambda,0,lambda^2,...] (odd d)
/// or lambda [0,1,0,mu,0,mu^2,...,0] with mu = ratio (even d). lambda = 0 is
/// the single-spike case.
struct PMEquivalent {
  double lambda = 0.0;
  double ratio = 0.0;
  bool reversed = false;
};

/// [0, lambda sin(pi/d), lambda^2 sin(2pi/d), ..., 0] up to scale.
struct TypeI {
  double lambda = 0.0;
};

}  // namespace outcome

using ClassificationOutcome =
    std::variant<outcome::IdenticallyZero, outcome::NoRecurrence, outcome::Degenerate,
                 outcome::ExactPolyTime, outcome::FerroIsing, outcome::StableTransform,
                 outcome::PMEquivalent, outcome::TypeI>;

/// "IdenticallyZero", "NoRecurrence", ...
std::string tag_name(const ClassificationOutcome& o);

/// Full decision tree. Requires arity >= 3 and non-negative entries.
ClassificationOutcome classify(const SymmetricSignature& f);

/// f_0 = f_d = 0 branch: single spike, interleaved geometric, or sine profile.
ClassificationOutcome detect_exceptional(const SymmetricSignature& f);

/// Closed-form Z for a Degenerate outcome on a graph with the given sizes.
double degenerate_Z(const outcome::Degenerate& d, int vertices, int edges);

}  // namespace holant

#endif  // HOLANT_CLASSIFIER_HPP

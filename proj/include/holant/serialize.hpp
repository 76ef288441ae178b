#ifndef HOLANT_SERIALIZE_HPP
#define HOLANT_SERIALIZE_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "holant/barvinok.hpp"
#include "holant/classifier.hpp"
#include "holant/coeffs.hpp"
#include "holant/gadget.hpp"
#include "holant/signature.hpp"
#include "holant/transform.hpp"

namespace holant {

using Json = nlohmann::json;

/// A parsed signature; `exact` is present when every entry was written as an
/// integer, decimal or fraction.
struct ParsedSignature {
  SymmetricSignature numeric;
  std::optional<ExactSignature> exact;
};

/// "3", "-0.25", "1/3", "2.5e-3" as an exact rational; nullopt otherwise.
std::optional<Rational> parse_rational(const std::string& token);

/// `sig d=3 [1,1,0,0]`.
ParsedSignature parse_signature_text(const std::string& text);
/// {"arity": 3, "values": [1, 1, 0, 0]}; string entries parse exactly.
ParsedSignature parse_signature_json(const Json& j);
/// JSON when the first non-blank character is '{', text format otherwise.
ParsedSignature parse_signature(const std::string& content);

std::string signature_to_text(const SymmetricSignature& f);
Json signature_to_json(const SymmetricSignature& f);
Json signature_to_json(const ComplexSignature& f);

Json complex_to_json(Complex z);
/// 2x2 array of [re, im] pairs.
Json matrix_to_json(const Matrix2& m);
Json certificate_to_json(const StabilityCertificate& c);
/// {"tag", "params", "certificate"}.
Json outcome_to_json(const ClassificationOutcome& o);
Json approx_result_to_json(const ApproxResult& r);
Json additive_debug_json(const AdditiveResult& r);

/// {"vertices": [...], "library": {...}, "edges": [[u,v]...], "dangling":
/// [[v,count]...], "edge_signature": [b0,b1,b2]}. Vertex entries are arrays
/// or names from "library"; complex entries are [re, im].
struct GadgetSpec {
  OpenGadget gadget;
  BinarySignature edge_signature{{Complex(1.0), Complex(0.0), Complex(1.0)}};
};
GadgetSpec parse_gadget_json(const Json& j);

std::string read_file(const std::string& path);

}  // namespace holant

#endif  // HOLANT_SERIALIZE_HPP

#include "holant/serialize.hpp"

#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>

namespace holant {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

/// Decimal digits only; cpp_int would read a leading 0 as an octal prefix.
BigInt decimal_int(const std::string& digits) {
  std::string sign, body = digits;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    if (body[0] == '-') sign = "-";
    body = body.substr(1);
  }
  const auto first = body.find_first_not_of('0');
  body = first == std::string::npos ? "0" : body.substr(first);
  return BigInt(sign + body);
}

BigInt pow10(int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= 10;
  return r;
}

ParsedSignature finish(std::vector<std::string> tokens, std::optional<int> arity) {
  ParsedSignature out;
  ExactSignature exact;
  bool all_exact = true;
  for (const auto& tok : tokens) {
    if (auto r = parse_rational(tok)) {
      exact.values.push_back(*r);
      out.numeric.values.push_back(r->convert_to<double>());
    } else {
      all_exact = false;
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || tok.empty()) throw ArgumentError("signature: cannot parse entry '" + tok + "'");
      out.numeric.values.push_back(v);
    }
  }
  if (out.numeric.values.size() < 2) throw ArgumentError("signature: need at least two entries");
  if (arity && *arity != out.numeric.arity())
    throw ArgumentError("signature: declared arity " + std::to_string(*arity) + " but " +
                        std::to_string(out.numeric.values.size()) + " entries given");
  if (all_exact) out.exact = exact;
  return out;
}

Complex json_complex(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) return {j[0].get<double>(), j[1].get<double>()};
  if (j.is_string()) {
    if (auto r = parse_rational(j.get<std::string>())) return {r->convert_to<double>(), 0.0};
  }
  throw ArgumentError("gadget: bad scalar " + j.dump());
}

ComplexSignature json_complex_signature(const Json& j) {
  if (!j.is_array()) throw ArgumentError("gadget: signature must be an array");
  ComplexSignature f;
  for (const auto& v : j) f.values.push_back(json_complex(v));
  return f;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& raw) {
  const std::string token = trim(raw);
  static const std::regex fraction(R"(^([+-]?\d+)\s*/\s*(\d+)$)");
  static const std::regex decimal(R"(^([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?$)");
  std::smatch m;
  if (std::regex_match(token, m, fraction)) {
    const BigInt den = decimal_int(m[2].str());
    if (den == 0) return std::nullopt;
    return Rational(decimal_int(m[1].str()), den);
  }
  if (std::regex_match(token, m, decimal)) {
    const std::string whole = m[2].str(), frac = m[3].str();
    if (whole.empty() && frac.empty()) return std::nullopt;
    const BigInt digits = decimal_int(whole + frac);
    int exponent = m[4].matched ? std::stoi(m[4].str()) : 0;
    exponent -= static_cast<int>(frac.size());
    if (std::abs(exponent) > 400) return std::nullopt;
    Rational r = exponent >= 0 ? Rational(digits * pow10(exponent)) : Rational(digits, pow10(-exponent));
    if (m[1].str() == "-") r = -r;
    return r;
  }
  return std::nullopt;
}

ParsedSignature parse_signature_text(const std::string& text) {
  static const std::regex form(R"(^\s*sig\s+d\s*=\s*(\d+)\s*\[([^\]]*)\]\s*$)");
  std::smatch m;
  const std::string line = trim(text);
  if (!std::regex_match(line, m, form)) throw ArgumentError("signature: expected `sig d=<arity> [f0,...,fd]`");
  std::vector<std::string> tokens;
  std::stringstream ss(m[2].str());
  for (std::string tok; std::getline(ss, tok, ',');) tokens.push_back(trim(tok));
  return finish(tokens, std::stoi(m[1].str()));
}

ParsedSignature parse_signature_json(const Json& j) {
  if (!j.is_object() || !j.contains("values") || !j["values"].is_array())
    throw ArgumentError("signature: JSON needs a `values` array");
  std::vector<std::string> tokens;
  bool inexact = false;
  for (const auto& v : j["values"]) {
    if (v.is_string()) {
      tokens.push_back(v.get<std::string>());
    } else if (v.is_number_integer()) {
      tokens.push_back(v.dump());
    } else if (v.is_number()) {
      inexact = true;
      std::ostringstream os;
      os.precision(17);
      os << v.get<double>();
      tokens.push_back(os.str());
    } else {
      throw ArgumentError("signature: bad entry " + v.dump());
    }
  }
  std::optional<int> arity;
  if (j.contains("arity")) arity = j["arity"].get<int>();
  ParsedSignature out = finish(tokens, arity);
  // Binary floating-point JSON numbers are not decimal literals.
  if (inexact) out.exact.reset();
  return out;
}

ParsedSignature parse_signature(const std::string& content) {
  const std::string t = trim(content);
  if (!t.empty() && t.front() == '{') return parse_signature_json(Json::parse(t));
  return parse_signature_text(t);
}

std::string signature_to_text(const SymmetricSignature& f) {
  std::ostringstream os;
  os.precision(17);
  os << "sig d=" << f.arity() << " [";
  for (int i = 0; i <= f.arity(); ++i) os << (i ? "," : "") << f[i];
  os << "]";
  return os.str();
}

Json signature_to_json(const SymmetricSignature& f) { return Json{{"arity", f.arity()}, {"values", f.values}}; }

Json signature_to_json(const ComplexSignature& f) {
  Json values = Json::array();
  for (const Complex& v : f.values) values.push_back(complex_to_json(v));
  return Json{{"arity", f.arity()}, {"values", values}};
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json matrix_to_json(const Matrix2& m) {
  return Json::array({Json::array({complex_to_json(m(0, 0)), complex_to_json(m(0, 1))}),
                      Json::array({complex_to_json(m(1, 0)), complex_to_json(m(1, 1))})});
}

Json certificate_to_json(const StabilityCertificate& c) {
  Json roots = Json::array();
  for (const Complex& r : c.roots) roots.push_back(complex_to_json(r));
  Json margin = std::isfinite(c.margin) ? Json(c.margin) : Json(nullptr);
  return Json{{"eps", c.eps}, {"margin", margin}, {"roots", roots}};
}

Json outcome_to_json(const ClassificationOutcome& o) {
  Json params = Json::object();
  Json certificate = nullptr;
  std::visit(Overloaded{
                 [](const outcome::IdenticallyZero&) {},
                 [](const outcome::NoRecurrence&) {},
                 [&](const outcome::Degenerate& d) {
                   params = {{"lambda", d.lambda}, {"u", d.u}, {"v", d.v}};
                 },
                 [](const outcome::ExactPolyTime&) {},
                 [&](const outcome::FerroIsing& fi) {
                   params = {{"beta", fi.beta}, {"transform", matrix_to_json(fi.transform)}};
                 },
                 [&](const outcome::StableTransform& s) {
                   const auto& t = s.transform;
                   params = {{"M", matrix_to_json(t.m)},
                             {"target", to_string(t.target)},
                             {"w", t.w},
                             {"convention", to_string(t.convention)},
                             {"rule", t.rule}};
                   certificate = certificate_to_json(t.certificate);
                 },
                 [&](const outcome::PMEquivalent& pm) {
                   params = {{"lambda", pm.lambda}, {"ratio", pm.ratio}, {"reversed", pm.reversed}};
                 },
                 [&](const outcome::TypeI& t) { params = {{"lambda", t.lambda}}; },
             },
             o);
  return Json{{"tag", tag_name(o)}, {"params", params}, {"certificate", certificate}};
}

Json approx_result_to_json(const ApproxResult& r) {
  return Json{{"estimate", r.estimate},
              {"k_used", r.k_used},
              {"eps_requested", r.eps_requested},
              {"eps_certificate", r.eps_certificate},
              {"delta", r.delta},
              {"transform", matrix_to_json(r.transform)},
              {"reversed", r.reversed},
              {"scale_factor", r.scale_factor},
              {"converged", r.converged},
              {"engine", r.engine},
              {"phi_degree", r.phi_degree},
              {"imaginary_residue", r.imaginary_residue},
              {"imaginary_ok", r.imaginary_ok},
              {"diagnostics", r.diagnostics}};
}

Json additive_debug_json(const AdditiveResult& r) {
  Json classes = Json::array();
  for (const auto& c : r.classes) {
    Json a = Json::array();
    for (Eigen::Index j = 1; j < c.contribution.size(); ++j) a.push_back(complex_to_json(c.contribution(j)));
    Json edges = Json::array();
    for (const auto& [u, v] : c.representative.edges) edges.push_back(Json::array({u, v}));
    classes.push_back(Json{{"certificate", c.certificate},
                           {"n", c.representative.n},
                           {"edges", edges},
                           {"ind", c.count},
                           {"a", a}});
  }
  Json p = Json::array();
  for (Eigen::Index j = 0; j < r.sums.p.size(); ++j) p.push_back(complex_to_json(r.sums.p(j)));
  return Json{{"power_sums", p}, {"classes", classes}};
}

GadgetSpec parse_gadget_json(const Json& j) {
  GadgetSpec spec;
  if (!j.contains("vertices") || !j["vertices"].is_array()) throw ArgumentError("gadget: needs a `vertices` array");
  const Json library = j.value("library", Json::object());
  for (const auto& v : j["vertices"]) {
    if (v.is_string()) {
      const std::string name = v.get<std::string>();
      if (!library.contains(name)) throw ArgumentError("gadget: unknown signature name '" + name + "'");
      spec.gadget.signatures.push_back(json_complex_signature(library[name]));
    } else {
      spec.gadget.signatures.push_back(json_complex_signature(v));
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.value("edges", Json::array())) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  spec.gadget.inner = Multigraph(static_cast<int>(spec.gadget.signatures.size()), edges);
  for (const auto& d : j.value("dangling", Json::array()))
    spec.gadget.dangling.emplace_back(d.at(0).get<int>(), d.at(1).get<int>());
  if (j.contains("edge_signature")) {
    const ComplexSignature b = json_complex_signature(j["edge_signature"]);
    if (b.arity() != 2) throw ArgumentError("gadget: edge_signature must have three entries");
    spec.edge_signature = BinarySignature{{b[0], b[1], b[2]}};
  }
  return spec;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace holant

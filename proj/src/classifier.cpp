#include "holant/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace holant {

namespace {

constexpr double kStructTol = 1e-9;
constexpr double kProfileTol = 1e-8;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool matches(const SymmetricSignature& f, const SymmetricSignature& model) {
  const double scale = std::max(max_abs(f), 1e-300);
  for (int k = 0; k <= f.arity(); ++k)
    if (std::abs(f[k] - model[k]) > kProfileTol * scale) return false;
  return true;
}

/// [0, 1, 0, mu, 0, mu^2, ...] scaled by f_1 for even d.
std::optional<double> interleaved_ratio(const SymmetricSignature& f) {
  const int d = f.arity();
  if (d % 2 != 0 || !(f[1] > 0.0)) return std::nullopt;
  const double mu = f[3] / f[1];
  SymmetricSignature model;
  model.values.assign(static_cast<std::size_t>(d) + 1, 0.0);
  for (int k = 1; k < d; k += 2) model[k] = f[1] * std::pow(mu, (k - 1) / 2);
  if (!matches(f, model)) return std::nullopt;
  return mu;
}

/// Normalized odd-arity [1,0,x,0,x^2,...,0]; returns 1/x, the ratio of its reversal.
std::optional<double> odd_interleaved_ratio(const SymmetricSignature& h) {
  const int d = h.arity();
  if (d % 2 != 1 || !(h[2] > 0.0)) return std::nullopt;
  const double x = h[2];
  SymmetricSignature model;
  model.values.assign(static_cast<std::size_t>(d) + 1, 0.0);
  for (int k = 0; k < d; k += 2) model[k] = std::pow(x, k / 2);
  if (!matches(h, model)) return std::nullopt;
  return 1.0 / x;
}

outcome::Degenerate rank_one(const SymmetricSignature& f) {
  const int d = f.arity();
  outcome::Degenerate out;
  if (f[0] > 0.0) {
    out.u = 1.0;
    out.v = f[1] / f[0];
    out.lambda = f[0];
  } else {
    out.u = f[d - 1] / f[d];
    out.v = 1.0;
    out.lambda = f[d];
  }
  return out;
}

}  // namespace

std::string tag_name(const ClassificationOutcome& o) {
  return std::visit(Overloaded{
                        [](const outcome::IdenticallyZero&) { return "IdenticallyZero"; },
                        [](const outcome::NoRecurrence&) { return "NoRecurrence"; },
                        [](const outcome::Degenerate&) { return "Degenerate"; },
                        [](const outcome::ExactPolyTime&) { return "ExactPolyTime"; },
                        [](const outcome::FerroIsing&) { return "FerroIsing"; },
                        [](const outcome::StableTransform&) { return "StableTransform"; },
                        [](const outcome::PMEquivalent&) { return "PMEquivalent"; },
                        [](const outcome::TypeI&) { return "TypeI"; },
                    },
                    o);
}

ClassificationOutcome detect_exceptional(const SymmetricSignature& f) {
  const int d = f.arity();
  if (d < 3) throw ArgumentError("detect_exceptional: arity must be at least 3");
  const double scale = max_abs(f);
  if (scale == 0.0) return outcome::IdenticallyZero{};
  if (std::abs(f[0]) > kProfileTol * scale || std::abs(f[d]) > kProfileTol * scale)
    throw ArgumentError("detect_exceptional: requires f_0 = f_d = 0");

  // Single spike next to either end.
  for (int spike : {1, d - 1}) {
    SymmetricSignature model;
    model.values.assign(static_cast<std::size_t>(d) + 1, 0.0);
    model[spike] = f[spike];
    if (f[spike] > 0.0 && matches(f, model))
      return outcome::PMEquivalent{0.0, 0.0, spike == d - 1};
  }

  if (auto mu = interleaved_ratio(f)) {
    if (std::abs(*mu - 1.0) <= kStructTol) return outcome::ExactPolyTime{};
    if (*mu < 1.0) return outcome::PMEquivalent{std::sqrt(*mu), *mu, false};
    return outcome::PMEquivalent{std::sqrt(1.0 / *mu), 1.0 / *mu, true};
  }

  if (f[1] > 0.0) {
    const double pi = std::numbers::pi;
    const double lambda = (f[2] / f[1]) * std::sin(pi / d) / std::sin(2.0 * pi / d);
    if (lambda > 0.0) {
      const double c = f[1] / (lambda * std::sin(pi / d));
      SymmetricSignature model;
      model.values.assign(static_cast<std::size_t>(d) + 1, 0.0);
      for (int k = 1; k < d; ++k) model[k] = c * std::pow(lambda, k) * std::sin(k * pi / d);
      if (matches(f, model)) return outcome::TypeI{lambda};
    }
  }
  return outcome::NoRecurrence{};
}

ClassificationOutcome classify(const SymmetricSignature& f) {
  const int d = f.arity();
  if (d < 3) throw ArgumentError("classify: arity must be at least 3");
  require_non_negative(f);
  if (max_abs(f) == 0.0) return outcome::IdenticallyZero{};

  if (!detect_recurrence(f)) return outcome::NoRecurrence{};
  if (f[0] == 0.0 && f[d] == 0.0) return detect_exceptional(f);

  const NormalizedSignature norm = normalize_leading(f);
  const SymmetricSignature& h = norm.signature;
  const auto triple = detect_recurrence(h);
  if (!triple) return outcome::NoRecurrence{};

  const auto stable = [&]() -> ClassificationOutcome {
    auto st = find_stabilizing_transform(f);
    if (!st) throw NumericalError("classify: no stabilizing transform found for a recurrent signature");
    return outcome::StableTransform{*st};
  };

  const double disc = triple->discriminant();
  const double disc_scale = std::max(triple->b * triple->b, 4.0 * std::abs(triple->a * triple->c));
  if (disc <= kStructTol * disc_scale) return stable();

  TensorPair pair = tensor_pair(h, *triple);
  double p = pair.p, q = pair.q, s = pair.s, t = pair.t;
  const double scale = std::max({std::abs(p), std::abs(q), std::abs(s), std::abs(t)});
  const double sq = scale * scale;

  if (std::abs(p * t - q * s) <= kStructTol * sq) return rank_one(f);

  if (pair.r == -1 && d % 2 == 1) {
    s = -s;
    t = -t;
    pair.r = 1;
  }
  const double cross = p * s + q * t;
  if (pair.r == 1 && std::abs(p * p + q * q - s * s - t * t) <= kStructTol * sq) {
    if (std::abs(cross) <= kStructTol * sq) return outcome::ExactPolyTime{};
    if (cross < 0.0 && d % 2 == 1) {
      if (auto ratio = odd_interleaved_ratio(h)) return outcome::PMEquivalent{*ratio, *ratio, !norm.reversed};
      return stable();
    }
    if (cross < 0.0) {
      s = -s;
      t = -t;
    }
    // f ~ (=_d) M'^{tensor d} with M' rows (p,q), (s,t); report T = M'^{-1}.
    const Matrix2 m_prime = Matrix2::from_real(p, q, s, t);
    return outcome::FerroIsing{(p * p + q * q) / std::abs(cross), m_prime.inverse()};
  }
  return stable();
}

double degenerate_Z(const outcome::Degenerate& dg, int vertices, int edges) {
  return std::pow(dg.lambda, vertices) * std::pow(dg.u * dg.u + dg.v * dg.v, edges);
}

}  // namespace holant

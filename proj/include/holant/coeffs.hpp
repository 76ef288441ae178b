#ifndef HOLANT_COEFFS_HPP
#define HOLANT_COEFFS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "holant/graph.hpp"
#include "holant/signature.hpp"

namespace holant {

/// p(0) is the polynomial degree; p(j) = sum over roots z_i^{-j}.
struct PowerSums {
  ComplexPoly p;

  int order() const { return static_cast<int>(p.size()) - 1; }
};

constexpr double kNaiveWorkGuard = 1e8;
constexpr int kAdditiveMaxOrder = 8;

/// sum_{j<=k} C(m, j): the number of edge subsets naive_low_coeffs visits.
double naive_work(int m, int k);

namespace detail {

template <typename S>
void naive_visit(const Multigraph& g, const std::vector<Signature<S>>& assign, int k, int start, int size,
                 std::vector<int>& counts, std::vector<int>& touched, std::vector<S>& out) {
  S prod{1};
  for (int v : touched) prod *= assign[static_cast<std::size_t>(v)][counts[static_cast<std::size_t>(v)]];
  out[static_cast<std::size_t>(size)] += prod;
  if (size == k) return;
  for (int e = start; e < g.m(); ++e) {
    const auto [u, v] = g.edges[static_cast<std::size_t>(e)];
    for (int w : {u, v})
      if (counts[static_cast<std::size_t>(w)]++ == 0) touched.push_back(w);
    naive_visit(g, assign, k, e + 1, size + 1, counts, touched, out);
    for (int w : {v, u})
      if (--counts[static_cast<std::size_t>(w)] == 0) touched.pop_back();
  }
}

}  // namespace detail

/// Z_0..Z_k by enumerating edge subsets of size <= k. Every signature must
/// have f_0 = 1 and arity >= the vertex degree (shorter degrees use the
/// truncated prefix f_0..f_deg).
template <typename S>
std::vector<S> naive_low_coeffs(const Multigraph& g, const std::vector<Signature<S>>& assign, int k) {
  if (k < 0) throw ArgumentError("naive_low_coeffs: k must be non-negative");
  if (static_cast<int>(assign.size()) != g.n) throw ArgumentError("naive_low_coeffs: one signature per vertex required");
  const auto deg = g.degrees();
  for (int v = 0; v < g.n; ++v) {
    const auto& f = assign[static_cast<std::size_t>(v)];
    if (f.arity() < deg[static_cast<std::size_t>(v)])
      throw ArgumentError("naive_low_coeffs: vertex " + std::to_string(v) + " degree exceeds signature arity");
    if (!(f[0] == S(1))) throw ArgumentError("naive_low_coeffs: requires f_0 = 1");
  }
  const int kk = std::min(k, g.m());
  if (naive_work(g.m(), kk) > kNaiveWorkGuard)
    throw GuardError("naive_low_coeffs: more than 1e8 edge subsets for m = " + std::to_string(g.m()) +
                     ", k = " + std::to_string(k));
  std::vector<S> out(static_cast<std::size_t>(k) + 1, S(0));
  std::vector<int> counts(static_cast<std::size_t>(g.n), 0), touched;
  detail::naive_visit(g, assign, kk, 0, 0, counts, touched, out);
  return out;
}

template <typename S>
std::vector<S> naive_low_coeffs(const Multigraph& g, const Signature<S>& f, int k) {
  return naive_low_coeffs(g, std::vector<Signature<S>>(static_cast<std::size_t>(g.n), f), k);
}

/// p_0 = m; p_j = -c_0^{-1} (sum_{i=1}^{j-1} p_i c_{j-i} + j c_j) for j < c.size().
PowerSums power_sums_from_coeffs(const ComplexPoly& c, int total_degree);

/// Inverse direction with c_0 = 1: j c_j = -sum_{i<j} c_i p_{j-i}.
ComplexPoly coeffs_from_power_sums(const PowerSums& p, int k);

/// One isomorphism class of connected induced subgraphs.
struct SubgraphClass {
  std::uint64_t certificate = 0;
  Multigraph representative;
  long long count = 0;
  /// Additive contribution a_{H,j}, j = 1..k (index 0 unused).
  ComplexPoly contribution;
};

struct AdditiveResult {
  PowerSums sums;
  std::vector<SubgraphClass> classes;
};

/// p_1..p_k of P_G from connected induced subgraphs and their Moebius-inverted
/// power sums. Requires f_0 = 1, k <= 8, max degree <= arity.
AdditiveResult additive_power_sums_detailed(const Multigraph& g, const SymmetricSignature& f, int k);

PowerSums additive_power_sums(const Multigraph& g, const SymmetricSignature& f, int k);

/// The signature [f_0..f_deg] that a vertex of degree deg sees.
SymmetricSignature truncated(const SymmetricSignature& f, int deg);

}  // namespace holant

#endif  // HOLANT_COEFFS_HPP

#include "holant/coeffs.hpp"

#include <cmath>
#include <map>
#include <memory>

#include "holant/isomorphism.hpp"

namespace holant {

double naive_work(int m, int k) {
  double total = 0.0, term = 1.0;
  for (int j = 0; j <= std::min(k, m); ++j) {
    total += term;
    term = term * (m - j) / (j + 1);
  }
  return total;
}

PowerSums power_sums_from_coeffs(const ComplexPoly& c, int total_degree) {
  if (c.size() == 0 || c(0) == Complex(0.0)) throw ArgumentError("power_sums_from_coeffs: requires c_0 != 0");
  const Eigen::Index k = c.size() - 1;
  PowerSums out;
  out.p = ComplexPoly::Zero(k + 1);
  out.p(0) = static_cast<double>(total_degree);
  for (Eigen::Index j = 1; j <= k; ++j) {
    Complex acc = static_cast<double>(j) * c(j);
    for (Eigen::Index i = 1; i < j; ++i) acc += out.p(i) * c(j - i);
    out.p(j) = -acc / c(0);
  }
  return out;
}

ComplexPoly coeffs_from_power_sums(const PowerSums& p, int k) {
  if (k < 0) throw ArgumentError("coeffs_from_power_sums: k must be non-negative");
  if (p.order() < k) throw ArgumentError("coeffs_from_power_sums: not enough power sums");
  ComplexPoly c = ComplexPoly::Zero(k + 1);
  c(0) = 1.0;
  for (int j = 1; j <= k; ++j) {
    Complex acc = 0.0;
    for (int i = 0; i < j; ++i) acc += c(i) * p.p(j - i);
    c(j) = -acc / static_cast<double>(j);
  }
  return c;
}

SymmetricSignature truncated(const SymmetricSignature& f, int deg) {
  if (deg > f.arity()) throw ArgumentError("truncated: degree exceeds arity");
  return SymmetricSignature(std::vector<double>(f.values.begin(), f.values.begin() + deg + 1));
}

namespace {

/// Registry of isomorphism classes with memoized additive contributions.
class ClassTable {
 public:
  ClassTable(const SymmetricSignature& f, int k) : f_(f), k_(k) {}

  /// Index of the class of h, computing its contribution on first sight.
  std::size_t lookup(const Multigraph& h) {
    const std::uint64_t cert = graph_certificate(h);
    auto& bucket = by_certificate_[cert];
    for (std::size_t idx : bucket)
      if (isomorphic(classes_[idx].representative, h)) return idx;
    const ComplexPoly contribution = contribute(h);
    classes_.push_back(SubgraphClass{cert, h, 0, contribution});
    bucket.push_back(classes_.size() - 1);
    return classes_.size() - 1;
  }

  std::vector<SubgraphClass>& classes() { return classes_; }

 private:
  ComplexPoly contribute(const Multigraph& h) {
    std::vector<SymmetricSignature> assign;
    for (int deg : h.degrees()) assign.push_back(truncated(f_, deg));
    const auto c = naive_low_coeffs(h, assign, k_);
    ComplexPoly cc(k_ + 1);
    for (int j = 0; j <= k_; ++j) cc(j) = c[static_cast<std::size_t>(j)];
    ComplexPoly a = power_sums_from_coeffs(cc, 0).p;
    a(0) = 0.0;
    // Subtract the contributions of proper connected induced subsets.
    std::vector<std::vector<int>> subsets = connected_induced_sets(h, h.n - 1);
    for (const auto& s : subsets) {
      const std::size_t idx = lookup(induced_subgraph(h, s));
      a -= classes_[idx].contribution;
    }
    return a;
  }

  const SymmetricSignature& f_;
  int k_;
  std::vector<SubgraphClass> classes_;
  std::map<std::uint64_t, std::vector<std::size_t>> by_certificate_;
};

}  // namespace

AdditiveResult additive_power_sums_detailed(const Multigraph& g, const SymmetricSignature& f, int k) {
  if (k < 0 || k > kAdditiveMaxOrder) throw GuardError("additive_power_sums: k must lie in [0, 8]");
  if (std::abs(f[0] - 1.0) > 1e-12) throw ArgumentError("additive_power_sums: requires f_0 = 1");
  for (int deg : g.degrees())
    if (deg > f.arity()) throw ArgumentError("additive_power_sums: vertex degree exceeds arity");

  // Contributions to p_j vanish on connected sets with more than j + 1 vertices.
  ClassTable table(f, k);
  const int max_size = k == 0 ? 0 : k + 1;
  for (const auto& s : connected_induced_sets(g, max_size)) {
    const std::size_t idx = table.lookup(induced_subgraph(g, s));
    ++table.classes()[idx].count;
  }

  AdditiveResult out;
  out.sums.p = ComplexPoly::Zero(k + 1);
  out.sums.p(0) = 0.0;
  for (const auto& cls : table.classes())
    if (cls.count > 0) out.sums.p += static_cast<double>(cls.count) * cls.contribution;
  out.sums.p(0) = static_cast<double>(g.m());
  for (auto& cls : table.classes())
    if (cls.count > 0) out.classes.push_back(cls);
  return out;
}

PowerSums additive_power_sums(const Multigraph& g, const SymmetricSignature& f, int k) {
  return additive_power_sums_detailed(g, f, k).sums;
}

}  // namespace holant

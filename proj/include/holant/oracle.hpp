#ifndef HOLANT_ORACLE_HPP
#define HOLANT_ORACLE_HPP

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "holant/graph.hpp"
#include "holant/signature.hpp"

namespace holant {

struct OracleOptions {
  /// Allow 26 < |E| <= 40.
  bool force = false;
  unsigned threads = 1;
};

constexpr int kOracleSoftEdgeLimit = 26;
constexpr int kOracleHardEdgeLimit = 40;

/// HOLANT_THREADS if set to a positive integer, else 1.
inline unsigned default_threads() {
  if (const char* env = std::getenv("HOLANT_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

namespace detail {

/// Neumaier-compensated sum for double; plain sum otherwise.
template <typename S>
struct Accumulator {
  S sum{0};
  void add(const S& x) { sum += x; }
  S value() const { return sum; }
};

template <>
struct Accumulator<double> {
  double sum = 0.0, comp = 0.0;
  void add(double x) {
    const double t = sum + x;
    comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

template <>
struct Accumulator<Complex> {
  Accumulator<double> re, im;
  void add(const Complex& x) {
    re.add(x.real());
    im.add(x.imag());
  }
  Complex value() const { return {re.value(), im.value()}; }
};

/// Edge order and the vertices whose last incident edge is each position.
struct EnumerationPlan {
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> closes;
  std::vector<int> isolated;
};

inline EnumerationPlan plan_enumeration(const Multigraph& g) {
  // BFS vertex order keeps each vertex's edges close together so it closes early.
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(g.n));
  for (int i = 0; i < g.m(); ++i) {
    incident[static_cast<std::size_t>(g.edges[i].first)].push_back(i);
    incident[static_cast<std::size_t>(g.edges[i].second)].push_back(i);
  }
  std::vector<int> rank(static_cast<std::size_t>(g.n), -1);
  int next = 0;
  for (int s = 0; s < g.n; ++s) {
    if (rank[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<int> queue{s};
    rank[static_cast<std::size_t>(s)] = next++;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (int e : incident[static_cast<std::size_t>(queue[h])]) {
        const auto [u, v] = g.edges[static_cast<std::size_t>(e)];
        for (int w : {u, v})
          if (rank[static_cast<std::size_t>(w)] < 0) {
            rank[static_cast<std::size_t>(w)] = next++;
            queue.push_back(w);
          }
      }
    }
  }
  EnumerationPlan plan;
  plan.edges = g.edges;
  std::stable_sort(plan.edges.begin(), plan.edges.end(), [&](auto a, auto b) {
    const int ka = std::max(rank[static_cast<std::size_t>(a.first)], rank[static_cast<std::size_t>(a.second)]);
    const int kb = std::max(rank[static_cast<std::size_t>(b.first)], rank[static_cast<std::size_t>(b.second)]);
    return ka < kb;
  });
  std::vector<int> last(static_cast<std::size_t>(g.n), -1);
  for (int i = 0; i < g.m(); ++i) {
    last[static_cast<std::size_t>(plan.edges[i].first)] = i;
    last[static_cast<std::size_t>(plan.edges[i].second)] = i;
  }
  plan.closes.resize(static_cast<std::size_t>(g.m()));
  for (int v = 0; v < g.n; ++v) {
    if (last[static_cast<std::size_t>(v)] < 0)
      plan.isolated.push_back(v);
    else
      plan.closes[static_cast<std::size_t>(last[static_cast<std::size_t>(v)])].push_back(v);
  }
  return plan;
}

template <typename S>
class Enumerator {
 public:
  Enumerator(const EnumerationPlan& plan, const std::vector<Signature<S>>& assign, int n)
      : plan_(plan), assign_(assign), counts_(static_cast<std::size_t>(n), 0) {}

  /// Adds every completion of the given prefix assignment into acc[k].
  void run_prefix(unsigned long long bits, int prefix_len, S prod, std::vector<Accumulator<S>>& acc) {
    std::fill(counts_.begin(), counts_.end(), 0);
    int k = 0;
    for (int i = 0; i < prefix_len; ++i) {
      const int bit = static_cast<int>((bits >> i) & 1ULL);
      k += bit;
      prod = step(i, bit, prod);
      if (prod == S(0)) return;
    }
    dfs(prefix_len, prod, k, acc);
  }

 private:
  S step(int i, int bit, S prod) {
    const auto [u, v] = plan_.edges[static_cast<std::size_t>(i)];
    counts_[static_cast<std::size_t>(u)] += bit;
    counts_[static_cast<std::size_t>(v)] += bit;
    for (int w : plan_.closes[static_cast<std::size_t>(i)])
      prod *= assign_[static_cast<std::size_t>(w)][counts_[static_cast<std::size_t>(w)]];
    return prod;
  }

  void undo(int i, int bit) {
    const auto [u, v] = plan_.edges[static_cast<std::size_t>(i)];
    counts_[static_cast<std::size_t>(u)] -= bit;
    counts_[static_cast<std::size_t>(v)] -= bit;
  }

  void dfs(int i, const S& prod, int k, std::vector<Accumulator<S>>& acc) {
    if (i == static_cast<int>(plan_.edges.size())) {
      acc[static_cast<std::size_t>(k)].add(prod);
      return;
    }
    for (int bit = 0; bit <= 1; ++bit) {
      const S next = step(i, bit, prod);
      if (!(next == S(0))) dfs(i + 1, next, k + bit, acc);
      undo(i, bit);
    }
  }

  const EnumerationPlan& plan_;
  const std::vector<Signature<S>>& assign_;
  std::vector<int> counts_;
};

inline void check_oracle_input(const Multigraph& g, const std::vector<int>& arities, bool force) {
  if (g.m() > kOracleHardEdgeLimit)
    throw GuardError("oracle: " + std::to_string(g.m()) + " edges exceeds the hard limit of 40");
  if (g.m() > kOracleSoftEdgeLimit && !force)
    throw GuardError("oracle: " + std::to_string(g.m()) + " edges exceeds 26; pass force to enumerate");
  if (static_cast<int>(arities.size()) != g.n) throw ArgumentError("oracle: one signature per vertex required");
  const auto deg = g.degrees();
  for (int v = 0; v < g.n; ++v)
    if (deg[static_cast<std::size_t>(v)] != arities[static_cast<std::size_t>(v)])
      throw ArgumentError("oracle: vertex " + std::to_string(v) + " has degree " +
                          std::to_string(deg[static_cast<std::size_t>(v)]) + " but its signature has arity " +
                          std::to_string(arities[static_cast<std::size_t>(v)]));
}

}  // namespace detail

/// Z_0..Z_m by exhaustive enumeration over edge assignments. Work is split
/// into 2^min(m,8) prefixes whose partial sums are merged in a fixed order,
/// so the result does not depend on the thread count.
template <typename S>
std::vector<S> brute_force_coeffs(const Multigraph& g, const std::vector<Signature<S>>& assign,
                                  const OracleOptions& options = {}) {
  std::vector<int> arities;
  for (const auto& f : assign) arities.push_back(f.arity());
  detail::check_oracle_input(g, arities, options.force);

  const detail::EnumerationPlan plan = detail::plan_enumeration(g);
  S base{1};
  for (int v : plan.isolated) base *= assign[static_cast<std::size_t>(v)][0];

  const int m = g.m();
  const int prefix_len = std::min(m, 8);
  const std::size_t tasks = std::size_t{1} << prefix_len;
  std::vector<std::vector<detail::Accumulator<S>>> partial(
      tasks, std::vector<detail::Accumulator<S>>(static_cast<std::size_t>(m) + 1));

  std::atomic<std::size_t> cursor{0};
  const auto worker = [&]() {
    detail::Enumerator<S> en(plan, assign, g.n);
    for (std::size_t t; (t = cursor.fetch_add(1)) < tasks;)
      if (!(base == S(0))) en.run_prefix(t, prefix_len, base, partial[t]);
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(tasks)));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::vector<S> out(static_cast<std::size_t>(m) + 1, S(0));
  for (int k = 0; k <= m; ++k) {
    detail::Accumulator<S> acc;
    for (std::size_t t = 0; t < tasks; ++t) acc.add(partial[t][static_cast<std::size_t>(k)].value());
    out[static_cast<std::size_t>(k)] = acc.value();
  }
  return out;
}

template <typename S>
std::vector<S> brute_force_coeffs(const Multigraph& g, const Signature<S>& f, const OracleOptions& options = {}) {
  return brute_force_coeffs(g, std::vector<Signature<S>>(static_cast<std::size_t>(g.n), f), options);
}

/// Z(G; assign) = sum_k Z_k.
template <typename S>
S brute_force_Z(const Multigraph& g, const std::vector<Signature<S>>& assign, const OracleOptions& options = {}) {
  detail::Accumulator<S> acc;
  for (const S& z : brute_force_coeffs(g, assign, options)) acc.add(z);
  return acc.value();
}

template <typename S>
S brute_force_Z(const Multigraph& g, const Signature<S>& f, const OracleOptions& options = {}) {
  return brute_force_Z(g, std::vector<Signature<S>>(static_cast<std::size_t>(g.n), f), options);
}

}  // namespace holant

#endif  // HOLANT_ORACLE_HPP

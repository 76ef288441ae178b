#include "holant/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <random>
#include <set>
#include <string>

namespace holant {

Multigraph::Multigraph(int vertices, std::vector<std::pair<int, int>> e) : n(vertices), edges(std::move(e)) {
  if (n < 0) throw ArgumentError("Multigraph: negative vertex count");
  for (const auto& [u, v] : edges)
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ArgumentError("Multigraph: endpoint out of range in edge (" + std::to_string(u) + "," +
                          std::to_string(v) + ")");
}

std::vector<int> Multigraph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : edges) {
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  return deg;
}

int Multigraph::degree(int v) const { return degrees().at(static_cast<std::size_t>(v)); }

bool Multigraph::regular(int d) const {
  const auto deg = degrees();
  return std::all_of(deg.begin(), deg.end(), [d](int x) { return x == d; });
}

bool Multigraph::simple() const {
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) return false;
  }
  return true;
}

Multigraph cycle(int n) {
  if (n < 1) throw ArgumentError("cycle: n must be positive");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  if (n == 1) e = {{0, 0}};
  return {n, e};
}

Multigraph complete(int n) {
  if (n < 1) throw ArgumentError("complete: n must be positive");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return {n, e};
}

Multigraph petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return {10, e};
}

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b) {
  Multigraph out = a;
  out.n = a.n + b.n;
  for (const auto& [u, v] : b.edges) out.edges.emplace_back(u + a.n, v + a.n);
  return out;
}

RandomRegular random_regular(int n, int d, std::uint64_t seed) {
  if (n < 1 || d < 0) throw ArgumentError("random_regular: need n >= 1 and d >= 0");
  if ((static_cast<long long>(n) * d) % 2 != 0) throw ArgumentError("random_regular: n*d must be even");
  if (d >= n) throw ArgumentError("random_regular: need d < n for a simple graph");

  std::mt19937_64 rng(seed);
  std::vector<int> points(static_cast<std::size_t>(n) * d);
  RandomRegular out;
  for (out.attempts = 1; out.attempts <= 1000; ++out.attempts) {
    for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<int>(i) / d;
    // Explicit Fisher-Yates so the sequence does not depend on the standard library.
    for (std::size_t i = points.size(); i > 1; --i) std::swap(points[i - 1], points[rng() % i]);
    std::vector<std::pair<int, int>> e;
    for (std::size_t i = 0; i < points.size(); i += 2) e.emplace_back(points[i], points[i + 1]);
    out.graph = Multigraph(n, std::move(e));
    if (out.graph.simple()) return out;
  }
  out.attempts = 1000;
  out.multigraph = true;
  return out;
}

Multigraph read_edge_list(std::istream& in) {
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw ArgumentError("edge list: bad `n m` header");
  std::vector<std::pair<int, int>> e;
  for (long long i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v)) throw ArgumentError("edge list: expected " + std::to_string(m) + " edges");
    e.emplace_back(u, v);
  }
  return {static_cast<int>(n), e};
}

void write_edge_list(std::ostream& out, const Multigraph& g) {
  out << g.n << ' ' << g.m() << '\n';
  for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
}

Multigraph induced_subgraph(const Multigraph& g, const std::vector<int>& vertices) {
  std::vector<int> index(static_cast<std::size_t>(g.n), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
  std::vector<std::pair<int, int>> e;
  for (const auto& [u, v] : g.edges) {
    const int a = index[static_cast<std::size_t>(u)], b = index[static_cast<std::size_t>(v)];
    if (a >= 0 && b >= 0) e.emplace_back(a, b);
  }
  return {static_cast<int>(vertices.size()), e};
}

}  // namespace holant

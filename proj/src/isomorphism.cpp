#include "holant/isomorphism.hpp"

#include <algorithm>
#include <functional>

#include <boost/container_hash/hash.hpp>

namespace holant {

namespace {

std::vector<std::uint64_t> refined_colours(const AdjacencyCounts& adj) {
  const std::size_t n = adj.size();
  std::vector<std::uint64_t> colour(n);
  for (std::size_t u = 0; u < n; ++u) {
    std::size_t h = 0;
    int degree = 0;
    for (std::size_t v = 0; v < n; ++v) degree += adj[u][v] * (u == v ? 2 : 1);
    boost::hash_combine(h, degree);
    boost::hash_combine(h, adj[u][u]);
    colour[u] = h;
  }
  for (std::size_t round = 0; round < n; ++round) {
    std::vector<std::uint64_t> next(n);
    for (std::size_t u = 0; u < n; ++u) {
      std::vector<std::pair<int, std::uint64_t>> around;
      for (std::size_t v = 0; v < n; ++v)
        if (v != u && adj[u][v] > 0) around.emplace_back(adj[u][v], colour[v]);
      std::sort(around.begin(), around.end());
      std::size_t h = colour[u];
      for (const auto& [mult, c] : around) {
        boost::hash_combine(h, mult);
        boost::hash_combine(h, c);
      }
      next[u] = h;
    }
    const auto classes = [](std::vector<std::uint64_t> c) {
      std::sort(c.begin(), c.end());
      return std::unique(c.begin(), c.end()) - c.begin();
    };
    const bool stable = classes(next) == classes(colour);
    colour = std::move(next);
    if (stable) break;
  }
  return colour;
}

}  // namespace

AdjacencyCounts adjacency_counts(const Multigraph& g) {
  AdjacencyCounts adj(static_cast<std::size_t>(g.n), std::vector<int>(static_cast<std::size_t>(g.n), 0));
  for (const auto& [u, v] : g.edges) {
    ++adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
    if (u != v) ++adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
  }
  return adj;
}

std::uint64_t graph_certificate(const Multigraph& g) {
  std::vector<std::uint64_t> colour = refined_colours(adjacency_counts(g));
  std::sort(colour.begin(), colour.end());
  std::size_t h = 0;
  boost::hash_combine(h, g.n);
  boost::hash_combine(h, g.m());
  for (std::uint64_t c : colour) boost::hash_combine(h, c);
  return h;
}

bool isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.n != b.n || a.m() != b.m()) return false;
  const AdjacencyCounts adj_a = adjacency_counts(a), adj_b = adjacency_counts(b);
  const auto col_a = refined_colours(adj_a), col_b = refined_colours(adj_b);
  {
    auto sa = col_a, sb = col_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  const std::size_t n = static_cast<std::size_t>(a.n);
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> place = [&](std::size_t u) -> bool {
    if (u == n) return true;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || col_b[c] != col_a[u]) continue;
      bool ok = adj_a[u][u] == adj_b[c][c];
      for (std::size_t w = 0; ok && w < u; ++w)
        ok = adj_a[u][w] == adj_b[c][static_cast<std::size_t>(image[w])];
      if (!ok) continue;
      image[u] = static_cast<int>(c);
      used[c] = true;
      if (place(u + 1)) return true;
      used[c] = false;
    }
    image[u] = -1;
    return false;
  };
  return place(0);
}

std::vector<std::vector<int>> connected_induced_sets(const Multigraph& g, int max_size) {
  const AdjacencyCounts adj = adjacency_counts(g);
  const int n = g.n;
  std::vector<std::vector<int>> neighbours(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] > 0)
        neighbours[static_cast<std::size_t>(u)].push_back(v);

  std::vector<std::vector<int>> out;
  std::vector<int> subset;
  std::vector<int> closed(static_cast<std::size_t>(n), 0);  // |N[subset] ∋ v|

  const auto mark = [&](int v, int delta) {
    closed[static_cast<std::size_t>(v)] += delta;
    for (int w : neighbours[static_cast<std::size_t>(v)]) closed[static_cast<std::size_t>(w)] += delta;
  };

  // Subgraph enumeration by exclusive neighbourhood extension.
  std::function<void(std::vector<int>, int)> extend = [&](std::vector<int> ext, int root) {
    auto sorted = subset;
    std::sort(sorted.begin(), sorted.end());
    out.push_back(sorted);
    if (static_cast<int>(subset.size()) == max_size) return;
    while (!ext.empty()) {
      const int w = ext.back();
      ext.pop_back();
      std::vector<int> next = ext;
      for (int u : neighbours[static_cast<std::size_t>(w)])
        if (u > root && closed[static_cast<std::size_t>(u)] == 0 &&
            std::find(next.begin(), next.end(), u) == next.end())
          next.push_back(u);
      subset.push_back(w);
      mark(w, 1);
      extend(next, root);
      mark(w, -1);
      subset.pop_back();
    }
  };

  if (max_size < 1) return out;
  for (int v = 0; v < n; ++v) {
    std::vector<int> ext;
    for (int u : neighbours[static_cast<std::size_t>(v)])
      if (u > v) ext.push_back(u);
    subset = {v};
    mark(v, 1);
    extend(ext, v);
    mark(v, -1);
  }
  return out;
}

}  // namespace holant

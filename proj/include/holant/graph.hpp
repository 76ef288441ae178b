#ifndef HOLANT_GRAPH_HPP
#define HOLANT_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "holant/types.hpp"

namespace holant {

/// Parallel edges and self-loops allowed. A self-loop adds 2 to its vertex's degree.
struct Multigraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  Multigraph() = default;
  Multigraph(int vertices, std::vector<std::pair<int, int>> e);

  int m() const { return static_cast<int>(edges.size()); }
  std::vector<int> degrees() const;
  int degree(int v) const;
  /// Every vertex has degree d.
  bool regular(int d) const;
  /// No self-loops and no parallel edges.
  bool simple() const;

  bool operator==(const Multigraph&) const = default;
};

Multigraph cycle(int n);
Multigraph complete(int n);
Multigraph petersen();
Multigraph disjoint_union(const Multigraph& a, const Multigraph& b);

struct RandomRegular {
  Multigraph graph;
  /// Set when 1000 pairings were rejected and the last one was kept.
  bool multigraph = false;
  int attempts = 0;
};

/// Pairing model with rejection of loops and parallels; mt19937_64(seed).
RandomRegular random_regular(int n, int d, std::uint64_t seed);

/// `n m` header, then m lines `u v`, 0-indexed.
Multigraph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Multigraph& g);

/// Induced subgraph on `vertices`, relabelled 0..k-1 in the given order.
Multigraph induced_subgraph(const Multigraph& g, const std::vector<int>& vertices);

}  // namespace holant

#endif  // HOLANT_GRAPH_HPP

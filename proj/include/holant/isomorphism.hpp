#ifndef HOLANT_ISOMORPHISM_HPP
#define HOLANT_ISOMORPHISM_HPP

#include <cstdint>
#include <vector>

#include "holant/graph.hpp"

namespace holant {

/// Edge multiplicities, self-loops counted once on the diagonal.
using AdjacencyCounts = std::vector<std::vector<int>>;

AdjacencyCounts adjacency_counts(const Multigraph& g);

/// Isomorphism-invariant hash from colour refinement; equal graphs up to
/// relabelling always agree, distinct graphs may collide.
std::uint64_t graph_certificate(const Multigraph& g);

/// Exact multigraph isomorphism by colour-guided backtracking.
bool isomorphic(const Multigraph& a, const Multigraph& b);

/// Vertex sets of size 1..max_size inducing connected subgraphs, each listed
/// once (sorted ascending).
std::vector<std::vector<int>> connected_induced_sets(const Multigraph& g, int max_size);

}  // namespace holant

#endif  // HOLANT_ISOMORPHISM_HPP

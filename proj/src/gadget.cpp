#include "holant/gadget.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace holant {

int OpenGadget::boundary_size() const {
  int total = 0;
  for (const auto& [v, c] : dangling) total += c;
  return total;
}

ComplexSignature compose_gadget(const OpenGadget& g, const BinarySignature& edge_signature) {
  const int n = g.inner.n;
  const int boundary = g.boundary_size();
  const int inner_vars = 2 * g.inner.m();
  if (boundary > kGadgetMaxBoundary)
    throw GuardError("compose_gadget: " + std::to_string(boundary) + " dangling edges exceeds 10");
  if (boundary + inner_vars > kGadgetMaxVariables) throw GuardError("compose_gadget: more than 2^26 assignments");
  if (static_cast<int>(g.signatures.size()) != n) throw ArgumentError("compose_gadget: one signature per vertex required");

  // Variable owner per vertex: boundary variables first, then two per inner edge.
  std::vector<std::vector<int>> vars(static_cast<std::size_t>(n));
  int next = 0;
  for (const auto& [v, c] : g.dangling) {
    if (v < 0 || v >= n || c < 0) throw ArgumentError("compose_gadget: bad dangling entry");
    for (int i = 0; i < c; ++i) vars[static_cast<std::size_t>(v)].push_back(next++);
  }
  for (const auto& [u, v] : g.inner.edges) {
    vars[static_cast<std::size_t>(u)].push_back(next++);
    vars[static_cast<std::size_t>(v)].push_back(next++);
  }
  for (int v = 0; v < n; ++v)
    if (static_cast<int>(vars[static_cast<std::size_t>(v)].size()) != g.signatures[static_cast<std::size_t>(v)].arity())
      throw ArgumentError("compose_gadget: vertex " + std::to_string(v) + " arity mismatch");

  std::vector<Complex> value(std::size_t{1} << boundary, Complex(0.0));
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << boundary); ++b) {
    Complex total = 0.0;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << inner_vars); ++x) {
      const std::uint64_t full = b | (x << boundary);
      Complex prod = 1.0;
      for (int e = 0; e < g.inner.m() && prod != Complex(0.0); ++e) {
        const int lo = boundary + 2 * e;
        prod *= edge_signature[static_cast<int>(((full >> lo) & 1U) + ((full >> (lo + 1)) & 1U))];
      }
      for (int v = 0; v < n && prod != Complex(0.0); ++v) {
        int weight = 0;
        for (int var : vars[static_cast<std::size_t>(v)]) weight += static_cast<int>((full >> var) & 1U);
        prod *= g.signatures[static_cast<std::size_t>(v)][weight];
      }
      total += prod;
    }
    value[b] = total;
  }

  ComplexSignature out;
  out.values.assign(static_cast<std::size_t>(boundary) + 1, Complex(0.0));
  std::vector<bool> seen(static_cast<std::size_t>(boundary) + 1, false);
  double scale = 0.0;
  for (const Complex& v : value) scale = std::max(scale, std::abs(v));
  for (std::uint64_t b = 0; b < value.size(); ++b) {
    const int w = std::popcount(b);
    if (!seen[static_cast<std::size_t>(w)]) {
      out[w] = value[b];
      seen[static_cast<std::size_t>(w)] = true;
    } else if (std::abs(out[w] - value[b]) > 1e-9 * std::max(scale, 1e-300)) {
      throw NumericalError("compose_gadget: effective signature is not symmetric");
    }
  }
  return out;
}

OpenGadget chain_gadget(const ComplexSignature& vertex, int copies) {
  if (copies < 1) throw ArgumentError("chain_gadget: need at least one vertex");
  OpenGadget g;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < copies; ++i) edges.emplace_back(i, i + 1);
  g.inner = Multigraph(copies, edges);
  const int d = vertex.arity();
  for (int i = 0; i < copies; ++i) g.dangling.emplace_back(i, d - g.inner.degree(i));
  g.signatures.assign(static_cast<std::size_t>(copies), vertex);
  return g;
}

}  // namespace holant

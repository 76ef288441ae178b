#ifndef HOLANT_GADGET_HPP
#define HOLANT_GADGET_HPP

#include <utility>
#include <vector>

#include "holant/graph.hpp"
#include "holant/signature.hpp"
#include "holant/transform.hpp"

namespace holant {

/// Vertices carry signatures; each inner edge is an arity-2 constraint between
/// two half-edge variables; dangling half-edges are the gadget's boundary.
struct OpenGadget {
  Multigraph inner;
  /// (vertex, count) pairs, expanded in order into boundary variables.
  std::vector<std::pair<int, int>> dangling;
  std::vector<ComplexSignature> signatures;

  int boundary_size() const;
};

constexpr int kGadgetMaxBoundary = 10;
constexpr int kGadgetMaxVariables = 26;

/// Effective signature on the boundary. Throws NumericalError when the
/// result depends on more than the Hamming weight (1e-9 relative).
ComplexSignature compose_gadget(const OpenGadget& g, const BinarySignature& edge_signature);

/// Path of `copies` vertices with signature `vertex`, one dangling edge per
/// inner vertex and two at each end (a single vertex keeps all its edges).
OpenGadget chain_gadget(const ComplexSignature& vertex, int copies);

}  // namespace holant

#endif  // HOLANT_GADGET_HPP

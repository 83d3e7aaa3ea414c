#pragma once

#include <string>
#include <vector>

#include "shadowcalc/graph.hpp"

namespace shadow {

struct FiberPiece {
  std::string vertex;
  PieceKind kind;
  FiberDescriptor descriptor;
};

// The 3-manifold lying above each vertex in the induced decomposition of the
// boundary of the thickening.
std::vector<FiberPiece> fiber_pieces(const DecoratedGraph& g, const Catalog& cat = Catalog::active());

}  // namespace shadow

#include "shadowcalc/seifert.hpp"

namespace shadow {

std::vector<FiberPiece> fiber_pieces(const DecoratedGraph& g, const Catalog& cat) {
  std::vector<FiberPiece> out;
  out.reserve(g.vertices.size());
  for (const auto& v : g.vertices) out.push_back({v.id, v.kind, cat.piece(v.kind).fiber});
  return out;
}

}  // namespace shadow

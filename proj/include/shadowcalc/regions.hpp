#pragma once

#include <utility>
#include <vector>

#include "shadowcalc/graph.hpp"

namespace shadow {

// One piece-region: a connected part of a piece away from its singular set.
// Surface pieces (and B) have a single piece-region index 0; annular pieces
// have one per port, indexed by port.
struct PieceRegion {
  int vertex = -1;
  int index = 0;
  auto operator<=>(const PieceRegion&) const = default;
};

struct Region {
  std::vector<PieceRegion> members;  // sorted
  std::vector<int> edges;            // sorted edge indices
  HalfInteger gleam;
  Parity parity = Parity::even;
  bool touches_boundary = false;  // contains a B marker
  bool orientable = true;
  // Orientation of each member relative to the region (+1 / -1), aligned
  // with `members`. Meaningless when !orientable.
  std::vector<int> orientation;
};

struct RegionSet {
  std::vector<Region> regions;
  // For every vertex and piece-region index, the region containing it.
  std::vector<std::vector<int>> region_of;

  int region_at(PieceRegion pr) const { return region_of[pr.vertex][pr.index]; }
};

PieceRegion piece_region_at(const DecoratedGraph& g, PortRef p, const Catalog& cat = Catalog::active());

RegionSet reconstruct_regions(const DecoratedGraph& g, const Catalog& cat = Catalog::active());

}  // namespace shadow

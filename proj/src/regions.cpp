#include "shadowcalc/regions.hpp"

#include <algorithm>
#include <numeric>

namespace shadow {

namespace {

// Union-find over piece-regions that also tracks the relative orientation
// of each node with respect to its root.
class OrientedUnionFind {
 public:
  explicit OrientedUnionFind(int n) : parent_(n), rank_(n, 0), parity_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::pair<int, int> find(int x) {
    if (parent_[x] == x) return {x, 0};
    auto [root, p] = find(parent_[x]);
    parent_[x] = root;
    parity_[x] ^= p;
    return {root, parity_[x]};
  }

  // Returns false if the join closes an orientation-reversing loop.
  bool unite(int a, int b, int relative) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return ((pa ^ pb) == relative);
    if (rank_[ra] < rank_[rb]) {
      std::swap(ra, rb);
      std::swap(pa, pb);
    }
    parent_[rb] = ra;
    parity_[rb] = pa ^ pb ^ relative;
    if (rank_[ra] == rank_[rb]) ++rank_[ra];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
  std::vector<int> parity_;
};

}  // namespace

PieceRegion piece_region_at(const DecoratedGraph& g, PortRef p, const Catalog& cat) {
  const auto& entry = cat.piece(g.vertices[p.vertex].kind);
  return {p.vertex, entry.surface ? 0 : p.port};
}

RegionSet reconstruct_regions(const DecoratedGraph& g, const Catalog& cat) {
  const int nv = static_cast<int>(g.vertices.size());
  std::vector<int> offset(nv + 1, 0);
  for (int v = 0; v < nv; ++v) {
    const auto& entry = cat.piece(g.vertices[v].kind);
    offset[v + 1] = offset[v] + (entry.surface ? 1 : entry.port_count());
  }
  const int n = offset[nv];
  OrientedUnionFind uf(n);
  std::vector<bool> bad_loop(n, false);
  auto node = [&](PortRef p) {
    auto pr = piece_region_at(g, p, cat);
    return offset[pr.vertex] + pr.index;
  };
  std::vector<int> loop_nodes;
  for (const auto& e : g.edges) {
    const int a = node(e.a);
    const int b = node(e.b);
    if (!uf.unite(a, b, e.flip ? 1 : 0)) loop_nodes.push_back(a);
  }

  RegionSet out;
  out.region_of.resize(nv);
  std::vector<int> root_to_region(n, -1);
  // Regions are numbered by their first piece-region in vertex order.
  for (int v = 0; v < nv; ++v) {
    const int count = offset[v + 1] - offset[v];
    out.region_of[v].assign(count, -1);
    for (int i = 0; i < count; ++i) {
      auto [root, par] = uf.find(offset[v] + i);
      if (root_to_region[root] < 0) {
        root_to_region[root] = static_cast<int>(out.regions.size());
        out.regions.emplace_back();
      }
      auto& r = out.regions[root_to_region[root]];
      r.members.push_back({v, i});
      r.orientation.push_back(par ? -1 : 1);
      out.region_of[v][i] = root_to_region[root];
      const auto& entry = cat.piece(g.vertices[v].kind);
      if (!entry.orientable) r.orientable = false;
      if (g.vertices[v].kind == PieceKind::B) r.touches_boundary = true;
      const Parity member_parity = entry.surface ? Parity::even : entry.ports[i].parity;
      r.parity = parity_xor(r.parity, member_parity);
    }
  }
  for (int x : loop_nodes) out.regions[root_to_region[uf.find(x).first]].orientable = false;
  for (int ei = 0; ei < static_cast<int>(g.edges.size()); ++ei) {
    auto& r = out.regions[out.region_at(piece_region_at(g, g.edges[ei].a, cat))];
    r.edges.push_back(ei);
    r.gleam += g.edges[ei].gleam;
  }
  return out;
}

}  // namespace shadow

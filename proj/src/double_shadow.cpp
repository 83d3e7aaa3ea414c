#include "shadowcalc/double_shadow.hpp"

#include <cstdlib>
#include <set>

#include "shadowcalc/errors.hpp"
#include "shadowcalc/regions.hpp"

namespace shadow {

namespace {

const HalfInteger kHalf = HalfInteger::from_twice(1);

// Cuts edge `edge_id` with a new P vertex whose third port carries a Y111
// capped by two discs. Returns the id of the half on the far side.
std::string insert_gadget(DecoratedGraph& g, const std::string& edge_id, const std::string& tag, HalfInteger stem,
                          HalfInteger left, HalfInteger right, const Catalog& cat) {
  const int ei = g.edge_index(edge_id);
  if (ei < 0) throw InvariantBreach("gadget target edge " + edge_id + " is missing");
  const Edge e = g.edges[ei];
  g.edges.erase(g.edges.begin() + ei);
  g.rebuild_index();

  const Parity pa = cat.piece(g.vertices[e.a.vertex].kind).ports[e.a.port].parity;
  const Parity pb = cat.piece(g.vertices[e.b.vertex].kind).ports[e.b.port].parity;
  // P ports are even, so the half-integral part of the gleam stays on the
  // odd side of the cut.
  HalfInteger ga = e.gleam;
  HalfInteger gb = HalfInteger::from_int(0);
  if (pa == Parity::odd && pb == Parity::odd) {
    ga = e.gleam - kHalf;
    gb = kHalf;
  } else if (pb == Parity::odd) {
    ga = HalfInteger::from_int(0);
    gb = e.gleam;
  }

  const int p = g.add_vertex(tag + ".P", PieceKind::P, cat);
  const int y = g.add_vertex(tag + ".Y", PieceKind::Y111, cat);
  const int d1 = g.add_vertex(tag + ".D1", PieceKind::D, cat);
  const int d2 = g.add_vertex(tag + ".D2", PieceKind::D, cat);
  g.add_edge(e.id + ".a", e.a, {p, 0}, ga, e.flip, cat);
  g.add_edge(e.id + ".b", {p, 1}, e.b, gb, false, cat);
  g.add_edge(tag + ".s", {p, 2}, {y, 0}, stem, false, cat);
  g.add_edge(tag + ".l", {y, 1}, {d1, 0}, left, false, cat);
  g.add_edge(tag + ".r", {y, 2}, {d2, 0}, right, false, cat);
  return e.id + ".b";
}

}  // namespace

DecoratedGraph shadow_of_double(const DecoratedGraph& g, int h, const Catalog& cat) {
  for (const auto& v : validate_graph(g, cat))
    if (!v.indeterminate) throw DomainError("input graph is invalid: " + v.message);

  std::set<int> boundary;
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v)
    if (g.vertices[v].kind == PieceKind::B) boundary.insert(v);
  const X12Portion& x12 = cat.x12();
  if (!boundary.empty() && !x12.resolved)
    throw DataMissing("the X12 portion is unresolved in the catalog; cannot cap boundary components");

  const RegionSet rs = reconstruct_regions(g, cat);
  std::vector<std::string> bubble_edges;
  for (int r = 0; r < static_cast<int>(rs.regions.size()); ++r) {
    const auto& reg = rs.regions[r];
    if (reg.edges.empty()) throw DomainError("region " + std::to_string(r) + " has no edge to carry a bubble");
    bubble_edges.push_back(g.edges[reg.edges.front()].id);
  }
  if (bubble_edges.empty() && h != 0) throw DomainError("no region to blow up");

  DecoratedGraph out;
  out.name = g.name.empty() ? "double" : "double of " + g.name;
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v)
    if (!boundary.count(v)) out.add_vertex(g.vertices[v].id, g.vertices[v].kind, cat);

  // One copy of the X12 portion per B vertex, left open at its attach port.
  std::vector<PortRef> caps(g.vertices.size());
  for (int v : boundary) {
    const DecoratedGraph piece = parse_graph(x12.graph_text, cat);
    const std::string prefix = "x12." + g.vertices[v].id + ".";
    std::vector<int> map(piece.vertices.size());
    for (size_t i = 0; i < piece.vertices.size(); ++i)
      map[i] = out.add_vertex(prefix + piece.vertices[i].id, piece.vertices[i].kind, cat);
    for (const auto& e : piece.edges)
      out.add_edge(prefix + e.id, {map[e.a.vertex], e.a.port}, {map[e.b.vertex], e.b.port}, e.gleam, e.flip, cat);
    const auto colon = x12.attach.rfind(':');
    if (colon == std::string::npos) throw DomainError("X12 attach point '" + x12.attach + "' is malformed");
    const int av = piece.vertex_index(x12.attach.substr(0, colon));
    if (av < 0) throw DomainError("X12 attach vertex is missing from the portion graph");
    caps[v] = {map[av], std::stoi(x12.attach.substr(colon + 1))};
  }
  auto endpoint = [&](PortRef p) {
    if (boundary.count(p.vertex)) return caps[p.vertex];
    return PortRef{out.vertex_index(g.vertices[p.vertex].id), p.port};
  };
  for (const auto& e : g.edges) out.add_edge(e.id, endpoint(e.a), endpoint(e.b), e.gleam, e.flip, cat);

  std::string last;
  for (size_t r = 0; r < bubble_edges.size(); ++r) {
    const std::string tail = insert_gadget(out, bubble_edges[r], "bubble" + std::to_string(r),
                                           HalfInteger::from_int(-1), HalfInteger::from_int(1),
                                           HalfInteger::from_int(-1), cat);
    if (r == 0) last = tail;
  }
  // Blow-ups stack along the first region, each cutting the previous tail.
  const HalfInteger sign = HalfInteger::from_int(h > 0 ? 1 : -1);
  for (int k = 0; k < std::abs(h); ++k)
    last = insert_gadget(out, last, "blowup" + std::to_string(k), HalfInteger::from_int(0), HalfInteger::from_int(0),
                         sign, cat);
  return out;
}

}  // namespace shadow

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shadowcalc/catalog.hpp"
#include "shadowcalc/half_integer.hpp"

namespace shadow {

struct Vertex {
  std::string id;
  PieceKind kind = PieceKind::D;
};

struct PortRef {
  int vertex = -1;  // index into DecoratedGraph::vertices
  int port = -1;
  auto operator<=>(const PortRef&) const = default;
};

struct Edge {
  std::string id;
  PortRef a;
  PortRef b;
  HalfInteger gleam;
  // Gluing reverses the local orientations of the two piece-regions.
  bool flip = false;
};

struct DecoratedGraph {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::string name;

  int vertex_index(const std::string& id) const;  // -1 when absent
  int edge_index(const std::string& id) const;
  int add_vertex(const std::string& id, PieceKind kind, const Catalog& cat = Catalog::active());
  int add_edge(const std::string& id, PortRef a, PortRef b, HalfInteger gleam, bool flip = false,
               const Catalog& cat = Catalog::active());
  // Edge index attached to a port, or -1.
  int edge_at(PortRef p) const;
  int valence(int vertex) const;
  void remove_vertex(int vertex);  // also drops incident edges

 private:
  friend DecoratedGraph parse_graph(const std::string&, const Catalog&);
  void check_port(PortRef p, const Catalog& cat) const;
  std::map<std::string, int> vertex_ids_;
  std::map<std::string, int> edge_ids_;
  std::map<PortRef, int> port_use_;

 public:
  void rebuild_index();
};

DecoratedGraph parse_graph(const std::string& text, const Catalog& cat = Catalog::active());
DecoratedGraph load_graph_file(const std::string& path, const Catalog& cat = Catalog::active());
std::string serialize_graph(const DecoratedGraph& g);

struct Violation {
  std::string rule;     // unused-port, parity, parity-indeterminate, ...
  std::string subject;  // edge or vertex id
  std::string message;
  bool indeterminate = false;
};

std::vector<Violation> validate_graph(const DecoratedGraph& g, const Catalog& cat = Catalog::active());

Parity edge_parity(const DecoratedGraph& g, const Edge& e, const Catalog& cat = Catalog::active());

int connected_complexity(const DecoratedGraph& g);

}  // namespace shadow

#include "shadowcalc/graph.hpp"

#include <fstream>
#include <sstream>

#include "shadowcalc/errors.hpp"

namespace shadow {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::string port_text(const DecoratedGraph& g, PortRef p) {
  return g.vertices[p.vertex].id + ":" + std::to_string(p.port);
}

}  // namespace

int DecoratedGraph::vertex_index(const std::string& id) const {
  auto it = vertex_ids_.find(id);
  return it == vertex_ids_.end() ? -1 : it->second;
}

int DecoratedGraph::edge_index(const std::string& id) const {
  auto it = edge_ids_.find(id);
  return it == edge_ids_.end() ? -1 : it->second;
}

int DecoratedGraph::edge_at(PortRef p) const {
  auto it = port_use_.find(p);
  return it == port_use_.end() ? -1 : it->second;
}

int DecoratedGraph::valence(int vertex) const {
  int n = 0;
  for (const auto& e : edges) n += (e.a.vertex == vertex) + (e.b.vertex == vertex);
  return n;
}

void DecoratedGraph::check_port(PortRef p, const Catalog& cat) const {
  if (p.vertex < 0 || p.vertex >= static_cast<int>(vertices.size()))
    throw DomainError("edge endpoint refers to a missing vertex");
  const int count = cat.piece(vertices[p.vertex].kind).port_count();
  if (p.port < 0 || p.port >= count)
    throw DomainError("port " + std::to_string(p.port) + " out of range for " + vertices[p.vertex].id + " (" +
                      std::string(to_string(vertices[p.vertex].kind)) + " has " + std::to_string(count) + ")");
  if (port_use_.count(p)) throw DomainError("port " + vertices[p.vertex].id + ":" + std::to_string(p.port) + " used twice");
}

int DecoratedGraph::add_vertex(const std::string& id, PieceKind kind, const Catalog&) {
  if (vertex_ids_.count(id)) throw DomainError("duplicate vertex id " + id);
  vertices.push_back({id, kind});
  vertex_ids_[id] = static_cast<int>(vertices.size()) - 1;
  return static_cast<int>(vertices.size()) - 1;
}

int DecoratedGraph::add_edge(const std::string& id, PortRef a, PortRef b, HalfInteger gleam, bool flip,
                             const Catalog& cat) {
  if (edge_ids_.count(id)) throw DomainError("duplicate edge id " + id);
  check_port(a, cat);
  check_port(b, cat);
  if (a == b) throw DomainError("edge " + id + " uses the same port twice");
  edges.push_back({id, a, b, gleam, flip});
  const int idx = static_cast<int>(edges.size()) - 1;
  edge_ids_[id] = idx;
  port_use_[a] = idx;
  port_use_[b] = idx;
  return idx;
}

void DecoratedGraph::rebuild_index() {
  vertex_ids_.clear();
  edge_ids_.clear();
  port_use_.clear();
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) vertex_ids_[vertices[i].id] = i;
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    edge_ids_[edges[i].id] = i;
    port_use_[edges[i].a] = i;
    port_use_[edges[i].b] = i;
  }
}

void DecoratedGraph::remove_vertex(int vertex) {
  std::vector<Edge> kept;
  for (auto e : edges) {
    if (e.a.vertex == vertex || e.b.vertex == vertex) continue;
    if (e.a.vertex > vertex) --e.a.vertex;
    if (e.b.vertex > vertex) --e.b.vertex;
    kept.push_back(e);
  }
  edges = std::move(kept);
  vertices.erase(vertices.begin() + vertex);
  rebuild_index();
}

DecoratedGraph parse_graph(const std::string& text, const Catalog& cat) {
  DecoratedGraph g;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  auto parse_port = [&](const std::string& tok) {
    const auto colon = tok.rfind(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == tok.size())
      throw ParseError(lineno, "malformed endpoint '" + tok + "'");
    const int v = g.vertex_index(tok.substr(0, colon));
    if (v < 0) throw ParseError(lineno, "unknown vertex '" + tok.substr(0, colon) + "'");
    const std::string digits = tok.substr(colon + 1);
    if (digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 3)
      throw ParseError(lineno, "malformed port index '" + digits + "'");
    return PortRef{v, std::stoi(digits)};
  };
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    const auto tok = split_ws(raw);
    if (tok.empty()) continue;
    if (tok[0] == "vertex") {
      if (tok.size() != 3) throw ParseError(lineno, "expected: vertex <id> <KIND>");
      auto kind = parse_piece_kind(tok[2]);
      if (!kind) throw ParseError(lineno, "unknown piece kind '" + tok[2] + "'");
      if (g.vertex_index(tok[1]) >= 0) throw ParseError(lineno, "duplicate vertex id '" + tok[1] + "'");
      g.add_vertex(tok[1], *kind, cat);
    } else if (tok[0] == "edge") {
      if ((tok.size() != 6 && tok.size() != 7) || tok[4] != "gleam" || (tok.size() == 7 && tok[6] != "flip"))
        throw ParseError(lineno, "expected: edge <id> <v>:<port> <v>:<port> gleam <g> [flip]");
      const auto a = parse_port(tok[2]);
      const auto b = parse_port(tok[3]);
      auto gleam = HalfInteger::parse(tok[5]);
      if (!gleam) throw ParseError(lineno, "malformed gleam '" + tok[5] + "'");
      try {
        g.add_edge(tok[1], a, b, *gleam, tok.size() == 7, cat);
      } catch (const ParseError&) {
        throw;
      } catch (const DomainError& e) {
        throw ParseError(lineno, e.what());
      }
    } else if (tok[0] == "name") {
      g.name = raw.substr(raw.find("name") + 4);
      g.name.erase(0, g.name.find_first_not_of(" \t"));
      g.name.erase(g.name.find_last_not_of(" \t\r") + 1);
    } else {
      throw ParseError(lineno, "unknown directive '" + tok[0] + "'");
    }
  }
  return g;
}

DecoratedGraph load_graph_file(const std::string& path, const Catalog& cat) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str(), cat);
}

std::string serialize_graph(const DecoratedGraph& g) {
  std::string out;
  if (!g.name.empty()) out += "name " + g.name + "\n";
  for (const auto& v : g.vertices) out += "vertex " + v.id + " " + std::string(to_string(v.kind)) + "\n";
  for (const auto& e : g.edges) {
    out += "edge " + e.id + " " + port_text(g, e.a) + " " + port_text(g, e.b) + " gleam " + e.gleam.to_string();
    if (e.flip) out += " flip";
    out += "\n";
  }
  return out;
}

Parity edge_parity(const DecoratedGraph& g, const Edge& e, const Catalog& cat) {
  const auto pa = cat.piece(g.vertices[e.a.vertex].kind).ports[e.a.port].parity;
  const auto pb = cat.piece(g.vertices[e.b.vertex].kind).ports[e.b.port].parity;
  return parity_xor(pa, pb);
}

std::vector<Violation> validate_graph(const DecoratedGraph& g, const Catalog& cat) {
  std::vector<Violation> out;
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
    const auto& entry = cat.piece(g.vertices[v].kind);
    for (int p = 0; p < entry.port_count(); ++p) {
      if (g.edge_at({v, p}) < 0)
        out.push_back({"unused-port", g.vertices[v].id,
                       "port " + std::to_string(p) + " of " + g.vertices[v].id + " has no edge", false});
    }
  }
  for (const auto& e : g.edges) {
    const auto parity = edge_parity(g, e, cat);
    if (parity == Parity::unresolved) {
      out.push_back({"parity-indeterminate", e.id,
                     "gleam integrality of " + e.id + " cannot be checked: port parity unresolved", true});
    } else if (e.gleam.is_integral() != (parity == Parity::even)) {
      out.push_back({"parity", e.id,
                     "edge " + e.id + " is " + std::string(to_string(parity)) + " but its gleam " +
                         e.gleam.to_string() + (e.gleam.is_integral() ? " is integral" : " is not integral"),
                     false});
    }
  }
  return out;
}

int connected_complexity(const DecoratedGraph& g) {
  for (const auto& v : g.vertices)
    if (is_x_piece(v.kind)) return 1;
  return 0;
}

}  // namespace shadow

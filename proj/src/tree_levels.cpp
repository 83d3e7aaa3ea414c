#include "shadowcalc/tree_levels.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "shadowcalc/errors.hpp"
#include "shadowcalc/int_matrix.hpp"

namespace shadow {

namespace {

std::vector<std::vector<int>> adjacency(const DecoratedGraph& g) {
  std::vector<std::vector<int>> adj(g.vertices.size());
  for (const auto& e : g.edges) {
    adj[e.a.vertex].push_back(e.b.vertex);
    adj[e.b.vertex].push_back(e.a.vertex);
  }
  return adj;
}

bool connected_subset(const std::vector<std::vector<int>>& adj, const std::vector<bool>& in) {
  const int n = static_cast<int>(in.size());
  int start = -1, count = 0;
  for (int i = 0; i < n; ++i)
    if (in[i]) {
      ++count;
      if (start < 0) start = i;
    }
  if (count == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<int> stack = {start};
  seen[start] = true;
  int reached = 0;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    ++reached;
    for (int y : adj[x])
      if (in[y] && !seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
  }
  return reached == count;
}

int level_of(const TreeWithLevels& t, int v) {
  auto it = t.level.find(t.graph.vertices[v].id);
  return it == t.level.end() ? -1 : it->second;
}

}  // namespace

std::vector<LevelViolation> validate_tree_levels(const TreeWithLevels& t, const Catalog&) {
  std::vector<LevelViolation> out;
  const auto& g = t.graph;
  const int n = static_cast<int>(g.vertices.size());
  const auto adj = adjacency(g);

  static const std::set<PieceKind> admitted = {PieceKind::B, PieceKind::D, PieceKind::Y111,
                                               PieceKind::Y12, PieceKind::X10, PieceKind::X11};
  for (int v = 0; v < n; ++v) {
    const auto& id = g.vertices[v].id;
    if (!admitted.count(g.vertices[v].kind))
      out.push_back({0, id, "piece kind " + std::string(to_string(g.vertices[v].kind)) + " not admitted"});
    if (level_of(t, v) < 0) out.push_back({0, id, "vertex has no level"});
    if (adj[v].size() > 3) out.push_back({0, id, "valence above 3"});
  }
  for (const auto& e : g.edges)
    if (e.a.vertex == e.b.vertex) out.push_back({0, e.id, "self-loop in a tree"});
  std::vector<bool> all(n, true);
  if (static_cast<int>(g.edges.size()) != n - 1 || !connected_subset(adj, all))
    out.push_back({0, g.name, "graph is not a tree"});
  if (!out.empty()) return out;

  std::vector<bool> root(n, false);
  int roots = 0;
  for (int v = 0; v < n; ++v)
    if (level_of(t, v) == 0) {
      root[v] = true;
      ++roots;
    }
  if (roots < 2) {
    out.push_back({1, "", "fewer than two vertices of level zero"});
  } else {
    bool path = connected_subset(adj, root);
    for (int v = 0; v < n && path; ++v) {
      if (!root[v]) continue;
      int deg = 0;
      for (int w : adj[v]) deg += root[w];
      if (deg > 2) path = false;
    }
    if (!path) out.push_back({1, "", "level-zero vertices do not form a path"});
  }

  for (int v = 0; v < n; ++v) {
    const int val = static_cast<int>(adj[v].size());
    if (val != 2 && val != 3) continue;
    int higher = 0;
    for (int w : adj[v]) higher += level_of(t, w) > level_of(t, v);
    if (higher != 1)
      out.push_back({2, g.vertices[v].id,
                     "valence-" + std::to_string(val) + " vertex has " + std::to_string(higher) +
                         " strictly higher neighbours"});
  }

  std::set<int> levels;
  for (int v = 0; v < n; ++v) levels.insert(level_of(t, v));
  for (int L : levels) {
    std::vector<bool> in(n);
    for (int v = 0; v < n; ++v) in[v] = level_of(t, v) <= L;
    if (!connected_subset(adj, in)) out.push_back({3, "", "vertices of level <= " + std::to_string(L) + " are disconnected"});
  }
  return out;
}

std::vector<int> branch_vertices(const TreeWithLevels& t, int v) {
  const auto adj = adjacency(t.graph);
  if (adj[v].size() != 2 && adj[v].size() != 3) return {};
  int start = -1;
  for (int w : adj[v])
    if (level_of(t, w) > level_of(t, v)) start = w;
  if (start < 0) return {};
  std::vector<int> out;
  std::vector<bool> seen(adj.size(), false);
  seen[v] = seen[start] = true;
  std::vector<int> stack = {start};
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    out.push_back(x);
    for (int y : adj[x])
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BranchTorsion branch_torsion(const TreeWithLevels& t, const std::string& base) {
  const auto& g = t.graph;
  const int v = g.vertex_index(base);
  if (v < 0) throw DomainError("unknown vertex " + base);
  const auto branch = branch_vertices(t, v);
  if (branch.empty()) throw DomainError("vertex " + base + " is not the base of a branch");

  BranchTorsion bt;
  // Walk the chain outward from the base.
  int prev = v;
  int cur = -1;
  for (int w : branch) {
    for (const auto& e : g.edges)
      if ((e.a.vertex == v && e.b.vertex == w) || (e.b.vertex == v && e.a.vertex == w)) cur = w;
  }
  while (true) {
    const Edge* link = nullptr;
    for (const auto& e : g.edges)
      if ((e.a.vertex == prev && e.b.vertex == cur) || (e.b.vertex == prev && e.a.vertex == cur)) link = &e;
    if (!link->gleam.is_integral()) throw DomainError("branch edge " + link->id + " has non-integral gleam");
    bt.line.push_back(link->gleam.as_int());
    const int val = g.valence(cur);
    if (val == 1) {
      if (g.vertices[cur].kind != PieceKind::D) throw DomainError("branch does not end at a disc leaf");
      break;
    }
    if (val != 2) throw DomainError("branch is not a chain; unsupported shape");
    int next = -1;
    for (const auto& e : g.edges) {
      if (&e == link) continue;
      if (e.a.vertex == cur) next = e.b.vertex;
      if (e.b.vertex == cur) next = e.a.vertex;
    }
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(bt.line.size()) != static_cast<int>(branch.size()))
    throw DomainError("branch is not a chain; unsupported shape");

  // Continued fraction g1 - 1/(g2 - 1/(...)) as a projective pair.
  int64_t num = bt.line.back(), den = 1;
  for (int i = static_cast<int>(bt.line.size()) - 2; i >= 0; --i) {
    const int64_t nn = checked_sub(checked_mul(bt.line[i], num), den);
    den = num;
    num = nn;
  }
  const int64_t gg = std::gcd(num, den);
  if (gg != 0) {
    num /= gg;
    den /= gg;
  }
  if (den == 0 || (den != 1 && den != -1))
    throw DomainError("branch is not a solid torus with meridian on a section (continued fraction " +
                      std::to_string(num) + "/" + std::to_string(den) + ")");
  const int64_t cf = num * den;

  PlumbingLine cur_line = bt.line;
  while (cur_line.size() > 1) {
    const int n = static_cast<int>(cur_line.size());
    std::optional<PlumbingMove> m;
    for (auto k : {MoveKind::zero_trailing, MoveKind::unit_trailing})
      if (!m && move_applicable(cur_line, {k, n - 1})) m = PlumbingMove{k, n - 1};
    for (int i = 1; i < n - 1 && !m; ++i)
      for (auto k : {MoveKind::zero_interior, MoveKind::unit_interior})
        if (!m && move_applicable(cur_line, {k, i})) m = PlumbingMove{k, i};
    if (!m) break;
    cur_line = apply_plumbing_move(cur_line, *m);
    bt.trace.push_back(*m);
  }
  if (cur_line.size() != 1 || cur_line[0] != cf)
    throw InvariantBreach("branch reduction disagrees with its continued fraction");
  bt.q = cf;
  bt.vertical_disc = bt.q == 0;
  return bt;
}

}  // namespace shadow

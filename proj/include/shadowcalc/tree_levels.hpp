#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shadowcalc/graph.hpp"
#include "shadowcalc/plumbing.hpp"

namespace shadow {

struct TreeWithLevels {
  DecoratedGraph graph;
  std::map<std::string, int> level;  // by vertex id
  // The solid-torus/section condition on branches is taken on trust.
  bool assume_solid_torus_branches = true;
};

struct LevelViolation {
  int condition = 0;  // 0 = not a tree / bad kind, 1..3 = level conditions
  std::string subject;
  std::string message;
};

std::vector<LevelViolation> validate_tree_levels(const TreeWithLevels& t, const Catalog& cat = Catalog::active());

// Vertices of the branch S_v started at v (empty when v has valence 1).
std::vector<int> branch_vertices(const TreeWithLevels& t, int v);

struct BranchTorsion {
  int64_t q = 0;
  PlumbingLine line;                 // edge gleams from the base outward
  std::vector<PlumbingMove> trace;   // reduction towards the base
  bool vertical_disc = false;        // q == 0
};

// Supported branch shape: a chain v - w1 - ... - wk where w1..w(k-1) have
// valence 2 and wk is a D leaf, all edge gleams integral. The line of gleams
// is reduced with interior and far-end moves only; the surviving entry is q.
// Throws DomainError for other shapes or when the chain is not a solid torus
// with meridian on a section (non-integral continued fraction).
BranchTorsion branch_torsion(const TreeWithLevels& t, const std::string& base);

}  // namespace shadow

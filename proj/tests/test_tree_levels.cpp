#include <doctest.h>

#include <string>

#include "shadowcalc/errors.hpp"
#include "shadowcalc/tree_levels.hpp"

using namespace shadow;

namespace {

// Roots d0 - y - d2 at level 0, branch y - c - leaf going up.
TreeWithLevels sample_tree(int g1, int g2) {
  const std::string text = "vertex d0 D\nvertex y Y111\nvertex d2 D\nvertex c Y12\nvertex leaf D\n"
                           "edge a d0:0 y:0 gleam 0\nedge b y:1 d2:0 gleam 0\n"
                           "edge s y:2 c:0 gleam " + std::to_string(g1) +
                           "\nedge t c:1 leaf:0 gleam " + std::to_string(g2) + "\n";
  return {parse_graph(text), {{"d0", 0}, {"y", 0}, {"d2", 0}, {"c", 1}, {"leaf", 2}}, true};
}

// Exact continued fraction e1 - 1/(e2 - 1/(...)) as num/den, den may be 0.
std::pair<int64_t, int64_t> continued_fraction(const std::vector<int64_t>& e) {
  int64_t num = 1, den = 0;  // start at infinity
  for (auto it = e.rbegin(); it != e.rend(); ++it) {
    const int64_t n2 = *it * num - den;
    den = num;
    num = n2;
  }
  return {num, den};
}

}  // namespace

TEST_CASE("a valid tree with levels") {
  const auto t = sample_tree(3, 1);
  CHECK(validate_tree_levels(t).empty());
  const auto br = branch_vertices(t, t.graph.vertex_index("y"));
  CHECK(br.size() == 2);
}

TEST_CASE("each level condition can fail") {
  auto t = sample_tree(3, 1);
  t.level["d2"] = 1;  // only two roots left but d2 no longer has a lower path
  t.level["d0"] = 1;
  auto v = validate_tree_levels(t);
  bool c1 = false;
  for (const auto& x : v) c1 |= x.condition == 1;
  CHECK(c1);

  t = sample_tree(3, 1);
  t.level["c"] = 3;  // c now has no strictly higher neighbour
  v = validate_tree_levels(t);
  bool c2 = false;
  for (const auto& x : v) c2 |= x.condition == 2 && x.subject == "c";
  CHECK(c2);

  t = sample_tree(3, 1);
  t.level["y"] = 1;  // level-zero set {d0, d2} is disconnected
  v = validate_tree_levels(t);
  bool c3 = false;
  for (const auto& x : v) c3 |= x.condition == 1 || x.condition == 3;
  CHECK(c3);
}

TEST_CASE("structural rejections") {
  auto t = sample_tree(0, 0);
  t.level.erase("leaf");
  auto v = validate_tree_levels(t);
  REQUIRE_FALSE(v.empty());
  CHECK(v[0].condition == 0);

  const auto p = parse_graph("vertex p P\nvertex a D\nvertex b D\nvertex c D\n"
                             "edge e0 p:0 a:0 gleam 0\nedge e1 p:1 b:0 gleam 0\nedge e2 p:2 c:0 gleam 0\n");
  TreeWithLevels tp{p, {{"p", 0}, {"a", 0}, {"b", 1}, {"c", 1}}, true};
  v = validate_tree_levels(tp);
  REQUIRE_FALSE(v.empty());
  CHECK(v[0].condition == 0);
}

TEST_CASE("branch torsion of a single disc leaf is its gleam") {
  for (int n = -4; n <= 4; ++n) {
    const auto g = parse_graph("vertex d0 D\nvertex y Y111\nvertex d2 D\nvertex leaf D\n"
                               "edge a d0:0 y:0 gleam 0\nedge b y:1 d2:0 gleam 0\nedge s y:2 leaf:0 gleam " +
                               std::to_string(n) + "\n");
    TreeWithLevels t{g, {{"d0", 0}, {"y", 0}, {"d2", 0}, {"leaf", 1}}, true};
    const auto bt = branch_torsion(t, "y");
    CHECK(bt.q == n);
    CHECK(bt.vertical_disc == (n == 0));
  }
}

TEST_CASE("branch torsion along a chain follows the continued fraction") {
  int solid = 0;
  for (int g1 = -4; g1 <= 4; ++g1)
    for (int g2 = -4; g2 <= 4; ++g2) {
      const auto t = sample_tree(g1, g2);
      const auto [num, den] = continued_fraction({g1, g2});
      INFO(g1 << "," << g2);
      if (den == 1 || den == -1) {
        const auto bt = branch_torsion(t, "y");
        CHECK(bt.q == num * den);
        ++solid;
      } else {
        CHECK_THROWS_AS(branch_torsion(t, "y"), DomainError);
      }
    }
  CHECK(solid > 0);
  // (3, 1) reduces by one blow-down to (2).
  const auto bt = branch_torsion(sample_tree(3, 1), "y");
  CHECK(bt.q == 2);
  CHECK(bt.trace.size() == 1);
  CHECK_THROWS_AS(branch_torsion(sample_tree(5, 0), "y"), DomainError);
}

TEST_CASE("unsupported branch shapes") {
  const auto t = sample_tree(1, 1);
  CHECK_THROWS_AS(branch_torsion(t, "leaf"), DomainError);
  CHECK_THROWS_AS(branch_torsion(t, "nobody"), DomainError);
}

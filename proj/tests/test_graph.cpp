#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "shadowcalc/catalog.hpp"
#include "shadowcalc/errors.hpp"
#include "shadowcalc/graph.hpp"

using namespace shadow;

namespace {
const std::string kData = SHADOWCALC_DATA_DIR;
}

TEST_CASE("catalog covers every piece kind with consistent ports") {
  const Catalog& cat = Catalog::builtin();
  for (int k = 0; k < kPieceKindCount; ++k) {
    const auto kind = static_cast<PieceKind>(k);
    const auto& e = cat.piece(kind);
    CHECK(e.kind == kind);
    CHECK(parse_piece_kind(to_string(kind)) == kind);
    if (is_x_piece(kind)) {
      int total = 0;
      for (const auto& p : e.ports) total += p.length;
      CHECK(total == 6);
      CHECK(e.singular_edges == 2);
    }
  }
  CHECK(cat.piece(PieceKind::X11).port_count() == 4);
  CHECK(cat.piece(PieceKind::X8).port_count() == 3);
  CHECK(cat.piece(PieceKind::X10).ports[2].length == 3);
  CHECK(cat.piece(PieceKind::X9).ports[0].parity == Parity::even);
  CHECK(cat.piece(PieceKind::X9).ports[1].parity == Parity::odd);
  CHECK(cat.piece(PieceKind::X11).ports[0].parity == Parity::odd);
  CHECK(cat.piece(PieceKind::X11).ports[2].parity == Parity::even);
}

TEST_CASE("parse the sphere and serialize back") {
  const auto g = parse_graph("vertex a D\nvertex b D\nedge e a:0 b:0 gleam 1/2\n");
  REQUIRE(g.vertices.size() == 2);
  REQUIRE(g.edges.size() == 1);
  CHECK(g.edges[0].gleam.twice_value() == 1);
  const auto again = parse_graph(serialize_graph(g));
  CHECK(serialize_graph(again) == serialize_graph(g));
}

TEST_CASE("serialize is a normal form on shipped graphs") {
  for (const char* f : {"sphere_g0.sg", "torus_meridian.sg", "rp3xs1.sg", "s2xs2.sg", "disc.sg"}) {
    INFO(f);
    const auto g = load_graph_file(kData + "/graphs/" + f);
    const std::string once = serialize_graph(g);
    CHECK(serialize_graph(parse_graph(once)) == once);
  }
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("vertex a D\nvertex b Q7\n") == 2);
  CHECK(line_of("vertex a D\nvertex b D\nedge e a:0 b:1 gleam 0\n") == 3);   // port out of range
  CHECK(line_of("vertex a P\nedge e a:0 a:0 gleam 0\n") == 2);               // same port twice
  CHECK(line_of("vertex a P\nvertex b D\nvertex c D\nedge e a:0 b:0 gleam 0\nedge f a:1 b:0 gleam 0\n") == 5);
  CHECK(line_of("vertex a D\nvertex b D\nedge e a:0 b:0 gleam 1/3\n") == 3);
  CHECK(line_of("bogus\n") == 1);
  CHECK(line_of("vertex a D\nvertex a D\n") == 2);
}

TEST_CASE("validation finds unused ports and gleam parity mistakes") {
  const auto open = parse_graph("vertex p P\nvertex d D\nedge e p:0 d:0 gleam 0\n");
  const auto v = validate_graph(open);
  int unused = 0;
  for (const auto& x : v) unused += x.rule == "unused-port";
  CHECK(unused == 2);

  // Even meets even: the gleam must be an integer.
  const auto bad = parse_graph("vertex a D\nvertex b D\nedge e a:0 b:0 gleam 1/2\n");
  const auto vb = validate_graph(bad);
  REQUIRE(vb.size() == 1);
  CHECK(vb[0].rule == "parity");

  // Odd meets even on X11: half-integral gleam required.
  const auto x = parse_graph(
      "vertex x X11\nvertex a D\nvertex b D\nvertex c D\nvertex d D\n"
      "edge e0 x:0 a:0 gleam 0\nedge e1 x:1 b:0 gleam 1/2\nedge e2 x:2 c:0 gleam 0\nedge e3 x:3 d:0 gleam 0\n");
  const auto vx = validate_graph(x);
  REQUIRE(vx.size() == 1);
  CHECK(vx[0].subject == "e0");
}

TEST_CASE("unresolved parity is reported as indeterminate") {
  const auto g = parse_graph("vertex x X7\nvertex a D\nvertex b D\nedge e x:0 a:0 gleam 0\nedge f x:1 b:0 gleam 0\n");
  const auto v = validate_graph(g);
  REQUIRE(!v.empty());
  for (const auto& x : v) {
    CHECK(x.indeterminate);
    CHECK(x.rule == "parity-indeterminate");
  }
  CHECK(edge_parity(g, g.edges[0]) == Parity::unresolved);
}

TEST_CASE("connected complexity counts X pieces") {
  CHECK(connected_complexity(load_graph_file(kData + "/graphs/sphere_g0.sg")) == 0);
  CHECK(connected_complexity(load_graph_file(kData + "/graphs/torus_meridian.sg")) == 0);
  CHECK(connected_complexity(load_graph_file(kData + "/graphs/rp3xs1.sg")) == 1);
}

TEST_CASE("remove_vertex drops incident edges and keeps indices valid") {
  auto g = load_graph_file(kData + "/graphs/s2xs2.sg");
  g.remove_vertex(g.vertex_index("d2"));
  CHECK(g.vertices.size() == 3);
  CHECK(g.edges.size() == 2);
  CHECK(g.edge_index("b") == -1);
  CHECK(g.vertices[g.edges[1].b.vertex].id == "d3");
}

TEST_CASE("catalog validation rejects broken data") {
  std::string text;
  {
    std::ifstream f(kData + "/catalog.json");
    std::stringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  CHECK_NOTHROW(Catalog::from_json_text(text));
  std::string broken = text;
  const auto pos = broken.find("\"X7\"");
  REQUIRE(pos != std::string::npos);
  broken.replace(pos, 4, "\"X99\"");
  CHECK_THROWS_AS(Catalog::from_json_text(broken), DomainError);
  CHECK_THROWS_AS(Catalog::from_json_text("{not json"), DomainError);
}

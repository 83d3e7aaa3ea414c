// Command-line front end. Every command builds one JSON report; --json
// prints it as JSON, otherwise as indented "key: value" lines.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "shadowcalc/assembly.hpp"
#include "shadowcalc/blocks.hpp"
#include "shadowcalc/census.hpp"
#include "shadowcalc/cusp.hpp"
#include "shadowcalc/dehn.hpp"
#include "shadowcalc/double_shadow.hpp"
#include "shadowcalc/errors.hpp"
#include "shadowcalc/graph.hpp"
#include "shadowcalc/lattice.hpp"
#include "shadowcalc/plumbing.hpp"
#include "shadowcalc/presentation.hpp"
#include "shadowcalc/regions.hpp"
#include "shadowcalc/seifert.hpp"
#include "shadowcalc/tree_levels.hpp"

using json = nlohmann::ordered_json;
using namespace shadow;

namespace {

struct Report {
  json body = json::object();
  bool failed = false;  // a violation or error object is present
};

std::string scalar_text(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

// `first` replaces the indentation of the first line (used for "- " items).
void print_text(const json& j, int indent, std::ostream& out, const std::string& first = "") {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    bool lead = !first.empty();
    for (auto it = j.begin(); it != j.end(); ++it) {
      out << (lead ? first : pad);
      lead = false;
      if (it->is_structured() && !it->empty()) {
        out << it.key() << ":\n";
        print_text(*it, indent + 2, out);
      } else {
        out << it.key() << ": " << scalar_text(*it) << '\n';
      }
    }
  } else if (j.is_array()) {
    for (const auto& x : j) {
      if (x.is_object() && !x.empty()) {
        print_text(x, indent + 2, out, pad + "- ");
      } else {
        out << pad << "- " << scalar_text(x) << '\n';
      }
    }
  } else {
    out << pad << j.dump() << '\n';
  }
}

json h1_json(const H1Group& g) {
  return json{{"rank", g.rank}, {"torsion", g.torsion}, {"text", g.to_string()}};
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (int j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
    rows.push_back(r);
  }
  return rows;
}

json violation_json(const Violation& v) {
  return json{{"rule", v.rule}, {"subject", v.subject}, {"message", v.message}, {"indeterminate", v.indeterminate}};
}

std::string port_text(const DecoratedGraph& g, PortRef p) {
  return g.vertices[p.vertex].id + ":" + std::to_string(p.port);
}

json graph_json(const DecoratedGraph& g) {
  json vs = json::array(), es = json::array();
  for (const auto& v : g.vertices) vs.push_back({{"id", v.id}, {"kind", std::string(to_string(v.kind))}});
  for (const auto& e : g.edges) {
    json ej{{"id", e.id}, {"a", port_text(g, e.a)}, {"b", port_text(g, e.b)}, {"gleam_twice", e.gleam.twice_value()}};
    if (e.flip) ej["flip"] = true;
    es.push_back(ej);
  }
  return json{{"vertices", vs}, {"edges", es}};
}

json slope_json(const Slope& s) { return s.to_string(); }

json verdict_json(const FillingVerdict& v) {
  json j{{"yields", v.yields}};
  j["h"] = v.h ? json(*v.h) : json(nullptr);
  j["rule"] = v.rule;
  j["necessary_only"] = v.necessary_only;
  return j;
}

std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(s);
      return {v, v};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--h", "expected an integer or lo..hi, got '" + s + "'");
  }
}

int parse_w(const std::string& s) {
  std::string t = s;
  if (!t.empty() && (t[0] == 'W' || t[0] == 'w')) t = t.substr(1);
  try {
    size_t pos = 0;
    const int w = std::stoi(t, &pos);
    if (pos == t.size() && w >= 1 && w <= 11) return w;
  } catch (const std::exception&) {
  }
  throw CLI::ValidationError("manifold", "expected W1..W11, got '" + s + "'");
}

std::map<std::string, int> parse_levels(const std::string& s) {
  std::map<std::string, int> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw DomainError("level entry '" + item + "' is not <vertex>=<level>");
    out[item.substr(0, eq)] = std::stoi(item.substr(eq + 1));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shadow and 4-manifold invariant calculator"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Print the report as JSON")->trigger_on_parse();

  Report rep;
  std::function<void()> action;

  // validate
  auto* validate = app.add_subcommand("validate", "Check a decorated graph file");
  std::string graph_path;
  validate->add_option("graph", graph_path, "Decorated graph file")->required();
  validate->add_flag("--json", as_json);
  validate->callback([&] {
    action = [&] {
      const auto g = load_graph_file(graph_path);
      rep.body = graph_json(g);
      json vs = json::array();
      for (const auto& v : validate_graph(g)) vs.push_back(violation_json(v));
      rep.failed = !vs.empty();
      rep.body["violations"] = vs;
      rep.body["connected_complexity"] = connected_complexity(g);
    };
  });

  // invariants
  auto* inv = app.add_subcommand("invariants", "H2, intersection form, signature and spin of a shadow");
  inv->add_option("graph", graph_path, "Decorated graph file")->required();
  bool show_double = false;
  int double_h = 0;
  inv->add_flag("--double", show_double, "Use the shadow of the double instead of the graph");
  inv->add_option("--blowups", double_h, "Signed number of blow-ups for --double");
  inv->add_flag("--json", as_json);
  inv->callback([&] {
    action = [&] {
      auto g = load_graph_file(graph_path);
      json vs = json::array();
      for (const auto& v : validate_graph(g))
        if (!v.indeterminate) vs.push_back(violation_json(v));
      if (!vs.empty()) {
        rep.body["violations"] = vs;
        rep.failed = true;
        return;
      }
      if (show_double) g = shadow_of_double(g, double_h);
      const auto rs = reconstruct_regions(g);
      json regions = json::array();
      for (const auto& r : rs.regions)
        regions.push_back({{"gleam", r.gleam.to_string()},
                           {"parity", std::string(to_string(r.parity))},
                           {"closed", !r.touches_boundary},
                           {"orientable", r.orientable}});
      rep.body["regions"] = regions;
      const auto lat = h2_lattice(g, rs);
      const auto q = intersection_form(g, rs, lat);
      const auto spin = is_spin(g, rs);
      rep.body["rank"] = q.rank;
      rep.body["form"] = matrix_json(q.matrix);
      rep.body["signature"] = q.signature;
      rep.body["parity"] = q.parity == FormParity::even ? "even" : "odd";
      rep.body["nullity"] = q.nullity;
      rep.body["torsion"] = form_cokernel(q).torsion;
      rep.body["spin"] = to_string(spin.verdict);
      if (!spin.reason.empty()) rep.body["spin_reason"] = spin.reason;
      rep.body["connected_complexity"] = connected_complexity(g);
    };
  });

  // boundary
  auto* bnd = app.add_subcommand("boundary", "Pieces of the boundary 3-manifold; tree-with-levels checks");
  bnd->add_option("graph", graph_path, "Decorated graph file")->required();
  std::string levels_text, branch_base;
  bnd->add_option("--levels", levels_text, "Vertex levels as v=n,w=m,...");
  bnd->add_option("--branch", branch_base, "Branch torsion at this vertex (needs --levels)");
  bnd->add_flag("--json", as_json);
  bnd->callback([&] {
    action = [&] {
      const auto g = load_graph_file(graph_path);
      json pieces = json::array();
      for (const auto& p : fiber_pieces(g))
        pieces.push_back({{"vertex", p.vertex}, {"kind", std::string(to_string(p.kind))},
                          {"piece", p.descriptor.describe()}});
      rep.body["pieces"] = pieces;
      if (levels_text.empty()) return;
      TreeWithLevels t{g, parse_levels(levels_text), true};
      json lv = json::array();
      for (const auto& v : validate_tree_levels(t))
        lv.push_back({{"condition", v.condition}, {"subject", v.subject}, {"message", v.message}});
      rep.body["level_violations"] = lv;
      rep.failed = !lv.empty();
      if (!branch_base.empty() && lv.empty()) {
        const auto bt = branch_torsion(t, branch_base);
        json trace = json::array();
        for (const auto& m : bt.trace) trace.push_back(m.describe());
        rep.body["branch"] = {{"base", branch_base}, {"q", bt.q}, {"line", format_plumbing_line(bt.line)},
                              {"trace", trace}, {"vertical_disc", bt.vertical_disc}};
      }
    };
  });

  // reduce-plumbing
  auto* red = app.add_subcommand("reduce-plumbing", "Reduce a plumbing line and name its boundary");
  std::string line_text;
  red->add_option("line", line_text, "Comma-separated integers")->required();
  red->add_flag("--json", as_json);
  red->callback([&] {
    action = [&] {
      const auto v = reduce_plumbing(parse_plumbing_line(line_text));
      json trace = json::array();
      for (const auto& m : v.trace) trace.push_back(m.describe());
      rep.body["verdict"] = to_string(v.tag);
      rep.body["det"] = v.det;
      rep.body["trace"] = trace;
      rep.body["reduced"] = format_plumbing_line(v.reduced);
    };
  });

  // lemma-case
  auto* lem = app.add_subcommand("lemma-case", "Which reduction case applies to a plumbing line");
  lem->add_option("line", line_text, "Comma-separated integers")->required();
  lem->add_flag("--json", as_json);
  lem->callback([&] {
    action = [&] {
      const auto line = parse_plumbing_line(line_text);
      const auto c = lemma_case(line);
      rep.body["det"] = plumbing_det(line);
      if (c) {
        rep.body["case"] = c->case_id;
        rep.body["symmetry"] = to_string(c->symmetry);
        rep.body["site"] = c->site;
      } else {
        rep.body["case"] = nullptr;
        rep.body["symmetry"] = nullptr;
      }
    };
  });

  // dehn
  auto* dehn = app.add_subcommand("dehn", "Homology and classification of a Dehn filling of W1..W11");
  std::string w_text, slopes_text;
  bool borromean = false;
  dehn->add_option("manifold", w_text, "W1..W11 (ignored with --borromean)");
  dehn->add_option("--slopes", slopes_text, "Comma-separated slopes, e.g. 1/0,3/1")->required();
  dehn->add_flag("--borromean", borromean, "Surgery on the Borromean rings instead");
  dehn->add_flag("--json", as_json);
  dehn->callback([&] {
    action = [&] {
      const auto slopes = parse_slopes(slopes_text);
      json sl = json::array();
      for (const auto& s : slopes) sl.push_back(slope_json(s));
      if (borromean) {
        rep.body["manifold"] = "borromean";
        rep.body["slopes"] = sl;
        rep.body["verdict"] = verdict_json(borromean_surgery_yields(slopes));
        return;
      }
      if (w_text.empty()) throw CLI::ValidationError("manifold", "a manifold W1..W11 is required");
      const int w = parse_w(w_text);
      rep.body["manifold"] = "W" + std::to_string(w);
      rep.body["slopes"] = sl;
      const auto verdict = filling_yields(w, slopes);
      if (w == 3 || w == 4 || w == 5 || w == 6 || w == 7 || w == 9)
        rep.body["h1"] = h1_json(h1_filling(w, slopes));
      else
        rep.body["h1"] = nullptr;
      rep.body["verdict"] = verdict_json(verdict);
    };
  });

  // cusp
  auto* cusp = app.add_subcommand("cusp", "Short slopes on a maximal cusp section");
  int cusp_length = 1;
  std::string cusp_parity = "even";
  double bound = 6.0;
  bool square = false;
  cusp->add_option("--length", cusp_length, "Length of the boundary curve");
  cusp->add_option("--parity", cusp_parity, "even or odd")->check(CLI::IsMember({"even", "odd"}));
  cusp->add_option("--bound", bound, "Length bound");
  cusp->add_flag("--w11-square", square, "Use the square cusp of W11 in chain-link coordinates");
  cusp->add_flag("--json", as_json);
  cusp->callback([&] {
    action = [&] {
      const CuspLattice L =
          square ? w11_square_cusp() : cusp_lattice(cusp_length, cusp_parity == "odd" ? Parity::odd : Parity::even);
      auto rat = [](const Rational& r) {
        std::ostringstream s;
        s << r;
        return s.str();
      };
      rep.body["u"] = {rat(L.u.first), rat(L.u.second)};
      rep.body["v"] = {rat(L.v.first), rat(L.v.second)};
      json out = json::array();
      for (const auto& s : short_slopes(L, bound))
        out.push_back({{"slope", s.slope.to_string()}, {"length_squared", rat(s.length_squared)},
                       {"length", s.length}});
      rep.body["slopes"] = out;
    };
  });

  // blocks
  auto* blocks = app.add_subcommand("blocks", "Block catalogs");
  auto* blocks_list = blocks->add_subcommand("list", "List the blocks of a set");
  blocks->require_subcommand(1);
  std::string set_text = "S1";
  blocks_list->add_option("--set", set_text, "S0 or S1")->check(CLI::IsMember({"S0", "S1"}));
  blocks_list->add_flag("--json", as_json);
  blocks->add_flag("--json", as_json);
  blocks_list->callback([&] {
    action = [&] {
      json out = json::array();
      for (const auto& b : block_catalog(parse_block_set(set_text))) {
        json bj{{"name", b.name},     {"set", b.set},   {"boundary_components", b.boundary_components},
                {"chi", b.chi},       {"sigma", b.sigma}, {"mirrorable", b.mirrorable},
                {"origin", b.origin}};
        bj["alias_of"] = b.alias_of ? json(*b.alias_of) : json(nullptr);
        out.push_back(bj);
      }
      rep.body["set"] = set_text;
      rep.body["blocks"] = out;
    };
  });

  // assemble
  auto* asmb = app.add_subcommand("assemble", "chi and sigma of a block assembly");
  std::string asm_path, sum_with;
  asmb->add_option("file", asm_path, "Assembly description file")->required();
  asmb->add_option("--connect-sum", sum_with, "Second assembly; report the connected sum");
  asmb->add_flag("--json", as_json);
  asmb->callback([&] {
    action = [&] {
      Assembly a = load_assembly_file(asm_path);
      if (!sum_with.empty()) a = connected_sum(a, load_assembly_file(sum_with));
      const auto problems = matching_problems(a);
      if (!problems.empty()) {
        rep.body["violations"] = problems;
        rep.failed = true;
        return;
      }
      const auto cs = chi_sigma(a);
      json names = json::array();
      for (const auto& b : a.blocks) names.push_back(b.block);
      rep.body["blocks"] = names;
      rep.body["h"] = a.h();
      rep.body["chi"] = cs.chi;
      rep.body["sigma"] = cs.sigma;
      if (!sum_with.empty()) rep.body["assembly"] = serialize_assembly(a);
    };
  });

  // enumerate
  auto* en = app.add_subcommand("enumerate", "Census of closed assemblies");
  CensusOptions copt;
  std::string h_text = "0", out_path;
  bool resume = false;
  en->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
  en->add_option("--set", set_text, "S0 or S1")->check(CLI::IsMember({"S0", "S1"}));
  en->add_option("--max", copt.max_blocks, "Maximum number of blocks")->check(CLI::PositiveNumber);
  en->add_option("--h", h_text, "h or lo..hi");
  en->add_option("--out", out_path, "Output file (JSON lines)")->required();
  en->add_option("--jobs", copt.jobs, "Worker threads")->check(CLI::PositiveNumber);
  en->add_flag("--resume", resume, "Skip keys already present in the output file");
  en->add_flag("--json", as_json);
  en->callback([&] {
    action = [&] {
      copt.set = parse_block_set(set_text);
      std::tie(copt.h_lo, copt.h_hi) = parse_range(h_text);
      const auto run = write_census(copt, out_path, resume);
      rep.body["out"] = out_path;
      rep.body["written"] = run.written;
      rep.body["skipped"] = run.skipped;
    };
  });

  // presentation
  auto* pres = app.add_subcommand("presentation", "Group presentations and connected-complexity bounds");
  std::string family;
  std::vector<int> params;
  std::vector<std::string> relators;
  int gens = 0, stab = 0;
  bool report = false;
  pres->add_option("family", family, "cyclic, dihedral, dyck, coxeter or custom")
      ->required()
      ->check(CLI::IsMember({"cyclic", "dihedral", "dyck", "coxeter", "custom"}));
  pres->add_option("params", params, "Family parameters");
  pres->add_option("--gens", gens, "Generator count for custom");
  pres->add_option("--rel", relators, "Relator word for custom (repeatable)");
  pres->add_option("--stabilize", stab, "Number of stabilizations")->check(CLI::NonNegativeNumber);
  pres->add_flag("--report", report, "Include deficiency, chi and bound (always on)");
  pres->add_flag("--json", as_json);
  pres->callback([&] {
    action = [&] {
      const std::map<std::string, size_t> arity{{"cyclic", 1}, {"dihedral", 1}, {"dyck", 3}, {"coxeter", 4}, {"custom", 0}};
      if (params.size() != arity.at(family))
        throw CLI::ValidationError("params", family + " takes " + std::to_string(arity.at(family)) + " parameters");
      Presentation p;
      if (family == "cyclic") p = cyclic(params[0]);
      if (family == "dihedral") p = dihedral(params[0]);
      if (family == "dyck") p = von_dyck(params[0], params[1], params[2]);
      if (family == "coxeter") p = coxeter(params[0], params[1], params[2], params[3]);
      if (family == "custom") {
        std::vector<Word> ws;
        for (const auto& r : relators) ws.push_back(parse_word(r));
        p = Presentation(gens, ws);
      }
      for (int i = 0; i < stab; ++i) p = stabilize(p);
      json rel = json::array();
      for (const auto& w : p.relators) rel.push_back(format_word(w));
      const auto c = cstar_upper_bound(p);
      rep.body["generators"] = p.generators;
      rep.body["relators"] = rel;
      rep.body["deficiency"] = deficiency(p);
      rep.body["chi_boundary"] = chi_of_boundary_thickening(p);
      rep.body["cstar_bound"] = to_string(c.bound);
      if (!c.family.empty()) rep.body["family"] = c.family;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  int code = 0;
  try {
    action();
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    rep.body = json{{"error", {{"kind", dynamic_cast<const DataMissing*>(&e) ? "data-missing" : "domain"},
                               {"message", e.what()}}}};
    rep.failed = true;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    rep.body = json{{"error", {{"kind", "overflow"}, {"message", e.what()}}}};
    rep.failed = true;
  }
  if (rep.failed) code = 1;
  if (as_json)
    std::cout << rep.body.dump(2) << '\n';
  else
    print_text(rep.body, 0, std::cout);
  return code;
}

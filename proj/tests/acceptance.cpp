#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "shadowcalc/assembly.hpp"
#include "shadowcalc/blocks.hpp"
#include "shadowcalc/census.hpp"
#include "shadowcalc/cusp.hpp"
#include "shadowcalc/dehn.hpp"
#include "shadowcalc/lattice.hpp"
#include "shadowcalc/presentation.hpp"
#include "shadowcalc/regions.hpp"
#include "shadowcalc/sweeps.hpp"

using namespace shadow;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int n, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_seconds > 0 && secs > limit_seconds) {
    o.pass = false;
    o.detail += " (over time limit)";
  }
  if (!o.pass) ++failures;
  std::printf("%s %2d %s [%.2fs] %s\n", o.pass ? "PASS" : "FAIL", n, title, secs, o.detail.c_str());
  std::fflush(stdout);
}

std::string summary(const SweepResult& r) {
  std::ostringstream os;
  os << r.checked << " checked, " << r.failures << " failures";
  if (r.notes) os << ", " << r.notes << " noted";
  for (const auto& e : r.examples) os << "; " << e;
  return os.str();
}

Outcome from_sweep(const SweepResult& r) { return {r.ok() && r.checked > 0, summary(r)}; }

std::string join(const std::multiset<Rational>& s) {
  std::string out;
  for (const auto& x : s) out += (out.empty() ? "" : ",") + x.str();
  return "{" + out + "}";
}

struct GraphFacts {
  int regions = 0;
  bool all_gleams_zero = true;
  QuadraticFormSummary form;
  SpinVerdict spin = SpinVerdict::indeterminate;
};

GraphFacts facts(const std::string& file) {
  const auto g = load_graph_file(std::string(SHADOWCALC_DATA_DIR) + "/graphs/" + file);
  const auto rs = reconstruct_regions(g);
  GraphFacts f;
  f.regions = static_cast<int>(rs.regions.size());
  for (const auto& r : rs.regions) f.all_gleams_zero &= r.gleam.twice_value() == 0;
  f.form = intersection_form(g, rs, h2_lattice(g, rs));
  f.spin = is_spin(g, rs).verdict;
  return f;
}

Outcome shadow_invariants() {
  bool ok = true;
  std::string detail;
  const int gleams[] = {0, 1, -1};
  const char* files[] = {"sphere_g0.sg", "sphere_g1.sg", "sphere_gm1.sg"};
  for (int i = 0; i < 3; ++i) {
    const auto f = facts(files[i]);
    const bool spin_want = gleams[i] == 0;
    const bool good = f.form.matrix.rows() == 1 && f.form.matrix(0, 0) == gleams[i] &&
                      (f.spin == SpinVerdict::spin) == spin_want;
    ok &= good;
    detail += std::string(files[i]) + " " + f.form.matrix.to_string() + " " + to_string(f.spin) + "; ";
  }
  {
    const auto f = facts("torus_meridian_longitude.sg");
    IntMatrix h(2, 2);
    h(0, 1) = h(1, 0) = 1;
    const bool good = f.form.matrix == h && f.form.signature == 0 && f.spin == SpinVerdict::spin;
    ok &= good;
    detail += "torus+m+l " + f.form.matrix.to_string() + " sig " + std::to_string(f.form.signature) + " " +
              to_string(f.spin) + (good ? "" : " (expected [[0,1],[1,0]])") + "; ";
  }
  {
    const auto f = facts("rp3xs1.sg");
    const bool good = f.regions == 3 && f.all_gleams_zero && f.spin == SpinVerdict::spin;
    ok &= good;
    detail += "rp3xs1 " + std::to_string(f.regions) + " regions " + to_string(f.spin);
  }
  return {ok, detail};
}

Outcome cusp_geometry() {
  const auto even = short_slopes(cusp_lattice(1, Parity::even), 2);
  std::multiset<Rational> got;
  for (const auto& s : even) got.insert(s.length_squared);
  const std::multiset<Rational> want = {1, 2, 2, 4, 4, 4};
  const bool lengths_ok = got == want;

  const auto sq = w11_square_cusp();
  const auto s = short_slopes(sq, 1.5);
  std::set<std::string> first, second;
  for (const auto& x : s) (x.length_squared == 1 ? first : second).insert(x.slope.to_string());
  const bool w11_ok = first == std::set<std::string>{"inf", "1/1"} && second == std::set<std::string>{"0/1", "2/1"};

  std::string detail = "even length-1 squared lengths " + join(got) + (lengths_ok ? "" : " (expected " + join(want) + ")");
  detail += "; W11 shortest {" + std::string(w11_ok ? "inf,1/1} second {0/1,2/1}" : "mismatch}");
  return {lengths_ok && w11_ok, detail};
}

Outcome borromean_table() {
  const Slope inf = Slope::infinity(), z(0, 1);
  long long checked = 0, bad = 0;
  auto expect = [&](const std::vector<Slope>& s, int h) {
    ++checked;
    const auto v = borromean_surgery_yields(s);
    if (!v.yields || v.h != h) ++bad;
  };
  expect({inf, z, z}, 2);
  for (int m = -5; m <= 5; ++m) {
    if (m == 0) continue;
    expect({inf, Slope(1, m), z}, 1);
    for (int n = -5; n <= 5; ++n)
      if (n != 0) expect({inf, Slope(1, m), Slope(1, n)}, 0);
  }
  ++checked;
  if (borromean_surgery_yields({z, z, z}).yields) ++bad;
  return {bad == 0, std::to_string(checked) + " checked, " + std::to_string(bad) + " wrong"};
}

Outcome assembly_bookkeeping() {
  std::mt19937_64 rng(20240917);
  const auto pool = distinct_blocks(BlockSet::S1);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> count(1, 4), gl(0, 3), hd(-3, 3);
  auto chi_of = [](const Assembly& a) {
    int s = 0;
    for (const auto& b : a.blocks) s += Catalog::active().find_block(b.block)->chi;
    return s;
  };
  std::vector<Assembly> made;
  while (made.size() < 100) {
    std::vector<BlockEntry> chosen;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) chosen.push_back(pool[pick(rng)]);
    Assembly a;
    if (!standard_assembly(chosen, a)) continue;
    for (auto& m : a.matches) m.gluing = gl(rng);
    a.add_h(hd(rng));
    made.push_back(a);
  }
  int bad = 0;
  for (const auto& a : made) {
    const auto cs = chi_sigma(a);
    if (cs.sigma != a.h() || cs.chi != chi_of(a) + std::abs(a.h())) ++bad;
  }
  int bad_sum = 0;
  for (size_t i = 0; i + 1 < made.size(); i += 2) {
    const auto s = chi_sigma(connected_sum(made[i], made[i + 1]));
    if (s.chi != chi_sigma(made[i]).chi + chi_sigma(made[i + 1]).chi - 2) ++bad_sum;
  }
  return {bad == 0 && bad_sum == 0, "100 assemblies, " + std::to_string(bad) + " wrong; 50 sums, " +
                                        std::to_string(bad_sum) + " wrong"};
}

Outcome presentation_families() {
  struct Row {
    const char* name;
    Presentation p;
    CStarBound want;
  };
  const std::vector<Row> rows = {{"C8", cyclic(8), CStarBound::zero},
                                 {"C12", cyclic(12), CStarBound::zero},
                                 {"D16", dihedral(8), CStarBound::zero},
                                 {"D(2,3,4)", von_dyck(2, 3, 4), CStarBound::one},
                                 {"(3,3|4,4)", coxeter(3, 3, 4, 4), CStarBound::one},
                                 {"C7", cyclic(7), CStarBound::unknown}};
  bool ok = true;
  std::string detail;
  for (const auto& r : rows) {
    Presentation p = r.p;
    bool row_ok = cstar_upper_bound(p).bound == r.want;
    for (int k = 0; k < 3; ++k) {
      p = stabilize(p);
      row_ok &= cstar_upper_bound(p).bound == r.want;
    }
    ok &= row_ok;
    detail += std::string(r.name) + "->" + to_string(cstar_upper_bound(r.p).bound) + (row_ok ? "" : "!") + " ";
  }
  return {ok, detail};
}

}  // namespace

int main() {
  report(1, "plumbing move soundness", 60, [] { return from_sweep(sweep_move_soundness(100000, 8, 5, 1, true)); });
  report(2, "lemma completeness", 300, [] { return from_sweep(sweep_lemma_completeness(6, 4, true)); });
  report(3, "reducer/oracle agreement", 0, [] { return from_sweep(sweep_reducer_agreement(6, 4, true)); });
  report(4, "determinant identities", 10, [] { return from_sweep(sweep_determinant_identities(1000, 4)); });
  report(5, "filling homology consistency", 60, [] { return from_sweep(sweep_dehn_grid(5, true)); });
  report(6, "Borromean table", 0, borromean_table);
  report(7, "cusp geometry", 0, cusp_geometry);
  report(8, "shadow invariants", 0, shadow_invariants);
  report(9, "assembly bookkeeping", 0, assembly_bookkeeping);
  report(10, "presentation families", 0, presentation_families);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

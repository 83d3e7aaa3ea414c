#include "shadowcalc/sweeps.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <functional>
#include <random>

#include "shadowcalc/dehn.hpp"
#include "shadowcalc/errors.hpp"
#include "shadowcalc/plumbing.hpp"

namespace shadow {

namespace {

constexpr size_t kKeepExamples = 5;

// Runs body(i) for every i in [0, n) and merges the outcomes.
struct Outcome {
  bool fail = false;
  bool note = false;
  std::string what;
};

SweepResult run_indexed(long long n, bool parallel, const std::function<Outcome(long long)>& body) {
  SweepResult r;
  r.checked = n;
  if (!parallel) {
    for (long long i = 0; i < n; ++i) {
      Outcome o = body(i);
      r.notes += o.note;
      if (o.fail) {
        ++r.failures;
        if (r.examples.size() < kKeepExamples) r.examples.push_back(o.what);
      }
    }
    return r;
  }
  long long failures = 0, notes = 0;
  // Failures are expected to be absent; the example list keeps the
  // lowest-index ones so it matches the serial run.
  std::vector<std::pair<long long, std::string>> found;
#pragma omp parallel
  {
    std::vector<std::pair<long long, std::string>> local;
#pragma omp for schedule(static) reduction(+ : failures, notes)
    for (long long i = 0; i < n; ++i) {
      Outcome o = body(i);
      notes += o.note;
      if (o.fail) {
        ++failures;
        if (local.size() < kKeepExamples) local.emplace_back(i, o.what);
      }
    }
#pragma omp critical
    found.insert(found.end(), local.begin(), local.end());
  }
  std::sort(found.begin(), found.end());
  for (size_t k = 0; k < found.size() && k < kKeepExamples; ++k) r.examples.push_back(found[k].second);
  r.failures = failures;
  r.notes = notes;
  return r;
}

// Sample i draws from its own generator so the stream does not depend on
// the thread schedule.
uint64_t mix(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct LineSpace {
  std::vector<long long> start;  // start[n] = first global index of length n
  int e_max = 0;
  LineSpace(int n_lo, int n_max, int e) : e_max(e) {
    start.assign(n_max + 2, 0);
    for (int n = 0; n <= n_max; ++n) start[n + 1] = start[n] + (n >= n_lo ? line_count(n, e) : 0);
  }
  long long total() const { return start.back(); }
  PlumbingLine at(long long i) const {
    int n = 0;
    while (start[n + 1] <= i) ++n;
    return line_at(n, e_max, i - start[n]);
  }
};

std::vector<Slope> slope_grid(int bound) {
  std::vector<Slope> out;
  for (int64_t q = 0; q <= bound; ++q)
    for (int64_t p = -bound; p <= bound; ++p) {
      if (q == 0 && p != 1) continue;
      if (std::gcd(p, q) != 1) continue;
      out.emplace_back(p, q);
    }
  return out;
}

}  // namespace

long long line_count(int n, int e_max) {
  long long c = 1;
  for (int i = 0; i < n; ++i) c *= 2 * e_max + 1;
  return c;
}

std::vector<int64_t> line_at(int n, int e_max, long long index) {
  std::vector<int64_t> line(n);
  const long long base = 2 * e_max + 1;
  for (int i = n - 1; i >= 0; --i) {
    line[i] = index % base - e_max;
    index /= base;
  }
  return line;
}

SweepResult sweep_move_soundness(long long samples, int n_max, int e_max, uint64_t seed, bool parallel) {
  return run_indexed(samples, parallel, [&](long long i) {
    std::mt19937_64 rng(mix(seed ^ mix(static_cast<uint64_t>(i))));
    std::uniform_int_distribution<int> len(1, n_max);
    std::uniform_int_distribution<int> ent(-e_max, e_max);
    PlumbingLine line(len(rng));
    for (auto& e : line) e = ent(rng);
    const int64_t d = std::llabs(plumbing_det(line));
    for (const auto& m : applicable_moves(line)) {
      const int64_t after = std::llabs(plumbing_det(apply_plumbing_move(line, m)));
      if (after != d)
        return Outcome{true, false, "(" + format_plumbing_line(line) + ") " + m.describe() + ": |det| " +
                                        std::to_string(d) + " -> " + std::to_string(after)};
    }
    return Outcome{};
  });
}

SweepResult sweep_lemma_completeness(int n_max, int e_max, bool parallel) {
  const LineSpace space(1, n_max, e_max);
  SweepResult r = run_indexed(space.total(), parallel, [&](long long i) {
    const PlumbingLine line = space.at(i);
    const int64_t d = plumbing_det(line);
    if (std::llabs(d) > 1) return Outcome{};
    if (lemma_case(line)) return Outcome{false, true, ""};
    return Outcome{true, false, "(" + format_plumbing_line(line) + ") det " + std::to_string(d) + " has no case"};
  });
  return r;  // notes = number of lines with det in {-1,0,1}
}

SweepResult sweep_reducer_agreement(int n_max, int e_max, bool parallel) {
  const LineSpace space(0, n_max, e_max);
  return run_indexed(space.total(), parallel, [&](long long i) {
    const PlumbingLine line = space.at(i);
    try {
      const auto v = reduce_plumbing(line);
      const int64_t d = plumbing_det(line);
      const bool ok = (v.tag == BoundaryTag::S3) == (std::llabs(d) == 1) &&
                      (v.tag == BoundaryTag::S2xS1) == (d == 0) && v.det == d;
      if (!ok) return Outcome{true, false, "(" + format_plumbing_line(line) + ") verdict " + to_string(v.tag)};
    } catch (const InvariantBreach& e) {
      return Outcome{true, false, e.what()};
    }
    return Outcome{};
  });
}

SweepResult sweep_dehn_grid(int bound, bool parallel) {
  const auto grid = slope_grid(bound);
  const long long g = static_cast<long long>(grid.size());
  const long long per_w = g * g;
  return run_indexed(5 * per_w, parallel, [&](long long i) {
    const int w = 3 + static_cast<int>(i / per_w);
    const long long j = i % per_w;
    const std::vector<Slope> s = {grid[j / g], grid[j % g]};
    const auto verdict = filling_yields(w, s);
    const auto h1 = h1_filling(w, s);
    const std::string where = "W" + std::to_string(w) + " (" + s[0].to_string() + "," + s[1].to_string() + ")";
    if (verdict.yields) {
      if (!verdict.h || !h1.torsion_free() || h1.rank != *verdict.h)
        return Outcome{true, false, where + ": yields but H1 = " + h1.to_string()};
      return Outcome{};
    }
    return Outcome{false, h1.torsion_free(), ""};
  });
}

SweepResult sweep_determinant_identities(long long samples, uint64_t seed) {
  SweepResult r;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int64_t> val(-1000, 1000);
  auto fail = [&](const std::string& s) {
    ++r.failures;
    if (r.examples.size() < kKeepExamples) r.examples.push_back(s);
  };
  for (long long i = 0; i < samples; ++i) {
    std::vector<std::pair<int64_t, int64_t>> pq(3);
    for (auto& x : pq) x = {val(rng), val(rng)};
    const int64_t p1 = pq[0].first, q1 = pq[0].second;
    const int64_t q2 = pq[1].second;
    const int64_t p3 = pq[2].first, q3 = pq[2].second;
    const int64_t d6 = filling_matrix_pq(6, {pq[0], pq[1]}).determinant();
    const int64_t d7 = filling_matrix_pq(7, {pq[0], pq[1]}).determinant();
    const int64_t d9 = filling_matrix_pq(9, pq).determinant();
    if (d6 != 16 * q1 * q2) fail("W6 at sample " + std::to_string(i));
    if (d7 != 25 * q1 * q2) fail("W7 at sample " + std::to_string(i));
    if (d9 != q2 * (4 * p1 * q3 + q1 * p3)) fail("W9 at sample " + std::to_string(i));
    r.checked += 3;
  }
  return r;
}

}  // namespace shadow

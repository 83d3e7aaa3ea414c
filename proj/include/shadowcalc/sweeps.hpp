#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace shadow {

struct SweepResult {
  long long checked = 0;
  long long failures = 0;
  std::vector<std::string> examples;  // first few failures
  // Cases worth reporting that are not failures.
  long long notes = 0;
  bool ok() const { return failures == 0; }
};

// Each sweep has a serial reference (parallel = false) and an OpenMP
// version; both visit the same inputs and return the same counts.

// |det| preserved by every applicable move on random lines, n in 1..n_max.
SweepResult sweep_move_soundness(long long samples, int n_max, int e_max, uint64_t seed, bool parallel);

// Every line of det in {-1,0,1} with 1 <= n <= n_max has a lemma case.
SweepResult sweep_lemma_completeness(int n_max, int e_max, bool parallel);

// Reducer verdict against the determinant for all lines with n <= n_max.
SweepResult sweep_reducer_agreement(int n_max, int e_max, bool parallel);

// W3..W7 over slopes with |p|,|q| <= bound: yields implies H1 = Z^h.
// `notes` counts non-yielding fillings with torsion-free H1.
SweepResult sweep_dehn_grid(int bound, bool parallel);

// Closed-form determinants of the W6, W7, W9 matrices at random integers.
SweepResult sweep_determinant_identities(long long samples, uint64_t seed);

// Lines of length n with entries in [-e_max, e_max], index -> line.
long long line_count(int n, int e_max);
std::vector<int64_t> line_at(int n, int e_max, long long index);

}  // namespace shadow

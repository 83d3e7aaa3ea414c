#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shadowcalc/int_matrix.hpp"
#include "shadowcalc/slope.hpp"
#include "shadowcalc/smith.hpp"

namespace shadow {

// Number of cusps of W1..W11.
int cusp_count(int w);

// Presentation matrix of H1 of the filling, for w in {3,4,5,6,7,9}.
IntMatrix filling_matrix(int w, const std::vector<Slope>& slopes);
// Same matrix with arbitrary integers substituted for each (p_i, q_i).
IntMatrix filling_matrix_pq(int w, const std::vector<std::pair<int64_t, int64_t>>& pq);

H1Group h1_filling(int w, const std::vector<Slope>& slopes);

// The chain of elementary transformations displayed for W5, applied to the
// filling matrix. Stops early when the side condition (p2 = +-1 mod 3) fails.
struct W5Pipeline {
  std::vector<IntMatrix> stages;
  bool completed = false;
};
W5Pipeline w5_transform_pipeline(const Slope& alpha, const Slope& beta);

struct FillingVerdict {
  bool yields = false;
  std::optional<int> h;
  std::string rule;
  // The statement only excludes: yields=true means "not excluded".
  bool necessary_only = false;
};

FillingVerdict filling_yields(int w, const std::vector<Slope>& slopes);

// Surgery on the Borromean rings giving #_h(S2xS1).
FillingVerdict borromean_surgery_yields(const std::vector<Slope>& slopes);

}  // namespace shadow

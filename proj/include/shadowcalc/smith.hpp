#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shadowcalc/int_matrix.hpp"

namespace shadow {

// Finitely generated abelian group Z^rank + Z/t1 + ... with t1 | t2 | ...
struct H1Group {
  int rank = 0;
  std::vector<int64_t> torsion;

  bool torsion_free() const { return torsion.empty(); }
  bool operator==(const H1Group&) const = default;
  std::string to_string() const;
};

struct SmithResult {
  IntMatrix d;  // diagonal, nonnegative, divisibility chain
  IntMatrix u;  // rows x rows, unimodular
  IntMatrix v;  // cols x cols, unimodular
  int rank = 0; // number of nonzero diagonal entries
  H1Group cokernel;  // Z^rows / image
};

// u * m * v == d.
SmithResult smith_normal_form(const IntMatrix& m);

// Integral basis of {x : m x = 0}, one basis vector per row of the result.
IntMatrix integer_kernel(const IntMatrix& m);

}  // namespace shadow

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "shadowcalc/int_matrix.hpp"
#include "shadowcalc/smith.hpp"

using namespace shadow;

namespace {

// Determinantal divisors: d_k = gcd of all k x k minors. The invariant
// factors are d_k / d_(k-1), an oracle independent of the elimination.
std::vector<int64_t> invariant_factors_by_minors(const IntMatrix& m) {
  const int r = m.rows(), c = m.cols();
  std::vector<int64_t> d = {1};
  for (int k = 1; k <= std::min(r, c); ++k) {
    int64_t g = 0;
    std::vector<int> rs(k), cs(k);
    std::vector<bool> rsel(r, false), csel(c, false);
    std::fill(rsel.begin(), rsel.begin() + k, true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + k, true);
      do {
        IntMatrix sub(k, k);
        int a = 0;
        for (int i = 0; i < r; ++i) {
          if (!rsel[i]) continue;
          int b = 0;
          for (int j = 0; j < c; ++j)
            if (csel[j]) sub(a, b++) = m(i, j);
          ++a;
        }
        g = std::gcd(g, sub.determinant());
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
    if (g == 0) break;
    d.push_back(g);
  }
  std::vector<int64_t> f;
  for (size_t k = 1; k < d.size(); ++k) f.push_back(d[k] / d[k - 1]);
  return f;
}

}  // namespace

TEST_CASE("known Smith forms") {
  const IntMatrix m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  const auto s = smith_normal_form(m);
  CHECK(s.d(0, 0) == 2);
  CHECK(s.d(1, 1) == 6);
  CHECK(s.d(2, 2) == 12);
  CHECK(s.cokernel.to_string() == "Z/2 + Z/6 + Z/12");

  const auto z = smith_normal_form(IntMatrix(2, 2));
  CHECK(z.cokernel.rank == 2);
  CHECK(z.cokernel.to_string() == "Z^2");

  const auto u = smith_normal_form(IntMatrix{{1, 0}, {0, 1}});
  CHECK(u.cokernel.to_string() == "0");
}

TEST_CASE("transforms satisfy u m v = d and invariants match minors") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> val(-6, 6), dim(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    IntMatrix m(dim(rng), dim(rng));
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) m(i, j) = val(rng);
    const auto s = smith_normal_form(m);
    REQUIRE(s.u * m * s.v == s.d);
    CHECK(std::llabs(s.u.determinant()) == 1);
    CHECK(std::llabs(s.v.determinant()) == 1);
    std::vector<int64_t> diag;
    for (int k = 0; k < std::min(m.rows(), m.cols()); ++k)
      if (s.d(k, k) != 0) diag.push_back(s.d(k, k));
    for (size_t k = 1; k < diag.size(); ++k) CHECK(diag[k] % diag[k - 1] == 0);
    CHECK(diag == invariant_factors_by_minors(m));
    CHECK(s.rank == static_cast<int>(diag.size()));
  }
}

TEST_CASE("integer kernel is saturated and annihilated") {
  const IntMatrix m{{1, 1, 1}, {1, 1, -1}};
  const auto k = integer_kernel(m);
  REQUIRE(k.rows() == 1);
  CHECK(k(0, 0) == -k(0, 1));
  CHECK(k(0, 2) == 0);
  CHECK(std::llabs(k(0, 0)) == 1);

  std::mt19937 rng(3);
  std::uniform_int_distribution<int> val(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix a(2, 4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 4; ++j) a(i, j) = val(rng);
    const auto ker = integer_kernel(a);
    CHECK(ker.rows() == 4 - smith_normal_form(a).rank);
    if (ker.rows() == 0) continue;
    const auto prod = a * ker.transpose();
    CHECK(prod == IntMatrix(2, ker.rows()));
    // A primitive sublattice has cokernel free of torsion in Z^4.
    CHECK(smith_normal_form(ker.transpose()).cokernel.torsion_free());
  }
}

TEST_CASE("checked arithmetic detects overflow") {
  CHECK_THROWS_AS(checked_mul(INT64_MAX / 2 + 1, 2), std::overflow_error);
  CHECK_THROWS_AS(checked_add(INT64_MAX, 1), std::overflow_error);
  CHECK(checked_sub(-5, 7) == -12);
}

TEST_CASE("H1Group formatting") {
  H1Group g;
  g.rank = 2;
  g.torsion = {3};
  CHECK(g.to_string() == "Z^2 + Z/3");
  H1Group z;
  z.rank = 1;
  CHECK(z.to_string() == "Z");
}

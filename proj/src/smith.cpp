#include "shadowcalc/smith.hpp"

#include <cstdlib>

namespace shadow {

std::string H1Group::to_string() const {
  std::string s;
  if (rank > 0) s = rank == 1 ? "Z" : "Z^" + std::to_string(rank);
  for (auto t : torsion) s += (s.empty() ? "" : " + ") + ("Z/" + std::to_string(t));
  return s.empty() ? "0" : s;
}

SmithResult smith_normal_form(const IntMatrix& m) {
  const int R = m.rows();
  const int C = m.cols();
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(R);
  IntMatrix v = IntMatrix::identity(C);

  auto row_add = [&](int i, int j, int64_t k) {
    d.add_row(i, j, k);
    u.add_row(i, j, k);
  };
  auto col_add = [&](int i, int j, int64_t k) {
    d.add_col(i, j, k);
    v.add_col(i, j, k);
  };

  int t = 0;
  for (; t < R && t < C; ++t) {
    while (true) {
      // Smallest nonzero |entry| in the trailing block, first in row-major order.
      int pi = -1, pj = -1;
      int64_t best = 0;
      for (int i = t; i < R; ++i)
        for (int j = t; j < C; ++j) {
          const int64_t a = std::llabs(d(i, j));
          if (a != 0 && (best == 0 || a < best)) {
            best = a;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) goto done;
      d.swap_rows(t, pi);
      u.swap_rows(t, pi);
      d.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool clean = true;
      for (int i = t + 1; i < R; ++i) {
        if (d(i, t) == 0) continue;
        row_add(i, t, -(d(i, t) / d(t, t)));
        if (d(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < C; ++j) {
        if (d(t, j) == 0) continue;
        col_add(j, t, -(d(t, j) / d(t, t)));
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the whole trailing block.
      int bad = -1;
      for (int i = t + 1; i < R && bad < 0; ++i)
        for (int j = t + 1; j < C; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      row_add(t, bad, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
done:
  SmithResult res{d, u, v, 0, {}};
  for (int i = 0; i < R && i < C; ++i) {
    if (d(i, i) == 0) break;
    ++res.rank;
    if (d(i, i) > 1) res.cokernel.torsion.push_back(d(i, i));
  }
  res.cokernel.rank = R - res.rank;
  return res;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const auto s = smith_normal_form(m);
  const int C = m.cols();
  IntMatrix k(C - s.rank, C);
  for (int r = 0; r < C - s.rank; ++r)
    for (int j = 0; j < C; ++j) k(r, j) = s.v(j, s.rank + r);
  return k;
}

}  // namespace shadow

#include "shadowcalc/lattice.hpp"

#include <cstdlib>

#include <boost/multiprecision/cpp_int.hpp>

#include "shadowcalc/errors.hpp"

namespace shadow {

namespace {

using Rational = boost::multiprecision::cpp_rational;

int singular_rows(const DecoratedGraph& g, const Catalog& cat, std::vector<int>& row_offset) {
  row_offset.assign(g.vertices.size(), 0);
  int rows = 0;
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    row_offset[v] = rows;
    rows += cat.piece(g.vertices[v].kind).singular_edges;
  }
  return rows;
}

// Row-reduce over GF(2); returns a basis of the null space as 0/1 rows.
std::vector<std::vector<int>> gf2_kernel(std::vector<std::vector<int>> a, int cols) {
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < static_cast<int>(a.size()); ++c) {
    int p = r;
    while (p < static_cast<int>(a.size()) && a[p][c] == 0) ++p;
    if (p == static_cast<int>(a.size())) continue;
    std::swap(a[p], a[r]);
    for (int i = 0; i < static_cast<int>(a.size()); ++i)
      if (i != r && a[i][c])
        for (int j = 0; j < cols; ++j) a[i][j] ^= a[r][j];
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<int>> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<int> x(cols, 0);
    x[f] = 1;
    for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i)
      if (a[i][f]) x[pivot_col[i]] = 1;
    basis.push_back(x);
  }
  return basis;
}

}  // namespace

IntMatrix region_incidence(const DecoratedGraph& g, const RegionSet& rs, bool mod2, const Catalog& cat) {
  std::vector<int> row_offset;
  const int rows = singular_rows(g, cat, row_offset);
  IntMatrix m(rows, static_cast<int>(rs.regions.size()));
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
    const auto& entry = cat.piece(g.vertices[v].kind);
    if (entry.singular_edges == 0) continue;
    for (int p = 0; p < entry.port_count(); ++p) {
      const auto& inc = entry.ports[p].incidence;
      if (!inc)
        throw DataMissing("incidence data for " + std::string(to_string(entry.kind)) + " is unresolved in the catalog");
      const int reg = rs.region_of[v][p];
      const auto& region = rs.regions[reg];
      int sign = 1;
      for (size_t k = 0; k < region.members.size(); ++k)
        if (region.members[k] == PieceRegion{v, p}) sign = region.orientation[k];
      for (int s = 0; s < entry.singular_edges; ++s) {
        int64_t& cell = m(row_offset[v] + s, reg);
        if (mod2)
          cell = (cell + std::abs((*inc)[s])) % 2;
        else
          cell += sign * (*inc)[s];
      }
    }
  }
  return m;
}

H2Lattice h2_lattice(const DecoratedGraph& g, const RegionSet& rs, const Catalog& cat) {
  const int n = static_cast<int>(rs.regions.size());
  H2Lattice out;
  out.eligible.assign(n, false);
  for (int r = 0; r < n; ++r) {
    const auto& reg = rs.regions[r];
    if (reg.touches_boundary || !reg.orientable) continue;
    if (reg.parity == Parity::unresolved)
      throw DataMissing("region " + std::to_string(r) + " has unresolved parity; integral H2 not determined");
    out.eligible[r] = reg.parity == Parity::even;
  }
  const IntMatrix inc = region_incidence(g, rs, false, cat);
  // Restrict to eligible columns, then re-embed.
  std::vector<int> cols;
  for (int r = 0; r < n; ++r)
    if (out.eligible[r]) cols.push_back(r);
  IntMatrix sub(inc.rows(), static_cast<int>(cols.size()));
  for (int i = 0; i < inc.rows(); ++i)
    for (int j = 0; j < static_cast<int>(cols.size()); ++j) sub(i, j) = inc(i, cols[j]);
  const IntMatrix k = integer_kernel(sub);
  out.basis = IntMatrix(k.rows(), n);
  for (int b = 0; b < k.rows(); ++b)
    for (int j = 0; j < static_cast<int>(cols.size()); ++j) out.basis(b, cols[j]) = k(b, j);
  return out;
}

SignatureCount congruence_signature(const IntMatrix& m) {
  if (!m.is_symmetric()) throw DomainError("signature of a non-symmetric matrix");
  const int n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j);
  SignatureCount sc;
  int k = 0;
  auto swap_index = [&](int i, int j) {
    std::swap(a[i], a[j]);
    for (auto& row : a) std::swap(row[i], row[j]);
  };
  while (k < n) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (a[i][i] != 0) {
        p = i;
        break;
      }
    if (p < 0) {
      // No diagonal pivot: combine two indices with a nonzero off-diagonal entry.
      int pi = -1, pj = -1;
      for (int i = k; i < n && pi < 0; ++i)
        for (int j = i + 1; j < n; ++j)
          if (a[i][j] != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi < 0) break;
      for (int c = 0; c < n; ++c) a[pi][c] += a[pj][c];
      for (int r = 0; r < n; ++r) a[r][pi] += a[r][pj];
      p = pi;
    }
    swap_index(k, p);
    const Rational piv = a[k][k];
    for (int i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const Rational f = a[i][k] / piv;
      for (int c = k; c < n; ++c) a[i][c] -= f * a[k][c];
      for (int r = k; r < n; ++r) a[r][i] -= f * a[r][k];
    }
    (piv > 0 ? sc.positive : sc.negative)++;
    ++k;
  }
  sc.zero = n - sc.positive - sc.negative;
  return sc;
}

QuadraticFormSummary intersection_form(const DecoratedGraph&, const RegionSet& rs, const H2Lattice& lattice) {
  const int b = lattice.rank();
  const int n = lattice.basis.cols();
  for (int r = 0; r < n; ++r) {
    bool used = false;
    for (int i = 0; i < b; ++i) used = used || lattice.basis(i, r) != 0;
    if (used && !rs.regions[r].gleam.is_integral())
      throw DomainError("region " + std::to_string(r) + " carries weight but has gleam " +
                        rs.regions[r].gleam.to_string());
  }
  QuadraticFormSummary q;
  q.matrix = IntMatrix(b, b);
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < b; ++j) {
      int64_t s = 0;
      for (int r = 0; r < n; ++r)
        s = checked_add(s, checked_mul(checked_mul(lattice.basis(i, r), lattice.basis(j, r)),
                                       rs.regions[r].gleam.as_int()));
      q.matrix(i, j) = s;
    }
  const auto sc = congruence_signature(q.matrix);
  q.signature = sc.positive - sc.negative;
  q.rank = b;
  q.nullity = sc.zero;
  q.parity = FormParity::even;
  for (int i = 0; i < b; ++i)
    if (q.matrix(i, i) % 2 != 0) q.parity = FormParity::odd;
  return q;
}

std::string to_string(SpinVerdict s) {
  switch (s) {
    case SpinVerdict::spin: return "spin";
    case SpinVerdict::not_spin: return "not_spin";
    default: return "indeterminate";
  }
}

SpinReport is_spin(const DecoratedGraph& g, const RegionSet& rs, const Catalog& cat) {
  SpinReport rep;
  IntMatrix inc;
  try {
    inc = region_incidence(g, rs, true, cat);
  } catch (const DataMissing& e) {
    rep.reason = e.what();
    return rep;
  }
  // Closed regions only: a region meeting the boundary never lies in a cycle.
  std::vector<int> cols;
  for (int r = 0; r < static_cast<int>(rs.regions.size()); ++r)
    if (!rs.regions[r].touches_boundary) cols.push_back(r);
  std::vector<std::vector<int>> a(inc.rows(), std::vector<int>(cols.size()));
  for (int i = 0; i < inc.rows(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) a[i][j] = static_cast<int>(inc(i, cols[j]));
  const auto basis = gf2_kernel(a, static_cast<int>(cols.size()));
  rep.mod2_dimension = static_cast<int>(basis.size());
  if (basis.size() > 20) {
    rep.reason = "mod-2 cycle space too large to enumerate";
    return rep;
  }
  // The gleam sum is not linear in the presence of odd regions, so every
  // mod-2 cycle is evaluated, not only the basis.
  const uint64_t total = uint64_t{1} << basis.size();
  for (uint64_t mask = 1; mask < total; ++mask) {
    std::vector<int> x(cols.size(), 0);
    for (size_t b = 0; b < basis.size(); ++b)
      if (mask >> b & 1)
        for (size_t j = 0; j < cols.size(); ++j) x[j] ^= basis[b][j];
    int64_t twice = 0;
    for (size_t j = 0; j < cols.size(); ++j)
      if (x[j]) twice += rs.regions[cols[j]].gleam.twice_value();
    if (twice % 2 != 0) {
      rep.reason = "a mod-2 cycle has non-integral gleam sum";
      return rep;
    }
    if ((twice / 2) % 2 != 0) {
      rep.verdict = SpinVerdict::not_spin;
      return rep;
    }
  }
  rep.verdict = SpinVerdict::spin;
  return rep;
}

H1Group form_cokernel(const QuadraticFormSummary& q) { return smith_normal_form(q.matrix).cokernel; }

}  // namespace shadow

#include "shadowcalc/cusp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "shadowcalc/errors.hpp"

namespace shadow {

namespace {

Rational abs_r(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// Doubles are dyadic rationals, so this conversion is exact.
Rational bound_squared(double bound) {
  Rational b(bound);
  return b * b;
}

}  // namespace

Rational CuspLattice::area() const { return abs_r(u.first * v.second - u.second * v.first); }

CuspLattice cusp_lattice(int length, Parity parity) {
  if (length < 1) throw DomainError("cusp length must be positive");
  if (parity == Parity::unresolved) throw DomainError("cusp parity is unresolved");
  CuspLattice c;
  c.u = {Rational(length), Rational(parity == Parity::odd ? 1 : 0)};
  c.v = {Rational(0), Rational(2)};
  return c;
}

CuspLattice w11_square_cusp() {
  CuspLattice c;
  c.u = {Rational(1), Rational(-1)};
  c.v = {Rational(0), Rational(1)};
  return c;
}

std::vector<ShortSlope> short_slopes(const CuspLattice& L, double bound) {
  std::vector<ShortSlope> out;
  if (!(bound > 0)) throw DomainError("bound must be positive");
  const Rational det = L.area();
  if (det == 0) throw DomainError("degenerate cusp lattice");
  const Rational b2 = bound_squared(bound);

  auto norm2 = [](const std::pair<Rational, Rational>& w) { return w.first * w.first + w.second * w.second; };
  // |q| <= |x||v|/det and |p| <= |x||u|/det by Cramer's rule.
  const double dd = det.convert_to<double>();
  const auto qmax = static_cast<int64_t>(std::floor(bound * std::sqrt(norm2(L.v).convert_to<double>()) / dd)) + 1;
  const auto pmax = static_cast<int64_t>(std::floor(bound * std::sqrt(norm2(L.u).convert_to<double>()) / dd)) + 1;

  for (int64_t q = 0; q <= qmax; ++q) {
    for (int64_t p = -pmax; p <= pmax; ++p) {
      if (q == 0 && p <= 0) continue;  // one representative per sign pair
      if (std::gcd(q, p) != 1) continue;
      const std::pair<Rational, Rational> x{q * L.u.first + p * L.v.first, q * L.u.second + p * L.v.second};
      const Rational n2 = norm2(x);
      if (n2 > b2) continue;
      ShortSlope s;
      s.slope = Slope(p, q);
      s.length_squared = n2;
      s.length = std::sqrt(n2.convert_to<double>());
      s.q = q;
      s.p = p;
      out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end(), [](const ShortSlope& a, const ShortSlope& b) {
    if (a.length_squared != b.length_squared) return a.length_squared < b.length_squared;
    if (a.q != b.q) return a.q < b.q;
    return a.p < b.p;
  });
  return out;
}

}  // namespace shadow

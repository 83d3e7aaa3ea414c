#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <utility>
#include <vector>

#include "shadowcalc/catalog.hpp"
#include "shadowcalc/slope.hpp"

namespace shadow {

using Rational = boost::multiprecision::cpp_rational;

// Flat torus spanned by a horizontal generator u and a vertical generator v.
// The class of slope p/q is q*u + p*v.
struct CuspLattice {
  std::pair<Rational, Rational> u;
  std::pair<Rational, Rational> v;
  Rational area() const;
};

// Cusp above a boundary annulus of the given length, by the parity of the
// adjacent region. Throws DomainError for unresolved parity or length < 1.
CuspLattice cusp_lattice(int length, Parity parity);

// The square cusp of W11 in chain-link coordinates.
CuspLattice w11_square_cusp();

struct ShortSlope {
  Slope slope;
  Rational length_squared;
  double length = 0.0;
  // Coefficients of the representative q*u + p*v  (q >= 0).
  int64_t q = 0;
  int64_t p = 0;
};

// Every primitive class up to sign with length <= bound, sorted by length.
std::vector<ShortSlope> short_slopes(const CuspLattice& lattice, double bound = 6.0);

}  // namespace shadow

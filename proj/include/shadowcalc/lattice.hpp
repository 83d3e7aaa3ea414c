#pragma once

#include <string>
#include <vector>

#include "shadowcalc/int_matrix.hpp"
#include "shadowcalc/regions.hpp"
#include "shadowcalc/smith.hpp"

namespace shadow {

struct H2Lattice {
  // Rows are basis vectors, columns are regions (same order as RegionSet).
  IntMatrix basis;
  // Regions allowed to carry nonzero integral weight: closed, orientable, even.
  std::vector<bool> eligible;
  int rank() const { return basis.rows(); }
};

// Region-by-singular-edge incidence, rows = singular edges of all pieces,
// columns = regions. Signs follow the union-find orientations; with
// `mod2` the absolute multiplicities are reduced mod 2 instead.
IntMatrix region_incidence(const DecoratedGraph& g, const RegionSet& rs, bool mod2,
                           const Catalog& cat = Catalog::active());

// Throws DataMissing when a piece on the singular set has unknown incidence
// data, or a region that could carry weight has unresolved parity.
H2Lattice h2_lattice(const DecoratedGraph& g, const RegionSet& rs, const Catalog& cat = Catalog::active());

enum class FormParity { even, odd };

struct QuadraticFormSummary {
  IntMatrix matrix;
  int signature = 0;
  FormParity parity = FormParity::even;
  int rank = 0;     // size of the basis
  int nullity = 0;  // dimension of the radical
};

// Signature of a symmetric integer matrix by exact rational congruence.
struct SignatureCount {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};
SignatureCount congruence_signature(const IntMatrix& m);

// Throws DomainError if a region with nonzero weight has a non-integral gleam.
QuadraticFormSummary intersection_form(const DecoratedGraph& g, const RegionSet& rs, const H2Lattice& lattice);

enum class SpinVerdict { spin, not_spin, indeterminate };
std::string to_string(SpinVerdict s);

struct SpinReport {
  SpinVerdict verdict = SpinVerdict::indeterminate;
  int mod2_dimension = 0;
  std::string reason;
};

SpinReport is_spin(const DecoratedGraph& g, const RegionSet& rs, const Catalog& cat = Catalog::active());

// Discriminant group of the form: cokernel of its matrix.
H1Group form_cokernel(const QuadraticFormSummary& q);

}  // namespace shadow

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shadowcalc/half_integer.hpp"
#include "shadowcalc/plumbing.hpp"

namespace shadow {

// Portion types of an H-shaped tree portion A - C1 - ... - Ck - B.
// Left end A: a b c d g h i j (and e, an empty end).
// Right end B: e f k l.
// Middle C: F D E J1 J2.
enum class PortionType { a, b, c, d, e, f, g, h, i, j, k, l, F, D, E, J1, J2 };

std::string to_string(PortionType t);
std::optional<PortionType> parse_portion_type(const std::string& s);

enum class PortionRole { left, right, middle };

struct Portion {
  PortionType type = PortionType::e;
  int64_t q = 0;  // branch torsion, used by d f j l E
  int sign = 1;   // -1 flips the whole contribution (entries and offsets)
};

struct HPortion {
  Portion left;
  std::vector<Portion> middle;
  Portion right;
  // joins[0] sits between left and the first middle portion (or right);
  // size must be middle.size() + 1.
  std::vector<HalfInteger> joins;
};

struct PlumbingExtraction {
  PlumbingLine line;
  bool complete = true;
  // Set when the line had to stop at a join whose offset is not known.
  std::string stop_reason;
  // (E) with |q| <= 1 and (d f j l) with q == 0 are simplifiable; noted, not rejected.
  std::vector<std::string> flags;
};

// Entries contributed by a portion in the given role.
PlumbingLine portion_entries(const Portion& p, PortionRole role);

// Throws DomainError if a portion type is used in a role it cannot occupy,
// or if a join becomes non-integral.
PlumbingExtraction extract_plumbing(const HPortion& h);

}  // namespace shadow

#include "shadowcalc/contributions.hpp"

#include <array>
#include <cstdlib>

#include "shadowcalc/errors.hpp"

namespace shadow {

namespace {

constexpr std::array<const char*, 17> kNames = {"a", "b", "c", "d", "e", "f", "g", "h", "i",
                                                "j", "k", "l", "F", "D", "E", "J1", "J2"};

bool allowed(PortionType t, PortionRole r) {
  using T = PortionType;
  switch (r) {
    case PortionRole::left:
      return t == T::a || t == T::b || t == T::c || t == T::d || t == T::e || t == T::g || t == T::h ||
             t == T::i || t == T::j;
    case PortionRole::right:
      return t == T::e || t == T::f || t == T::k || t == T::l;
    case PortionRole::middle:
      return t == T::F || t == T::D || t == T::E || t == T::J1 || t == T::J2;
  }
  return false;
}

// Half-integer shift that a portion adds to the join next to it, in twice
// units, for the table orientation (sign +1). Read off the join values of
// the case analysis, e.g. (c)+(k) joins as x+1, (g)+(e) as x+1/2.
int left_end_offset_twice(PortionType t) {
  using T = PortionType;
  switch (t) {
    case T::c: case T::g: case T::h: return 1;
    case T::d: case T::i: case T::j: return -1;
    default: return 0;  // a b e
  }
}

int right_end_offset_twice(PortionType t) {
  using T = PortionType;
  switch (t) {
    case T::k: return 1;
    case T::f: case T::l: return -1;
    default: return 0;  // e
  }
}

// Offset a middle portion adds to the join on its left.
int middle_left_offset_twice(PortionType t) {
  using T = PortionType;
  switch (t) {
    case T::D: return 2;
    case T::E: return 1;
    case T::J2: return -1;
    default: return 0;  // F J1
  }
}

}  // namespace

std::string to_string(PortionType t) { return kNames[static_cast<int>(t)]; }

std::optional<PortionType> parse_portion_type(const std::string& s) {
  for (size_t i = 0; i < kNames.size(); ++i)
    if (s == kNames[i]) return static_cast<PortionType>(i);
  return std::nullopt;
}

PlumbingLine portion_entries(const Portion& p, PortionRole role) {
  using T = PortionType;
  if (!allowed(p.type, role))
    throw DomainError("portion (" + to_string(p.type) + ") cannot occupy this position of the H-shape");
  PlumbingLine e;
  switch (p.type) {
    case T::c: case T::g: case T::h: e = {2}; break;
    case T::k: e = {2}; break;
    case T::d: e = {2, -p.q, -2}; break;
    case T::f: e = {-2, -p.q, 2}; break;
    case T::j: e = {3, -p.q, -3}; break;
    case T::l: e = {-3, -p.q, 3}; break;
    case T::i: e = {-3}; break;
    case T::F: e = {4}; break;
    case T::D: e = {2}; break;
    case T::E: e = {2, -p.q, -2}; break;
    case T::J1: e = {4, -2}; break;
    case T::J2: e = {-2, 4}; break;
    default: break;  // a b e contribute nothing
  }
  if (p.sign < 0)
    for (auto& x : e) x = -x;
  return e;
}

PlumbingExtraction extract_plumbing(const HPortion& h) {
  if (h.joins.size() != h.middle.size() + 1)
    throw DomainError("an H-portion with k middle pieces needs k+1 joining gleams");
  PlumbingExtraction out;
  auto append = [&](const PlumbingLine& e) { out.line.insert(out.line.end(), e.begin(), e.end()); };
  auto flag = [&](const Portion& p) {
    using T = PortionType;
    if (p.type == T::E && std::llabs(p.q) <= 1) out.flags.push_back("(E) with |q| <= 1 is simplifiable");
    if ((p.type == T::d || p.type == T::f || p.type == T::j || p.type == T::l) && p.q == 0)
      out.flags.push_back("(" + to_string(p.type) + ") with q = 0 is simplifiable");
  };

  append(portion_entries(h.left, PortionRole::left));
  flag(h.left);
  int carried = h.left.sign * left_end_offset_twice(h.left.type);
  for (size_t m = 0; m <= h.middle.size(); ++m) {
    const bool last = m == h.middle.size();
    const Portion& next = last ? h.right : h.middle[m];
    const int next_offset =
        last ? next.sign * right_end_offset_twice(next.type) : next.sign * middle_left_offset_twice(next.type);
    if (!last) portion_entries(next, PortionRole::middle);  // role check before use
    const HalfInteger join = h.joins[m] + HalfInteger::from_twice(carried + next_offset);
    if (!join.is_integral())
      throw DomainError("join " + std::to_string(m) + " evaluates to " + join.to_string() + ", not an integer");
    out.line.push_back(join.as_int());
    append(portion_entries(next, last ? PortionRole::right : PortionRole::middle));
    flag(next);
    if (!last) {
      // The shift a middle portion adds to the join on its right is not
      // determined by the available case list; stop here.
      out.complete = false;
      out.stop_reason = "offset on the right of (" + to_string(next.type) + ") is not known";
      return out;
    }
  }
  return out;
}

}  // namespace shadow

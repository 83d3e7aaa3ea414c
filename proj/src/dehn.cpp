#include "shadowcalc/dehn.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

#include "shadowcalc/errors.hpp"

namespace shadow {

namespace {

constexpr std::array<int, 12> kCusps = {0, 1, 1, 2, 2, 2, 2, 2, 3, 3, 3, 4};

void check_arity(int w, const std::vector<Slope>& s) {
  if (w < 1 || w > 11) throw DomainError("W" + std::to_string(w) + " is not one of W1..W11");
  if (static_cast<int>(s.size()) != kCusps[w])
    throw DomainError("W" + std::to_string(w) + " takes " + std::to_string(kCusps[w]) + " slopes, got " +
                      std::to_string(s.size()));
}

bool is_inf(const Slope& s) { return s.is_infinite(); }
bool is_int(const Slope& s) { return s.is_integer(); }
bool is_int_or_inf(const Slope& s) { return s.is_integer() || s.is_infinite(); }
bool is_zero(const Slope& s) { return s.equals(0, 1); }
bool is_unit(const Slope& s) { return s.is_unit_fraction(); }
bool in_set(const Slope& s, std::initializer_list<Slope> set) {
  return std::find(set.begin(), set.end(), s) != set.end();
}

FillingVerdict yes(int h, std::string rule, bool necessary = false) {
  return {true, h, std::move(rule), necessary};
}
FillingVerdict yes_no_h(std::string rule) { return {true, std::nullopt, std::move(rule), true}; }
FillingVerdict no(std::string rule, bool necessary = false) { return {false, std::nullopt, std::move(rule), necessary}; }

FillingVerdict w8(const Slope& a0, const Slope& b0, const Slope& g) {
  for (int swap = 0; swap < 2; ++swap) {
    const Slope& a = swap ? b0 : a0;
    const Slope& b = swap ? a0 : b0;
    if (is_inf(a) && is_inf(b) && is_inf(g)) return yes(2, "W8:inf,inf,inf");
    if (is_zero(a) && is_inf(b) && is_zero(g)) return yes(2, "W8:0,inf,0");
    if (is_zero(a) && is_int(b) && is_zero(g)) return yes(1, "W8:0,Z,0");
    if (is_zero(a) && is_inf(b) && is_unit(g)) return yes(1, "W8:0,inf,1/n");
    if (is_int(a) && is_inf(b) && is_inf(g)) return yes(1, "W8:Z,inf,inf");
    if (is_zero(a) && is_int(b) && is_unit(g)) return yes(0, "W8:0,Z,1/n");
    if (is_int(a) && is_int(b) && is_inf(g)) return yes(0, "W8:Z,Z,inf");
  }
  return no("W8:none");
}

FillingVerdict w9(const Slope& a, const Slope& b, const Slope& g) {
  if (is_zero(a) && is_int(b) && is_zero(g)) return yes(1, "W9:0,Z,0", true);
  if (is_inf(a) && is_int(b) && is_inf(g)) return yes(1, "W9:inf,Z,inf", true);
  if (is_zero(a) && is_int(b) && is_unit(g)) return yes(0, "W9:0,Z,1/n", true);
  if (is_int(a) && is_int(b) && is_inf(g)) return yes(0, "W9:Z,Z,inf", true);
  if (is_inf(b)) return yes_no_h("W9:beta=inf");
  return no("W9:none", true);
}

FillingVerdict w10(const Slope& a, const Slope& b, const Slope& g) {
  const Slope inf = Slope::infinity();
  const bool member = in_set(a, {inf, Slope(0, 1), Slope(1, 2), Slope(1, 1)}) ||
                      in_set(b, {inf, Slope(-1, 1), Slope(0, 1)}) ||
                      in_set(g, {inf, Slope(-3, 1), Slope(-2, 1)});
  if (!member) return no("W10:membership", true);
  if (is_inf(a) && !((is_inf(b) && is_int(g)) || (is_int(b) && is_inf(g)))) return no("W10:alpha=inf", true);
  if (is_inf(b) && !((is_inf(a) && is_int(g)) || (is_int(a) && is_inf(g)))) return no("W10:beta=inf", true);
  return yes_no_h("W10:not-excluded");
}

FillingVerdict w11(const Slope& a, const Slope& b, const Slope& g, const Slope& d) {
  const Slope inf = Slope::infinity();
  auto short_side = [&](const Slope& s) { return in_set(s, {inf, Slope(-1, 1), Slope(-1, 2), Slope(0, 1)}); };
  auto long_side = [&](const Slope& s) { return in_set(s, {inf, Slope(0, 1), Slope(1, 1), Slope(2, 1)}); };
  if (!(short_side(a) || short_side(b) || long_side(g) || long_side(d))) return no("W11:membership", true);
  if (is_inf(a) && !(is_int(g) || is_int(d) || in_set(b, {Slope(-1, 1), Slope(0, 1)}) || (is_inf(g) && is_inf(d))))
    return no("W11:alpha=inf", true);
  if (is_inf(g) && !(is_int_or_inf(a) || is_int_or_inf(b) || is_int_or_inf(d))) return no("W11:gamma=inf", true);
  return yes_no_h("W11:not-excluded");
}

}  // namespace

int cusp_count(int w) {
  if (w < 1 || w > 11) throw DomainError("W" + std::to_string(w) + " is not one of W1..W11");
  return kCusps[w];
}

IntMatrix filling_matrix(int w, const std::vector<Slope>& s) {
  check_arity(w, s);
  std::vector<std::pair<int64_t, int64_t>> pq;
  for (const auto& x : s) pq.emplace_back(x.p(), x.q());
  return filling_matrix_pq(w, pq);
}

IntMatrix filling_matrix_pq(int w, const std::vector<std::pair<int64_t, int64_t>>& s) {
  if (w < 1 || w > 11) throw DomainError("W" + std::to_string(w) + " is not one of W1..W11");
  if (static_cast<int>(s.size()) != kCusps[w])
    throw DomainError("W" + std::to_string(w) + " takes " + std::to_string(kCusps[w]) + " slopes");
  auto p = [&](int i) { return s[i - 1].first; };
  auto q = [&](int i) { return s[i - 1].second; };
  switch (w) {
    case 3:
    case 4:
      return IntMatrix{{q(1), 0}, {0, q(2)}};
    case 5:
      return IntMatrix{{p(1), 0, 1, 0}, {0, p(2), 0, 3}, {q(1), 0, 0, 0}, {0, 3 * q(2), 0, 0}};
    case 6:
      return IntMatrix{{p(1), 0, -1, 1}, {0, p(2), 2, 2}, {-q(1), 2 * q(2), 0, 0}, {q(1), 2 * q(2), 0, 0}};
    case 7:
      return IntMatrix{{p(1), -q(2), 1, 2}, {-q(1), p(2), 2, -1}, {q(1), 2 * q(2), 0, 0}, {2 * q(1), -q(2), 0, 0}};
    case 9:
      return IntMatrix{{q(1), 0, 2 * q(3)}, {0, q(2), 0}, {-2 * p(1), 0, p(3)}};
    default:
      throw DomainError("no homology matrix for W" + std::to_string(w) + "; use the classification predicate");
  }
}

H1Group h1_filling(int w, const std::vector<Slope>& slopes) {
  return smith_normal_form(filling_matrix(w, slopes)).cokernel;
}

W5Pipeline w5_transform_pipeline(const Slope& alpha, const Slope& beta) {
  W5Pipeline out;
  IntMatrix m = filling_matrix(5, {alpha, beta});
  out.stages.push_back(m);
  m.add_col(0, 2, -alpha.p());  // clear p1 with the third column
  out.stages.push_back(m);
  const int64_t p2 = beta.p();
  const int64_t r = ((p2 % 3) + 3) % 3;
  if (r == 0) return out;
  const int64_t e = r == 1 ? 1 : -1;  // p2 = e + 3k
  m.add_col(1, 3, -(p2 - e) / 3);
  out.stages.push_back(m);
  m.add_col(3, 1, -2 * e);  // 3 -> 1 in row two, 0 -> -+6 q2 in row four
  out.stages.push_back(m);
  m.add_col(1, 3, -e);  // +-1 -> 0, 3q2 -> 9q2
  out.stages.push_back(m);
  m.add_row(3, 1, -m(3, 3));  // clear -+6 q2 with the unit row
  out.stages.push_back(m);
  out.completed = true;
  return out;
}

FillingVerdict filling_yields(int w, const std::vector<Slope>& s) {
  check_arity(w, s);
  switch (w) {
    case 1:
    case 2:
      if (is_inf(s[0])) return yes(2, "W" + std::to_string(w) + ":inf");
      return no("W" + std::to_string(w) + ":none");
    case 3:
    case 4: {
      const std::string t = "W" + std::to_string(w);
      if (is_inf(s[0]) && is_inf(s[1])) return yes(2, t + ":inf,inf");
      if (is_int(s[0]) && is_inf(s[1])) return yes(1, t + ":Z,inf");
      if (is_zero(s[0]) && is_int(s[1])) return yes(0, t + ":0,Z");
      return no(t + ":none");
    }
    case 5:
    case 6: {
      const std::string t = "W" + std::to_string(w);
      if (is_inf(s[0]) && is_inf(s[1])) return yes(2, t + ":inf,inf");
      if (is_int(s[0]) && is_inf(s[1])) return yes(1, t + ":Z,inf");
      return no(t + ":none");
    }
    case 7:
      if (is_inf(s[0]) && is_inf(s[1])) return yes(2, "W7:inf,inf");
      if (is_int(s[0]) && is_inf(s[1])) return yes(1, "W7:Z,inf");
      if (is_inf(s[0]) && is_int(s[1])) return yes(1, "W7:inf,Z");
      return no("W7:none");
    case 8:
      return w8(s[0], s[1], s[2]);
    case 9:
      return w9(s[0], s[1], s[2]);
    case 10:
      return w10(s[0], s[1], s[2]);
    default:
      return w11(s[0], s[1], s[2], s[3]);
  }
}

FillingVerdict borromean_surgery_yields(const std::vector<Slope>& s) {
  if (s.size() != 3) throw DomainError("Borromean surgery takes 3 slopes");
  std::array<int, 3> idx = {0, 1, 2};
  // Try families in decreasing h so the answer does not depend on the order.
  for (int family = 0; family < 3; ++family) {
    std::sort(idx.begin(), idx.end());
    do {
      const Slope& a = s[idx[0]];
      const Slope& b = s[idx[1]];
      const Slope& c = s[idx[2]];
      if (!is_inf(a)) continue;
      if (family == 0 && is_zero(b) && is_zero(c)) return yes(2, "borromean:inf,0,0");
      if (family == 1 && is_unit(b) && is_zero(c)) return yes(1, "borromean:inf,1/m,0");
      if (family == 2 && is_unit(b) && is_unit(c)) return yes(0, "borromean:inf,1/m,1/n");
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
  return no("borromean:none");
}

}  // namespace shadow

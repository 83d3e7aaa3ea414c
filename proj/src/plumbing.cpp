#include "shadowcalc/plumbing.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

#include "shadowcalc/errors.hpp"
#include "shadowcalc/int_matrix.hpp"

namespace shadow {

int64_t plumbing_det(const PlumbingLine& line) {
  // Evaluate from the right: D_k = e_k D_{k+1} - D_{k+2}.
  int64_t next = 1, after = 0;
  for (auto it = line.rbegin(); it != line.rend(); ++it) {
    const int64_t cur = checked_sub(checked_mul(*it, next), after);
    after = next;
    next = cur;
  }
  return next;
}

std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::zero_interior: return "zero-interior";
    case MoveKind::zero_leading: return "zero-leading";
    case MoveKind::zero_trailing: return "zero-trailing";
    case MoveKind::unit_interior: return "unit-interior";
    case MoveKind::unit_leading: return "unit-leading";
    case MoveKind::unit_trailing: return "unit-trailing";
  }
  return "?";
}

std::string PlumbingMove::describe() const { return to_string(kind) + "@" + std::to_string(site); }

bool move_applicable(const PlumbingLine& l, const PlumbingMove& m) {
  const int n = static_cast<int>(l.size());
  const int i = m.site;
  if (i < 0 || i >= n) return false;
  const bool unit = l[i] == 1 || l[i] == -1;
  switch (m.kind) {
    case MoveKind::zero_interior: return i > 0 && i < n - 1 && l[i] == 0;
    case MoveKind::zero_leading: return i == 0 && n >= 2 && l[0] == 0;
    case MoveKind::zero_trailing: return i == n - 1 && n >= 2 && l[i] == 0;
    case MoveKind::unit_interior: return i > 0 && i < n - 1 && unit;
    case MoveKind::unit_leading: return i == 0 && unit;
    case MoveKind::unit_trailing: return i == n - 1 && n >= 2 && unit;
  }
  return false;
}

PlumbingLine apply_plumbing_move(const PlumbingLine& l, const PlumbingMove& m) {
  if (!move_applicable(l, m))
    throw DomainError("move " + m.describe() + " does not apply to (" + format_plumbing_line(l) + ")");
  const int i = m.site;
  PlumbingLine out;
  switch (m.kind) {
    case MoveKind::zero_interior:
      out.assign(l.begin(), l.begin() + i - 1);
      out.push_back(checked_add(l[i - 1], l[i + 1]));
      out.insert(out.end(), l.begin() + i + 2, l.end());
      break;
    case MoveKind::zero_leading:
      out.assign(l.begin() + 2, l.end());
      break;
    case MoveKind::zero_trailing:
      out.assign(l.begin(), l.end() - 2);
      break;
    case MoveKind::unit_interior:
      out = l;
      out[i - 1] = checked_sub(out[i - 1], l[i]);
      out[i + 1] = checked_sub(out[i + 1], l[i]);
      out.erase(out.begin() + i);
      break;
    case MoveKind::unit_leading:
      out.assign(l.begin() + 1, l.end());
      if (!out.empty()) out[0] = checked_sub(out[0], l[0]);
      break;
    case MoveKind::unit_trailing:
      out.assign(l.begin(), l.end() - 1);
      out.back() = checked_sub(out.back(), l[i]);
      break;
  }
  return out;
}

std::vector<PlumbingMove> applicable_moves(const PlumbingLine& l) {
  std::vector<PlumbingMove> out;
  constexpr MoveKind kinds[] = {MoveKind::zero_interior, MoveKind::zero_leading, MoveKind::zero_trailing,
                                MoveKind::unit_interior, MoveKind::unit_leading, MoveKind::unit_trailing};
  for (int i = 0; i < static_cast<int>(l.size()); ++i)
    for (auto k : kinds)
      if (move_applicable(l, {k, i})) out.push_back({k, i});
  return out;
}

std::string to_string(BoundaryTag t) {
  switch (t) {
    case BoundaryTag::S3: return "S3";
    case BoundaryTag::S2xS1: return "S2xS1";
    default: return "Other";
  }
}

namespace {

std::optional<PlumbingMove> next_move(const PlumbingLine& l) {
  const int n = static_cast<int>(l.size());
  if (n == 0) return std::nullopt;
  for (auto k : {MoveKind::zero_leading, MoveKind::unit_leading})
    if (move_applicable(l, {k, 0})) return PlumbingMove{k, 0};
  for (auto k : {MoveKind::zero_trailing, MoveKind::unit_trailing})
    if (move_applicable(l, {k, n - 1})) return PlumbingMove{k, n - 1};
  for (int i = 1; i < n - 1; ++i)
    for (auto k : {MoveKind::zero_interior, MoveKind::unit_interior})
      if (move_applicable(l, {k, i})) return PlumbingMove{k, i};
  return std::nullopt;
}

}  // namespace

BoundaryVerdict reduce_plumbing(const PlumbingLine& line) {
  BoundaryVerdict v;
  v.det = plumbing_det(line);
  PlumbingLine cur = line;
  // Every move shortens the line, so this terminates. The moves are closed
  // under a global sign change, so no separate sign step is ever needed.
  while (auto m = next_move(cur)) {
    cur = apply_plumbing_move(cur, *m);
    v.trace.push_back(*m);
  }
  v.reduced = cur;
  if (cur.empty())
    v.tag = BoundaryTag::S3;
  else if (cur.size() == 1 && cur[0] == 0)
    v.tag = BoundaryTag::S2xS1;
  else
    v.tag = BoundaryTag::Other;

  const int64_t rd = plumbing_det(cur);
  if (std::llabs(rd) != std::llabs(v.det))
    throw InvariantBreach("reduction changed |det| for (" + format_plumbing_line(line) + ")");
  const bool agrees = (v.tag == BoundaryTag::S3) == (std::llabs(v.det) == 1) &&
                      (v.tag == BoundaryTag::S2xS1) == (v.det == 0);
  if (!agrees)
    throw InvariantBreach("reduced verdict disagrees with determinant for (" + format_plumbing_line(line) + ")");
  return v;
}

std::string to_string(Symmetry s) {
  switch (s) {
    case Symmetry::identity: return "identity";
    case Symmetry::reversal: return "reversal";
    case Symmetry::sign_change: return "sign-change";
    default: return "reversal+sign-change";
  }
}

PlumbingLine apply_symmetry(const PlumbingLine& line, Symmetry s) {
  PlumbingLine out = line;
  if (s == Symmetry::reversal || s == Symmetry::reversal_and_sign) std::reverse(out.begin(), out.end());
  if (s == Symmetry::sign_change || s == Symmetry::reversal_and_sign)
    for (auto& e : out) e = -e;
  return out;
}

namespace {

std::optional<int> case_site(const PlumbingLine& e, int c) {
  const int n = static_cast<int>(e.size());
  if (n == 0) return std::nullopt;
  auto small = [](int64_t x) { return x >= 0 && x <= 3; };
  switch (c) {
    case 1:
      if (e[0] == 0) return 0;
      break;
    case 2:
      if (e[0] == 1 && n == 1) return 0;
      break;
    case 3:
      if (n >= 2 && e[0] == 1 && small(e[1])) return 0;
      break;
    case 4:
      for (int i = 1; i < n - 1; ++i)
        if (e[i] == 0 && checked_mul(e[i - 1], e[i + 1]) <= 0) return i;
      break;
    case 5:
      for (int i = 1; i < n - 1; ++i)
        if (e[i] == 1 && small(e[i - 1]) && e[i + 1] >= 0) return i;
      break;
  }
  return std::nullopt;
}

}  // namespace

std::optional<LemmaCase> lemma_case(const PlumbingLine& line) {
  constexpr Symmetry syms[] = {Symmetry::identity, Symmetry::reversal, Symmetry::sign_change,
                               Symmetry::reversal_and_sign};
  for (int c = 1; c <= 5; ++c)
    for (auto s : syms)
      if (auto site = case_site(apply_symmetry(line, s), c)) return LemmaCase{c, s, *site};
  return std::nullopt;
}

PlumbingLine parse_plumbing_line(const std::string& text) {
  PlumbingLine out;
  std::string t;
  for (char ch : text)
    if (ch != ' ' && ch != '(' && ch != ')') t.push_back(ch);
  if (t.empty()) return out;
  size_t start = 0;
  while (true) {
    const size_t comma = t.find(',', start);
    std::string tok = t.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!tok.empty() && tok[0] == '+') tok.erase(0, 1);
    int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw DomainError("malformed plumbing entry '" + tok + "'");
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_plumbing_line(const PlumbingLine& line) {
  std::string s;
  for (size_t i = 0; i < line.size(); ++i) s += (i ? "," : "") + std::to_string(line[i]);
  return s;
}

}  // namespace shadow

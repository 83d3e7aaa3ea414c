#include "shadowcalc/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>

#include "shadowcalc/errors.hpp"

namespace shadow {

namespace {

Word power(const Word& w, int n) {
  Word out;
  for (int i = 0; i < n; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

Word cyclic_reduce(Word w) {
  w = free_reduce(w);
  size_t i = 0, j = w.size();
  while (j - i >= 2 && w[i] == -w[j - 1]) {
    ++i;
    --j;
  }
  return Word(w.begin() + i, w.begin() + j);
}

// Least rotation of w or its inverse; relators equal as cyclic words up to
// inversion get the same form.
Word canonical(const Word& w0) {
  const Word w = cyclic_reduce(w0);
  Word best = w;
  for (const Word& base : {w, inverse(w)}) {
    for (size_t r = 0; r < base.size(); ++r) {
      Word rot(base.begin() + r, base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + r);
      best = std::min(best, rot);
    }
  }
  return best;
}

bool power_of_two(int64_t n) { return n >= 1 && (n & (n - 1)) == 0; }

// Drops every generator that occurs only in two length-one relators,
// undoing stabilizations.
Presentation strip_stabilizations(const Presentation& p) {
  std::vector<Word> rel = p.relators;
  std::vector<bool> removed(p.generators + 1, false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int g = 1; g <= p.generators && !changed; ++g) {
      if (removed[g]) continue;
      std::vector<size_t> single;
      bool elsewhere = false;
      for (size_t i = 0; i < rel.size(); ++i) {
        const bool uses = std::any_of(rel[i].begin(), rel[i].end(), [&](int x) { return std::abs(x) == g; });
        if (!uses) continue;
        if (rel[i].size() == 1)
          single.push_back(i);
        else
          elsewhere = true;
      }
      if (elsewhere || single.size() != 2) continue;
      rel.erase(rel.begin() + single[1]);
      rel.erase(rel.begin() + single[0]);
      removed[g] = true;
      changed = true;
    }
  }
  std::map<int, int> renumber;
  int next = 0;
  for (int g = 1; g <= p.generators; ++g)
    if (!removed[g]) renumber[g] = ++next;
  for (auto& w : rel)
    for (int& x : w) x = x > 0 ? renumber[x] : -renumber[-x];
  return Presentation(next, rel);
}

// Relator multiset in canonical form, after a generator renaming.
std::vector<Word> canonical_relators(const std::vector<Word>& rel, const std::vector<int>& image) {
  std::vector<Word> out;
  for (const auto& w : rel) {
    Word m;
    for (int x : w) m.push_back(x > 0 ? image[x] : -image[-x]);
    out.push_back(canonical(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> template_relators(const Presentation& t) { return canonical_relators(t.relators, {0, 1, 2}); }

// All 8 renamings of two generators: swap and independent inversions.
std::vector<std::vector<int>> renamings2() {
  std::vector<std::vector<int>> out;
  for (int swap = 0; swap < 2; ++swap)
    for (int sa : {1, -1})
      for (int sb : {1, -1}) out.push_back(swap ? std::vector<int>{0, sb * 2, sa * 1} : std::vector<int>{0, sa * 1, sb * 2});
  return out;
}

bool matches_template(const Presentation& core, const Presentation& t) {
  if (core.generators != t.generators || core.relators.size() != t.relators.size()) return false;
  const auto target = template_relators(t);
  if (core.generators == 1) {
    for (int s : {1, -1})
      if (canonical_relators(core.relators, {0, s}) == target) return true;
    return false;
  }
  for (const auto& img : renamings2())
    if (canonical_relators(core.relators, img) == target) return true;
  return false;
}

// Exponent n when w is (as a cyclic word up to inversion) g^n for one
// generator, else 0.
int single_power(const Word& w) {
  const Word c = cyclic_reduce(w);
  if (c.empty()) return 0;
  for (int x : c)
    if (x != c.front()) return 0;
  return static_cast<int>(c.size());
}

// p when w is cyclically (xy)^p for letters x, y on distinct generators,
// else 0.
int alternating_power(const Word& w) {
  const Word c = cyclic_reduce(w);
  if (c.size() < 2 || c.size() % 2 != 0) return 0;
  for (size_t i = 2; i < c.size(); ++i)
    if (c[i] != c[i - 2]) return 0;
  if (std::abs(c[0]) == std::abs(c[1])) return 0;
  return static_cast<int>(c.size() / 2);
}

}  // namespace

Word free_reduce(const Word& w) {
  Word out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Presentation::Presentation(int g, std::vector<Word> rel) : generators(g) {
  if (g < 0) throw DomainError("negative generator count");
  for (auto& w : rel) {
    for (int x : w)
      if (x == 0 || std::abs(x) > g) throw DomainError("relator letter " + std::to_string(x) + " out of range");
    relators.push_back(free_reduce(w));
  }
}

int deficiency(const Presentation& p) { return p.generators - static_cast<int>(p.relators.size()); }

Presentation stabilize(const Presentation& p) {
  auto rel = p.relators;
  const int g = p.generators + 1;
  rel.push_back({g});
  rel.push_back({g});
  return Presentation(g, rel);
}

int chi_of_boundary_thickening(const Presentation& p) {
  return 2 * (1 - p.generators + static_cast<int>(p.relators.size()));
}

Presentation cyclic(int n) {
  if (n < 1) throw DomainError("cyclic order must be positive");
  return Presentation(1, {power({1}, n)});
}

Presentation dihedral(int n) { return von_dyck(2, 2, n); }

Presentation von_dyck(int l, int m, int n) {
  if (l < 1 || m < 1 || n < 1) throw DomainError("parameters must be positive");
  return Presentation(2, {power({1}, l), power({2}, m), power({1, 2}, n)});
}

Presentation coxeter(int l, int m, int n, int k) {
  if (l < 1 || m < 1 || n < 1 || k < 1) throw DomainError("parameters must be positive");
  return Presentation(2, {power({1}, l), power({2}, m), power({1, 2}, n), power({1, -2}, k)});
}

Word parse_word(const std::string& text) {
  size_t pos = 0;
  auto parse_exponent = [&]() {
    if (pos >= text.size() || text[pos] != '^') return 1;
    ++pos;
    bool neg = false;
    if (pos < text.size() && text[pos] == '-') {
      neg = true;
      ++pos;
    }
    const size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos || pos - start > 6) throw DomainError("malformed exponent in '" + text + "'");
    const int e = std::stoi(text.substr(start, pos - start));
    return neg ? -e : e;
  };
  auto raise = [](const Word& w, int e) { return e >= 0 ? power(w, e) : power(inverse(w), -e); };
  Word out;
  while (pos < text.size()) {
    const char c = text[pos];
    if (c == ' ' || c == '*' || c == '.') {
      ++pos;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos;
      const int g = std::tolower(c) - 'a' + 1;
      const Word w = raise({std::islower(static_cast<unsigned char>(c)) ? g : -g}, parse_exponent());
      out.insert(out.end(), w.begin(), w.end());
    } else if (c == '(') {
      const size_t close = text.find(')', pos);
      if (close == std::string::npos) throw DomainError("unbalanced parenthesis in '" + text + "'");
      const Word inner = parse_word(text.substr(pos + 1, close - pos - 1));
      pos = close + 1;
      const Word w = raise(inner, parse_exponent());
      out.insert(out.end(), w.begin(), w.end());
    } else {
      throw DomainError("unexpected character '" + std::string(1, c) + "' in word '" + text + "'");
    }
  }
  return free_reduce(out);
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (int x : w) s += static_cast<char>(x > 0 ? 'a' + x - 1 : 'A' + (-x) - 1);
  return s;
}

std::string to_string(CStarBound b) {
  switch (b) {
    case CStarBound::zero:
      return "0";
    case CStarBound::one:
      return "1";
    default:
      return "unknown";
  }
}

bool is_3_smooth(int64_t n) {
  if (n < 1) return false;
  while (n % 2 == 0) n /= 2;
  while (n % 3 == 0) n /= 3;
  return n == 1;
}

CStarReport cstar_upper_bound(const Presentation& p) {
  const Presentation core = strip_stabilizations(p);
  const int ng = core.generators;
  const size_t nr = core.relators.size();

  if (ng == 1 && nr == 1) {
    const int n = single_power(core.relators[0]);
    if (n >= 1) {
      if (power_of_two(n)) return {CStarBound::zero, "C_" + std::to_string(n)};
      if (n % 3 == 0 && power_of_two(n / 3)) return {CStarBound::zero, "C_" + std::to_string(n)};
      if (is_3_smooth(n)) return {CStarBound::one, "C_" + std::to_string(n)};
      if (n % 5 == 0 && is_3_smooth(n / 5)) return {CStarBound::one, "C_5n, n=" + std::to_string(n / 5)};
    }
    return {CStarBound::unknown, ""};
  }
  if (ng == 2 && (nr == 3 || nr == 4)) {
    // Read off the parameters, then confirm by exact template comparison.
    std::vector<int> singles, alts;
    for (const auto& w : core.relators) {
      if (int k = single_power(w)) singles.push_back(k);
      if (int k = alternating_power(w)) alts.push_back(k);
    }
    if (singles.size() != 2 || alts.size() != nr - 2) return {CStarBound::unknown, ""};
    std::vector<int> pair = singles;
    for (int swap = 0; swap < 2; ++swap, std::swap(pair[0], pair[1])) {
      const int l = pair[0], m = pair[1];
      if (nr == 3) {
        const int n = alts[0];
        if (!matches_template(core, von_dyck(l, m, n))) continue;
        if (l == 2 && m == 2 && power_of_two(2LL * n))
          return {CStarBound::zero, "D_" + std::to_string(2 * n)};
        if (is_3_smooth(l) && is_3_smooth(m) && is_3_smooth(n))
          return {CStarBound::one, "D(" + std::to_string(l) + "," + std::to_string(m) + "," + std::to_string(n) + ")"};
        return {CStarBound::unknown, ""};
      }
      for (int order = 0; order < 2; ++order) {
        const int n = alts[order], k = alts[1 - order];
        if (!matches_template(core, coxeter(l, m, n, k))) continue;
        if (is_3_smooth(l) && is_3_smooth(m) && is_3_smooth(n) && is_3_smooth(k))
          return {CStarBound::one, "(" + std::to_string(l) + "," + std::to_string(m) + "|" + std::to_string(n) + "," +
                                       std::to_string(k) + ")"};
        return {CStarBound::unknown, ""};
      }
    }
  }
  return {CStarBound::unknown, ""};
}

}  // namespace shadow

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace shadow {

// Letters are signed generator numbers: +i is g_i, -i its inverse (i >= 1).
using Word = std::vector<int>;

Word free_reduce(const Word& w);

struct Presentation {
  int generators = 0;
  std::vector<Word> relators;

  Presentation() = default;
  // Checks indices and freely reduces every relator.
  Presentation(int generators, std::vector<Word> relators);
};

int deficiency(const Presentation& p);
Presentation stabilize(const Presentation& p);
int chi_of_boundary_thickening(const Presentation& p);

Presentation cyclic(int n);
Presentation dihedral(int n);  // order 2n
Presentation von_dyck(int l, int m, int n);
Presentation coxeter(int l, int m, int n, int k);

// "a^2", "abAB", "(ab)^3"; lowercase letters are generators, uppercase
// their inverses. Throws DomainError on malformed input.
Word parse_word(const std::string& text);
std::string format_word(const Word& w);

enum class CStarBound { zero, one, unknown };
std::string to_string(CStarBound b);

bool is_3_smooth(int64_t n);

struct CStarReport {
  CStarBound bound = CStarBound::unknown;
  std::string family;  // matched family, empty when unknown
};
CStarReport cstar_upper_bound(const Presentation& p);

}  // namespace shadow

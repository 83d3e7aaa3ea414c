#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace shadow {

using PlumbingLine = std::vector<int64_t>;

// Tridiagonal determinant with diagonal e1..en and off-diagonal 1.
// D() = 1, D(e1) = e1, D(e1..en) = e1 D(e2..en) - D(e3..en).
int64_t plumbing_det(const PlumbingLine& line);

enum class MoveKind {
  zero_interior,   // (.., a, 0, b, ..) -> (.., a+b, ..)
  zero_leading,    // (0, e2, e3, ..) -> (e3, ..)
  zero_trailing,   // mirror image of zero_leading
  unit_interior,   // (.., a, s, b, ..) -> (.., a-s, b-s, ..) with s = +-1
  unit_leading,    // (s, e2, ..) -> (e2-s, ..); (s) -> ()
  unit_trailing,
};

std::string to_string(MoveKind k);

struct PlumbingMove {
  MoveKind kind;
  int site = 0;  // 0-based index of the entry the move acts on
  std::string describe() const;
};

bool move_applicable(const PlumbingLine& line, const PlumbingMove& m);
// Throws DomainError if not applicable.
PlumbingLine apply_plumbing_move(const PlumbingLine& line, const PlumbingMove& m);
// Every applicable (kind, site) pair on the line.
std::vector<PlumbingMove> applicable_moves(const PlumbingLine& line);

enum class BoundaryTag { S3, S2xS1, Other };
std::string to_string(BoundaryTag t);

struct BoundaryVerdict {
  BoundaryTag tag = BoundaryTag::Other;
  int64_t det = 1;
  std::vector<PlumbingMove> trace;
  PlumbingLine reduced;
};

// Leading moves first, then trailing, then the leftmost interior site.
BoundaryVerdict reduce_plumbing(const PlumbingLine& line);

enum class Symmetry { identity, reversal, sign_change, reversal_and_sign };
std::string to_string(Symmetry s);
PlumbingLine apply_symmetry(const PlumbingLine& line, Symmetry s);

struct LemmaCase {
  int case_id = 0;  // 1..5
  Symmetry symmetry = Symmetry::identity;
  int site = 0;     // index in the transformed line where the case applies
};

// Cases are tried in order 1..5; for each case the four symmetries are tried.
std::optional<LemmaCase> lemma_case(const PlumbingLine& line);

// "2,-1,3" -> {2,-1,3}; empty string -> {}.
PlumbingLine parse_plumbing_line(const std::string& text);
std::string format_plumbing_line(const PlumbingLine& line);

}  // namespace shadow

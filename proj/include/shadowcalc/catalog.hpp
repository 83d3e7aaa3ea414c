#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace shadow {

enum class Parity { even, odd, unresolved };

std::string_view to_string(Parity p);
Parity parity_xor(Parity a, Parity b);

enum class PieceKind {
  B, D, P, Y2, Y111, Y12, Y3,
  X1, X2, X3, X4, X5, X6, X7, X8, X9, X10, X11
};

inline constexpr int kPieceKindCount = 18;

std::string_view to_string(PieceKind k);
std::optional<PieceKind> parse_piece_kind(std::string_view s);
bool is_x_piece(PieceKind k);
// 1..11 for X pieces, 0 otherwise.
int x_index(PieceKind k);

struct PortInfo {
  int length = 1;
  Parity parity = Parity::unresolved;
  // Signed multiplicity of this port's piece-region along each singular edge
  // of the piece, relative to a coherent local orientation. Absent when the
  // data is not known.
  std::optional<std::vector<int>> incidence;
};

struct FiberDescriptor {
  enum class Type { seifert, hyperbolic, solid_torus };
  Type type = Type::solid_torus;
  std::string base;                        // D, A, P, T for Seifert pieces
  std::vector<std::pair<int, int>> fibers;  // (multiplicity, weight)
  int hyperbolic_index = 0;

  std::string describe() const;
};

struct PieceCatalogEntry {
  PieceKind kind = PieceKind::B;
  std::vector<PortInfo> ports;
  bool surface = false;     // all ports bound a single piece-region
  bool orientable = true;
  int singular_edges = 0;
  int vertex_count = 0;
  FiberDescriptor fiber;
  std::optional<std::string> block;
  int block_chi = 0;

  int port_count() const { return static_cast<int>(ports.size()); }
};

struct BlockEntry {
  std::string name;
  std::string set;  // "S0" or "S1"
  int boundary_components = 0;
  int chi = 0;
  int sigma = 0;
  bool mirrorable = false;
  std::string origin;
  std::optional<std::string> alias_of;
};

struct X12Portion {
  bool resolved = false;
  int boundary_circles = 1;
  std::string block;
  std::string note;
  std::string graph_text;  // decorated-graph file text of the portion
  std::string attach;      // "<vertex>:<port>" left free for gluing
};

class Catalog {
 public:
  static Catalog from_json_text(const std::string& text);
  static Catalog from_file(const std::string& path);
  static Catalog builtin();
  // The builtin catalog, or the file named by SHADOWCALC_CATALOG if set.
  // Loaded once per process.
  static const Catalog& active();

  const PieceCatalogEntry& piece(PieceKind k) const { return pieces_[static_cast<int>(k)]; }
  const std::vector<BlockEntry>& blocks() const { return blocks_; }
  const BlockEntry* find_block(std::string_view name) const;
  const X12Portion& x12() const { return x12_; }

 private:
  std::array<PieceCatalogEntry, kPieceKindCount> pieces_{};
  std::vector<BlockEntry> blocks_;
  X12Portion x12_;
};

}  // namespace shadow

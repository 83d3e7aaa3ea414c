#include "shadowcalc/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "shadowcalc/errors.hpp"

namespace shadow {

namespace detail {
extern const char* const kDefaultCatalog;
}

namespace {

constexpr std::array<std::string_view, kPieceKindCount> kKindNames = {
    "B", "D", "P", "Y2", "Y111", "Y12", "Y3", "X1", "X2",
    "X3", "X4", "X5", "X6", "X7", "X8", "X9", "X10", "X11"};

Parity parse_parity(const std::string& s) {
  if (s == "even") return Parity::even;
  if (s == "odd") return Parity::odd;
  if (s == "unresolved") return Parity::unresolved;
  throw DomainError("catalog: bad parity '" + s + "'");
}

void check_entry(const PieceCatalogEntry& e) {
  const std::string name(to_string(e.kind));
  if (e.ports.empty()) throw DomainError("catalog: piece " + name + " has no ports");
  for (const auto& p : e.ports) {
    if (p.length < 1) throw DomainError("catalog: non-positive port length on " + name);
    if (p.incidence && static_cast<int>(p.incidence->size()) != e.singular_edges)
      throw DomainError("catalog: incidence size mismatch on " + name);
  }
  if (is_x_piece(e.kind)) {
    int sum = 0;
    for (const auto& p : e.ports) sum += p.length;
    if (e.port_count() > 4) throw DomainError("catalog: X piece with more than 4 ports");
    if (sum != 6) throw DomainError("catalog: port lengths of " + name + " do not sum to 6");
    if (e.vertex_count != 1) throw DomainError("catalog: X piece must carry one vertex");
  } else if (e.vertex_count != 0) {
    throw DomainError("catalog: only X pieces carry a vertex");
  }
  if (e.kind == PieceKind::B && e.port_count() != 1)
    throw DomainError("catalog: B must have exactly one port");
}

}  // namespace

std::string_view to_string(Parity p) {
  switch (p) {
    case Parity::even: return "even";
    case Parity::odd: return "odd";
    default: return "unresolved";
  }
}

Parity parity_xor(Parity a, Parity b) {
  if (a == Parity::unresolved || b == Parity::unresolved) return Parity::unresolved;
  return a == b ? Parity::even : Parity::odd;
}

std::string_view to_string(PieceKind k) { return kKindNames[static_cast<int>(k)]; }

std::optional<PieceKind> parse_piece_kind(std::string_view s) {
  for (int i = 0; i < kPieceKindCount; ++i)
    if (kKindNames[i] == s) return static_cast<PieceKind>(i);
  return std::nullopt;
}

bool is_x_piece(PieceKind k) { return static_cast<int>(k) >= static_cast<int>(PieceKind::X1); }

int x_index(PieceKind k) {
  return is_x_piece(k) ? static_cast<int>(k) - static_cast<int>(PieceKind::X1) + 1 : 0;
}

std::string FiberDescriptor::describe() const {
  switch (type) {
    case Type::solid_torus: return "solid torus";
    case Type::hyperbolic: return "W" + std::to_string(hyperbolic_index);
    case Type::seifert: break;
  }
  if (fibers.empty()) return base + "xS1";
  std::string s = "(" + base;
  for (auto [m, w] : fibers) s += ",(" + std::to_string(m) + "," + std::to_string(w) + ")";
  return s + ")";
}

Catalog Catalog::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("catalog: ") + e.what());
  }
  Catalog c;
  std::array<bool, kPieceKindCount> seen{};
  try {
    for (auto& [key, val] : j.at("pieces").items()) {
      auto kind = parse_piece_kind(key);
      if (!kind) throw DomainError("catalog: unknown piece kind " + key);
      PieceCatalogEntry e;
      e.kind = *kind;
      for (const auto& pj : val.at("ports")) {
        PortInfo port;
        port.length = pj.at("length").get<int>();
        port.parity = parse_parity(pj.at("parity").get<std::string>());
        if (pj.contains("incidence") && !pj["incidence"].is_null())
          port.incidence = pj["incidence"].get<std::vector<int>>();
        e.ports.push_back(port);
      }
      e.surface = val.value("surface", false);
      e.orientable = val.value("orientable", true);
      e.singular_edges = val.value("singular_edges", 0);
      e.vertex_count = val.value("vertex_count", 0);
      const auto& fj = val.at("fiber");
      const auto type = fj.at("type").get<std::string>();
      if (type == "seifert") {
        e.fiber.type = FiberDescriptor::Type::seifert;
        e.fiber.base = fj.at("base").get<std::string>();
        for (const auto& f : fj.at("fibers")) e.fiber.fibers.emplace_back(f.at(0).get<int>(), f.at(1).get<int>());
      } else if (type == "hyperbolic") {
        e.fiber.type = FiberDescriptor::Type::hyperbolic;
        e.fiber.hyperbolic_index = fj.at("index").get<int>();
      } else if (type == "solid_torus") {
        e.fiber.type = FiberDescriptor::Type::solid_torus;
      } else {
        throw DomainError("catalog: unknown fiber type " + type);
      }
      if (val.contains("block") && !val["block"].is_null()) e.block = val["block"].get<std::string>();
      e.block_chi = val.value("block_chi", 0);
      check_entry(e);
      c.pieces_[static_cast<int>(e.kind)] = e;
      seen[static_cast<int>(e.kind)] = true;
    }
    for (int i = 0; i < kPieceKindCount; ++i)
      if (!seen[i]) throw DomainError("catalog: missing piece " + std::string(kKindNames[i]));

    for (const auto& bj : j.at("blocks")) {
      BlockEntry b;
      b.name = bj.at("name").get<std::string>();
      b.set = bj.at("set").get<std::string>();
      b.boundary_components = bj.at("boundary").get<int>();
      b.chi = bj.at("chi").get<int>();
      b.sigma = bj.value("sigma", 0);
      b.mirrorable = bj.value("mirrorable", false);
      b.origin = bj.value("origin", "");
      if (bj.contains("alias_of")) b.alias_of = bj["alias_of"].get<std::string>();
      if (b.sigma != 0) throw DomainError("catalog: block " + b.name + " has nonzero signature");
      c.blocks_.push_back(b);
    }

    const auto& xj = j.at("x12_portion");
    c.x12_.resolved = xj.at("status").get<std::string>() == "resolved";
    c.x12_.boundary_circles = xj.value("boundary_circles", 1);
    c.x12_.block = xj.value("block", "");
    c.x12_.note = xj.value("note", "");
    const auto& src = c.x12_.resolved ? xj.at("portion") : xj.value("candidate", nlohmann::json::object());
    if (src.contains("graph")) c.x12_.graph_text = src["graph"].get<std::string>();
    if (src.contains("attach")) c.x12_.attach = src["attach"].get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("catalog: ") + e.what());
  }
  return c;
}

Catalog Catalog::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("catalog: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

Catalog Catalog::builtin() { return from_json_text(detail::kDefaultCatalog); }

const Catalog& Catalog::active() {
  static const Catalog instance = [] {
    if (const char* path = std::getenv("SHADOWCALC_CATALOG"); path && *path) return from_file(path);
    return builtin();
  }();
  return instance;
}

const BlockEntry* Catalog::find_block(std::string_view name) const {
  for (const auto& b : blocks_)
    if (b.name == name) return &b;
  return nullptr;
}

}  // namespace shadow

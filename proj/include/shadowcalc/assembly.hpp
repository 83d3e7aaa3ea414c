#pragma once

#include <string>
#include <vector>

#include "shadowcalc/catalog.hpp"

namespace shadow {

struct BlockInstance {
  std::string id;
  std::string block;  // catalog name
};

struct BoundaryRef {
  int instance = -1;
  int component = -1;
  auto operator<=>(const BoundaryRef&) const = default;
};

struct Match {
  BoundaryRef a;
  BoundaryRef b;
  int gluing = 0;  // class in Z/2 x Z/2, encoded 0..3
};

struct Assembly {
  std::vector<BlockInstance> blocks;
  std::vector<Match> matches;
  // Blow-ups of each sign. Kept apart so that a connected sum of a positive
  // and a negative assembly still counts every summand in chi.
  int h_pos = 0;
  int h_neg = 0;

  int h() const { return h_pos - h_neg; }
  void add_h(int h);
  int instance_index(const std::string& id) const;  // -1 when absent
};

struct ChiSigma {
  int chi = 0;
  int sigma = 0;
  bool operator==(const ChiSigma&) const = default;
};

// Lists the reasons the matching is not perfect; empty when closed.
std::vector<std::string> matching_problems(const Assembly& a, const Catalog& cat = Catalog::active());

// Throws DomainError when the matching is not perfect.
ChiSigma chi_sigma(const Assembly& a, const Catalog& cat = Catalog::active());

Assembly connected_sum(const Assembly& a, const Assembly& b, const Catalog& cat = Catalog::active());

// Text format: "block <id> <NAME>", "match <id>:<k> <id>:<k> [gluing <c>]",
// "h <n>" (repeatable), '#' comments.
Assembly parse_assembly(const std::string& text, const Catalog& cat = Catalog::active());
Assembly load_assembly_file(const std::string& path, const Catalog& cat = Catalog::active());
std::string serialize_assembly(const Assembly& a);

}  // namespace shadow

#include "shadowcalc/blocks.hpp"

#include "shadowcalc/errors.hpp"

namespace shadow {

BlockSet parse_block_set(const std::string& s) {
  if (s == "S0" || s == "s0") return BlockSet::S0;
  if (s == "S1" || s == "s1") return BlockSet::S1;
  throw DomainError("unknown block set '" + s + "' (expected S0 or S1)");
}

std::string to_string(BlockSet s) { return s == BlockSet::S0 ? "S0" : "S1"; }

std::vector<BlockEntry> block_catalog(BlockSet set, const Catalog& cat) {
  std::vector<BlockEntry> out;
  for (const auto& b : cat.blocks())
    if (b.set == "S0") out.push_back(b);
  if (set == BlockSet::S1)
    for (const auto& b : cat.blocks())
      if (b.set == "S1") out.push_back(b);
  return out;
}

std::vector<BlockEntry> distinct_blocks(BlockSet set, const Catalog& cat) {
  std::vector<BlockEntry> out;
  for (auto& b : block_catalog(set, cat))
    if (!b.alias_of) out.push_back(std::move(b));
  return out;
}

}  // namespace shadow

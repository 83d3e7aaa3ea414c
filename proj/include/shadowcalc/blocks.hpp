#pragma once

#include <string>
#include <vector>

#include "shadowcalc/catalog.hpp"

namespace shadow {

enum class BlockSet { S0, S1 };

BlockSet parse_block_set(const std::string& s);  // "S0" / "S1"
std::string to_string(BlockSet s);

// Blocks of the set in catalog order; S1 lists S0 first.
std::vector<BlockEntry> block_catalog(BlockSet set, const Catalog& cat = Catalog::active());

// Blocks to use as distinct building pieces: aliases are dropped.
std::vector<BlockEntry> distinct_blocks(BlockSet set, const Catalog& cat = Catalog::active());

}  // namespace shadow

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "shadowcalc/assembly.hpp"
#include "shadowcalc/blocks.hpp"

namespace shadow {

struct CensusOptions {
  BlockSet set = BlockSet::S0;
  int max_blocks = 2;
  int h_lo = 0;
  int h_hi = 0;
  int jobs = 1;  // OpenMP threads; 1 runs the serial path
};

struct CensusRecord {
  std::string key;
  std::vector<std::string> blocks;  // sorted names
  std::vector<int> gluings;         // one class per match, non-decreasing
  int h = 0;
  ChiSigma invariants;
  Assembly assembly;
};

// Canonical key: "<names joined by +>|g<classes>|h<n>".
std::string census_key(const std::vector<std::string>& sorted_names, const std::vector<int>& gluings, int h);

// Closed, connected assembly on the given block multiset, or false when the
// boundary count is odd or too small to connect every block.
bool standard_assembly(const std::vector<BlockEntry>& blocks, Assembly& out);

// Streams every record in a fixed order, identical for every value of jobs.
void enumerate_assemblies(const CensusOptions& opt, const std::function<void(const CensusRecord&)>& sink,
                          const Catalog& cat = Catalog::active());

std::vector<CensusRecord> enumerate_all(const CensusOptions& opt, const Catalog& cat = Catalog::active());

std::string census_json_line(const CensusRecord& r);

struct CensusRun {
  long long written = 0;
  long long skipped = 0;
};

// Writes one JSON object per line. With resume, keys already present in the
// file are skipped and new records are appended.
CensusRun write_census(const CensusOptions& opt, const std::string& path, bool resume,
                       const Catalog& cat = Catalog::active());

}  // namespace shadow

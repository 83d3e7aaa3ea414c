#include "shadowcalc/census.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "shadowcalc/errors.hpp"

namespace shadow {

namespace {

constexpr size_t kBatch = 128;

// Non-decreasing index sequences of each length 1..max over n symbols.
std::vector<std::vector<int>> multisets(int n, int max_len) {
  std::vector<std::vector<int>> out;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<int> cur(len, 0);
    while (true) {
      out.push_back(cur);
      int i = len - 1;
      while (i >= 0 && cur[i] == n - 1) --i;
      if (i < 0) break;
      ++cur[i];
      for (int j = i + 1; j < len; ++j) cur[j] = cur[i];
    }
  }
  return out;
}

// Non-decreasing sequences of length k over {0,1,2,3}.
std::vector<std::vector<int>> gluing_classes(int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k, 0);
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == 3) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[i];
  }
  return out;
}

std::vector<CensusRecord> records_for(const std::vector<BlockEntry>& pool, const std::vector<int>& pick,
                                      const CensusOptions& opt, const Catalog& cat) {
  std::vector<BlockEntry> chosen;
  for (int i : pick) chosen.push_back(pool[i]);
  Assembly base;
  if (!standard_assembly(chosen, base)) return {};
  std::vector<std::string> names;
  for (const auto& b : chosen) names.push_back(b.name);
  std::sort(names.begin(), names.end());

  std::vector<CensusRecord> out;
  for (const auto& g : gluing_classes(static_cast<int>(base.matches.size()))) {
    for (int h = opt.h_lo; h <= opt.h_hi; ++h) {
      CensusRecord r;
      r.assembly = base;
      for (size_t m = 0; m < g.size(); ++m) r.assembly.matches[m].gluing = g[m];
      r.assembly.add_h(h);
      r.blocks = names;
      r.gluings = g;
      r.h = h;
      r.key = census_key(names, g, h);
      r.invariants = chi_sigma(r.assembly, cat);
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace

std::string census_key(const std::vector<std::string>& sorted_names, const std::vector<int>& gluings, int h) {
  std::string k;
  for (size_t i = 0; i < sorted_names.size(); ++i) k += (i ? "+" : "") + sorted_names[i];
  k += "|g";
  for (int c : gluings) k += static_cast<char>('0' + c);
  k += "|h" + std::to_string(h);
  return k;
}

bool standard_assembly(const std::vector<BlockEntry>& blocks, Assembly& out) {
  const int n = static_cast<int>(blocks.size());
  int total = 0;
  for (const auto& b : blocks) total += b.boundary_components;
  if (n == 0 || total % 2 != 0 || total / 2 < n - 1) return false;

  // Instances in order of decreasing boundary count keep a free boundary
  // available while the spanning tree grows.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return blocks[x].boundary_components > blocks[y].boundary_components; });
  out = Assembly{};
  for (int i = 0; i < n; ++i) out.blocks.push_back({"b" + std::to_string(i), blocks[order[i]].name});

  std::vector<BoundaryRef> open;
  for (int c = 0; c < blocks[order[0]].boundary_components; ++c) open.push_back({0, c});
  for (int i = 1; i < n; ++i) {
    if (open.empty()) return false;
    const BoundaryRef parent = open.front();
    open.erase(open.begin());
    out.matches.push_back({parent, {i, 0}, 0});
    for (int c = 1; c < blocks[order[i]].boundary_components; ++c) open.push_back({i, c});
  }
  for (size_t k = 0; k + 1 < open.size(); k += 2) out.matches.push_back({open[k], open[k + 1], 0});
  return true;
}

void enumerate_assemblies(const CensusOptions& opt, const std::function<void(const CensusRecord&)>& sink,
                          const Catalog& cat) {
  if (opt.max_blocks < 1) throw DomainError("max_blocks must be at least 1");
  if (opt.h_lo > opt.h_hi) throw DomainError("empty h range");
  const auto pool = distinct_blocks(opt.set, cat);
  const auto picks = multisets(static_cast<int>(pool.size()), opt.max_blocks);

  for (size_t start = 0; start < picks.size(); start += kBatch) {
    const size_t end = std::min(picks.size(), start + kBatch);
    std::vector<std::vector<CensusRecord>> batch(end - start);
    if (opt.jobs > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(opt.jobs)
      for (long i = static_cast<long>(start); i < static_cast<long>(end); ++i)
        batch[i - start] = records_for(pool, picks[i], opt, cat);
    } else {
      for (size_t i = start; i < end; ++i) batch[i - start] = records_for(pool, picks[i], opt, cat);
    }
    for (const auto& recs : batch)
      for (const auto& r : recs) sink(r);
  }
}

std::vector<CensusRecord> enumerate_all(const CensusOptions& opt, const Catalog& cat) {
  std::vector<CensusRecord> out;
  enumerate_assemblies(opt, [&](const CensusRecord& r) { out.push_back(r); }, cat);
  return out;
}

std::string census_json_line(const CensusRecord& r) {
  nlohmann::ordered_json j;
  j["key"] = r.key;
  j["blocks"] = r.blocks;
  j["gluings"] = r.gluings;
  j["h"] = r.h;
  j["chi"] = r.invariants.chi;
  j["sigma"] = r.invariants.sigma;
  return j.dump();
}

CensusRun write_census(const CensusOptions& opt, const std::string& path, bool resume, const Catalog& cat) {
  CensusRun run;
  std::unordered_set<std::string> seen;
  namespace fs = std::filesystem;
  if (resume && fs::exists(path)) {
    std::string text;
    {
      std::ifstream in(path, std::ios::binary);
      std::stringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
    // A run interrupted mid-line leaves a partial record; drop it.
    const auto last_nl = text.rfind('\n');
    const size_t keep = last_nl == std::string::npos ? 0 : last_nl + 1;
    if (keep != text.size()) {
      fs::resize_file(path, keep);
      text.resize(keep);
    }
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) {
      if (line.empty()) continue;
      auto j = nlohmann::json::parse(line, nullptr, false);
      if (j.is_discarded() || !j.contains("key")) throw DomainError("unreadable census line in " + path);
      seen.insert(j["key"].get<std::string>());
    }
  }
  std::ofstream out(path, resume ? std::ios::app : std::ios::trunc);
  if (!out) throw DomainError("cannot write " + path);
  enumerate_assemblies(
      opt,
      [&](const CensusRecord& r) {
        if (seen.count(r.key)) {
          ++run.skipped;
          return;
        }
        out << census_json_line(r) << '\n';
        ++run.written;
      },
      cat);
  return run;
}

}  // namespace shadow

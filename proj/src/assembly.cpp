#include "shadowcalc/assembly.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "shadowcalc/errors.hpp"

namespace shadow {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

const BlockEntry& block_of(const Assembly& a, int i, const Catalog& cat) {
  const BlockEntry* b = cat.find_block(a.blocks[i].block);
  if (!b) throw DomainError("unknown block '" + a.blocks[i].block + "'");
  return *b;
}

}  // namespace

void Assembly::add_h(int h) {
  if (h >= 0)
    h_pos += h;
  else
    h_neg += -h;
}

int Assembly::instance_index(const std::string& id) const {
  for (int i = 0; i < static_cast<int>(blocks.size()); ++i)
    if (blocks[i].id == id) return i;
  return -1;
}

std::vector<std::string> matching_problems(const Assembly& a, const Catalog& cat) {
  std::vector<std::string> out;
  std::map<BoundaryRef, int> uses;
  const int n = static_cast<int>(a.blocks.size());
  for (const auto& m : a.matches) {
    for (const BoundaryRef& r : {m.a, m.b}) {
      if (r.instance < 0 || r.instance >= n) {
        out.push_back("match refers to a missing block instance");
        continue;
      }
      if (r.component < 0 || r.component >= block_of(a, r.instance, cat).boundary_components) {
        out.push_back("component " + std::to_string(r.component) + " out of range for " + a.blocks[r.instance].id);
        continue;
      }
      ++uses[r];
    }
    if (m.gluing < 0 || m.gluing > 3) out.push_back("gluing class " + std::to_string(m.gluing) + " outside 0..3");
  }
  for (int i = 0; i < n; ++i) {
    const int k = block_of(a, i, cat).boundary_components;
    for (int c = 0; c < k; ++c) {
      const int u = uses.count({i, c}) ? uses[{i, c}] : 0;
      const std::string where = a.blocks[i].id + ":" + std::to_string(c);
      if (u == 0) out.push_back("boundary " + where + " is unmatched");
      if (u > 1) out.push_back("boundary " + where + " is matched " + std::to_string(u) + " times");
    }
  }
  return out;
}

ChiSigma chi_sigma(const Assembly& a, const Catalog& cat) {
  const auto problems = matching_problems(a, cat);
  if (!problems.empty()) throw DomainError("assembly is not closed: " + problems.front());
  ChiSigma r;
  for (int i = 0; i < static_cast<int>(a.blocks.size()); ++i) r.chi += block_of(a, i, cat).chi;
  r.chi += a.h_pos + a.h_neg;
  r.sigma = a.h();
  return r;
}

Assembly connected_sum(const Assembly& a, const Assembly& b, const Catalog& cat) {
  for (const Assembly* x : {&a, &b}) {
    const auto problems = matching_problems(*x, cat);
    if (!problems.empty()) throw DomainError("connected sum needs closed summands: " + problems.front());
    if (x->matches.empty()) throw DomainError("connected sum needs a summand with at least one gluing");
  }
  Assembly out;
  auto copy_in = [&](const Assembly& x, const std::string& prefix) {
    const int base = static_cast<int>(out.blocks.size());
    for (const auto& blk : x.blocks) out.blocks.push_back({prefix + blk.id, blk.block});
    for (auto m : x.matches) {
      m.a.instance += base;
      m.b.instance += base;
      out.matches.push_back(m);
    }
  };
  copy_in(a, "a.");
  const size_t first_b = out.matches.size();
  copy_in(b, "b.");

  const int n3 = static_cast<int>(out.blocks.size());
  out.blocks.push_back({"sum.N3", "N3"});
  out.blocks.push_back({"sum.M1", "M1"});
  out.blocks.push_back({"sum.M111a", "M111"});
  out.blocks.push_back({"sum.M111b", "M111"});
  const int m1 = n3 + 1, pa = n3 + 2, pb = n3 + 3;

  // Cut one gluing torus in each summand and reconnect it through a pair of
  // pants; the third legs meet N3, whose last boundary is capped by M1.
  auto splice = [&](size_t idx, int pants) {
    const Match old = out.matches[idx];
    out.matches[idx] = {old.a, {pants, 1}, old.gluing};
    out.matches.push_back({{pants, 2}, old.b, 0});
  };
  splice(0, pa);
  splice(first_b, pb);
  out.matches.push_back({{n3, 0}, {pa, 0}, 0});
  out.matches.push_back({{n3, 1}, {pb, 0}, 0});
  out.matches.push_back({{n3, 2}, {m1, 0}, 0});
  out.h_pos = a.h_pos + b.h_pos;
  out.h_neg = a.h_neg + b.h_neg;
  return out;
}

Assembly parse_assembly(const std::string& text, const Catalog& cat) {
  Assembly a;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  auto parse_ref = [&](const std::string& tok) {
    const auto colon = tok.rfind(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == tok.size())
      throw ParseError(lineno, "malformed boundary reference '" + tok + "'");
    const int i = a.instance_index(tok.substr(0, colon));
    if (i < 0) throw ParseError(lineno, "unknown block instance '" + tok.substr(0, colon) + "'");
    const std::string digits = tok.substr(colon + 1);
    if (digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 3)
      throw ParseError(lineno, "malformed component index '" + digits + "'");
    return BoundaryRef{i, std::stoi(digits)};
  };
  auto parse_int = [&](const std::string& tok) {
    try {
      size_t pos = 0;
      const int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      return v;
    } catch (const std::exception&) {
      throw ParseError(lineno, "malformed integer '" + tok + "'");
    }
  };
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    const auto tok = split_ws(raw);
    if (tok.empty()) continue;
    if (tok[0] == "block") {
      if (tok.size() != 3) throw ParseError(lineno, "expected: block <id> <NAME>");
      if (!cat.find_block(tok[2])) throw ParseError(lineno, "unknown block '" + tok[2] + "'");
      if (a.instance_index(tok[1]) >= 0) throw ParseError(lineno, "duplicate block id '" + tok[1] + "'");
      a.blocks.push_back({tok[1], tok[2]});
    } else if (tok[0] == "match") {
      if (tok.size() != 3 && !(tok.size() == 5 && tok[3] == "gluing"))
        throw ParseError(lineno, "expected: match <id>:<k> <id>:<k> [gluing <c>]");
      Match m{parse_ref(tok[1]), parse_ref(tok[2]), tok.size() == 5 ? parse_int(tok[4]) : 0};
      if (m.gluing < 0 || m.gluing > 3) throw ParseError(lineno, "gluing class must be 0..3");
      a.matches.push_back(m);
    } else if (tok[0] == "h") {
      if (tok.size() != 2) throw ParseError(lineno, "expected: h <n>");
      a.add_h(parse_int(tok[1]));
    } else {
      throw ParseError(lineno, "unknown directive '" + tok[0] + "'");
    }
  }
  return a;
}

Assembly load_assembly_file(const std::string& path, const Catalog& cat) {
  std::ifstream f(path);
  if (!f) throw DomainError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_assembly(ss.str(), cat);
}

std::string serialize_assembly(const Assembly& a) {
  std::ostringstream out;
  for (const auto& b : a.blocks) out << "block " << b.id << ' ' << b.block << '\n';
  for (const auto& m : a.matches) {
    out << "match " << a.blocks[m.a.instance].id << ':' << m.a.component << ' ' << a.blocks[m.b.instance].id << ':'
        << m.b.component;
    if (m.gluing != 0) out << " gluing " << m.gluing;
    out << '\n';
  }
  if (a.h_pos) out << "h " << a.h_pos << '\n';
  if (a.h_neg) out << "h " << -a.h_neg << '\n';
  return out.str();
}

}  // namespace shadow

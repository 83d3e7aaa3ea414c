#include "shadowcalc/slope.hpp"

#include <charconv>
#include <numeric>

#include "shadowcalc/errors.hpp"

namespace shadow {

Slope::Slope(int64_t p, int64_t q) {
  if (p == 0 && q == 0) throw DomainError("0/0 is not a slope");
  const int64_t g = std::gcd(p, q);
  p /= g;
  q /= g;
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  p_ = p;
  q_ = q;
}

std::string Slope::to_string() const {
  if (q_ == 0) return "inf";
  return std::to_string(p_) + "/" + std::to_string(q_);
}

namespace {

int64_t parse_int(const std::string& s) {
  std::string t = s;
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  int64_t v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
    throw DomainError("malformed slope component '" + s + "'");
  return v;
}

}  // namespace

Slope Slope::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (c != ' ') t.push_back(c);
  if (t == "inf" || t == "infinity" || t == "oo") return infinity();
  const auto slash = t.find('/');
  if (slash == std::string::npos) return Slope(parse_int(t), 1);
  return Slope(parse_int(t.substr(0, slash)), parse_int(t.substr(slash + 1)));
}

std::vector<Slope> parse_slopes(const std::string& csv) {
  std::vector<Slope> out;
  size_t start = 0;
  while (start <= csv.size()) {
    const size_t comma = csv.find(',', start);
    out.push_back(Slope::parse(csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace shadow

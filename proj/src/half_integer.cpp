#include "shadowcalc/half_integer.hpp"

#include <charconv>

namespace shadow {

std::optional<HalfInteger> HalfInteger::parse(std::string_view text) {
  bool half = false;
  if (text.size() > 2 && text.substr(text.size() - 2) == "/2") {
    half = true;
    text.remove_suffix(2);
  }
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return std::nullopt;
  if (text.front() == '+' || (text.front() == '-' && text.size() == 1)) return std::nullopt;
  int64_t n = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  if (half) return from_twice(n);
  return from_int(n);
}

std::string HalfInteger::to_string() const {
  if (is_integral()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

}  // namespace shadow

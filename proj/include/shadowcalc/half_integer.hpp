#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace shadow {

// Exact value twice_value / 2. Gleams never need any other denominator.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;
  static constexpr HalfInteger from_twice(int64_t twice) {
    HalfInteger h;
    h.twice_ = twice;
    return h;
  }
  static constexpr HalfInteger from_int(int64_t n) { return from_twice(2 * n); }

  constexpr int64_t twice_value() const { return twice_; }
  constexpr bool is_integral() const { return twice_ % 2 == 0; }
  // Only meaningful when is_integral().
  constexpr int64_t as_int() const { return twice_ / 2; }

  constexpr HalfInteger operator+(HalfInteger o) const { return from_twice(twice_ + o.twice_); }
  constexpr HalfInteger operator-(HalfInteger o) const { return from_twice(twice_ - o.twice_); }
  constexpr HalfInteger operator-() const { return from_twice(-twice_); }
  HalfInteger& operator+=(HalfInteger o) {
    twice_ += o.twice_;
    return *this;
  }
  constexpr auto operator<=>(const HalfInteger&) const = default;

  // "3", "-1/2", "+5/2". Anything else yields nullopt.
  static std::optional<HalfInteger> parse(std::string_view text);
  std::string to_string() const;

 private:
  int64_t twice_ = 0;
};

}  // namespace shadow

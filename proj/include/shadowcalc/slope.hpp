#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace shadow {

// p/q with gcd(p,q) = 1 and q >= 0; infinity is 1/0.
class Slope {
 public:
  Slope() = default;
  Slope(int64_t p, int64_t q);  // normalizes; throws DomainError for 0/0
  static Slope infinity() { return Slope(1, 0); }
  static Slope integer(int64_t n) { return Slope(n, 1); }

  int64_t p() const { return p_; }
  int64_t q() const { return q_; }
  bool is_infinite() const { return q_ == 0; }
  bool is_integer() const { return q_ == 1; }
  bool equals(int64_t p, int64_t q) const { return *this == Slope(p, q); }
  // 1/n for some integer n, infinity included (n = 0).
  bool is_unit_fraction() const { return p_ == 1 || p_ == -1; }
  // -1/s
  Slope negative_reciprocal() const { return Slope(-q_, p_); }

  bool operator==(const Slope&) const = default;
  std::string to_string() const;  // "p/q", "inf" for infinity

  // "inf", "1/0", "p/q", "n"
  static Slope parse(const std::string& text);

 private:
  int64_t p_ = 1;
  int64_t q_ = 0;
};

std::vector<Slope> parse_slopes(const std::string& csv);

}  // namespace shadow

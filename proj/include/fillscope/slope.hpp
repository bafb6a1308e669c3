#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fillscope {

/// Reduced fraction p/q with q >= 1. The meridian slope 1/0 is not a Slope.
class Slope {
 public:
  /// Throws BadParameters unless q >= 1 and gcd(p, q) == 1.
  Slope(std::int64_t p, std::int64_t q);

  std::int64_t p() const noexcept { return p_; }
  std::int64_t q() const noexcept { return q_; }

  friend bool operator==(const Slope&, const Slope&) = default;
  friend auto operator<=>(const Slope&, const Slope&) = default;

 private:
  std::int64_t p_;
  std::int64_t q_;
};

std::string to_string(const Slope& s);

/// {p/q : |p| <= max_p, 1 <= q <= max_q, gcd(p, q) = 1}, ordered by q, then p.
std::vector<Slope> scan_window(std::int64_t max_p, std::int64_t max_q);

}  // namespace fillscope

#include "fillscope/slope.hpp"

#include <numeric>

#include "fillscope/error.hpp"

namespace fillscope {

Slope::Slope(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
  if (q < 1) throw Error(ErrorKind::BadParameters, "slope denominator must be >= 1");
  if (std::gcd(p, q) != 1)
    throw Error(ErrorKind::BadParameters,
                "slope " + std::to_string(p) + "/" + std::to_string(q) + " is not reduced");
}

std::string to_string(const Slope& s) {
  return std::to_string(s.p()) + "/" + std::to_string(s.q());
}

std::vector<Slope> scan_window(std::int64_t max_p, std::int64_t max_q) {
  if (max_p < 0 || max_q < 1) throw Error(ErrorKind::BadParameters, "empty slope window");
  std::vector<Slope> out;
  for (std::int64_t q = 1; q <= max_q; ++q)
    for (std::int64_t p = -max_p; p <= max_p; ++p)
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
  return out;
}

}  // namespace fillscope

#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace fillscope {

/// Exit codes of `run`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;  // verify / atlas certify found a problem
inline constexpr int kExitInputError = 2;
inline constexpr int kExitUnknown = 3;      // finished, but some answer is Unknown

/// The fillscope command line. Results go to `out`; diagnostics go to `err`
/// prefixed with "error:".
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// FILLSCOPE_BUDGET_SCALE as a positive rational ("3", "0.5", "1/4");
/// 1 when unset. Throws BadParameters on malformed values.
double budget_scale_from(const std::optional<std::string>& value);

}  // namespace fillscope

#pragma once

#include <cstdint>
#include <optional>

#include "fillscope/presentation.hpp"

namespace fillscope {

/// Felsch-strategy enumeration over the trivial subgroup. Written apart from
/// the HLT enumerator so certificate replay does not depend on it. The final
/// table is re-scanned against every relator at every coset before the order
/// is returned; nullopt when `max_cosets` definitions are not enough.
std::optional<std::uint64_t> felsch_order(const Presentation& p, std::uint64_t max_cosets = 2'000'000);

}  // namespace fillscope

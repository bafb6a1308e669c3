#pragma once

#include <string>
#include <vector>

#include "fillscope/presentation.hpp"

namespace fillscope {

struct TietzeEffort {
  std::size_t max_moves = 200;
};

struct TietzeResult {
  Presentation presentation;
  /// Original generators -> words in the simplified generators. An
  /// isomorphism on the level of groups.
  GeneratorMap to_simplified;
  std::vector<std::string> moves;
};

/// Greedy Tietze simplification: drops trivial and duplicate relators,
/// shortens relators by substituting long pieces of other relators, and
/// eliminates generators that occur exactly once in some relator when that
/// does not increase total relator length. Peripheral words follow every
/// generator elimination.
TietzeResult tietze_simplify(const Presentation& p, const TietzeEffort& effort = {});

}  // namespace fillscope

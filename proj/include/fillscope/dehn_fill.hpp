#pragma once

#include "fillscope/atlas.hpp"
#include "fillscope/slope.hpp"

namespace fillscope {

/// pi_1 of the filling of `base_name` along `slope`: base relators plus the
/// single filling relator mu^p lambda^q (last in the relator list).
struct FilledPresentation {
  std::string base_name;
  Slope slope;
  Presentation presentation;
  Word filling_relator;
};

/// mu^p lambda^q in this order. Throws NoPeripheralData.
Word slope_relator(const AtlasEntry& entry, const Slope& s);

FilledPresentation fill(const AtlasEntry& entry, const Slope& s);

/// The trivial (meridian) filling, kept apart from Slope on purpose.
Presentation fill_meridian(const AtlasEntry& entry);

/// The quotient map G(K) -> pi_1(K(r)): identity on generators.
GeneratorMap filling_map(const AtlasEntry& entry, const FilledPresentation& filled);

}  // namespace fillscope

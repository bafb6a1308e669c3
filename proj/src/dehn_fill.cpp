#include "fillscope/dehn_fill.hpp"

#include "fillscope/error.hpp"

namespace fillscope {

Word slope_relator(const AtlasEntry& entry, const Slope& s) {
  return power(entry.meridian(), s.p()) * power(entry.longitude(), s.q());
}

FilledPresentation fill(const AtlasEntry& entry, const Slope& s) {
  Word r = slope_relator(entry, s);
  // The filled group carries no peripheral decoration.
  Presentation filled = entry.presentation.with_peripheral(std::nullopt).with_relators({r});
  return FilledPresentation{entry.name, s, std::move(filled), std::move(r)};
}

Presentation fill_meridian(const AtlasEntry& entry) {
  return entry.presentation.with_peripheral(std::nullopt).with_relators({entry.meridian()});
}

GeneratorMap filling_map(const AtlasEntry& entry, const FilledPresentation& filled) {
  if (filled.presentation.generators() != entry.presentation.generators())
    throw Error(ErrorKind::BadParameters, "filled presentation does not match the entry");
  std::vector<Word> images;
  for (GenId g = 0; g < entry.presentation.generator_count(); ++g) images.push_back(Word::generator(g));
  return GeneratorMap(entry.presentation, std::move(images));
}

}  // namespace fillscope

#include "fillscope/presentation.hpp"

#include <algorithm>

#include "fillscope/error.hpp"

namespace fillscope {

Word normalize_relator(const Word& w) { return cyclically_reduce(w).reduced; }

Presentation::Presentation(std::vector<std::string> generators, std::vector<Word> relators,
                           std::optional<Peripheral> peripheral)
    : gens_(std::move(generators)), periph_(std::move(peripheral)) {
  rels_.reserve(relators.size());
  for (const auto& r : relators) {
    check_word(r);
    Word n = normalize_relator(r);
    if (!n.is_identity()) rels_.push_back(std::move(n));
  }
  if (periph_) {
    check_word(periph_->meridian);
    check_word(periph_->longitude);
    if (periph_->meridian.is_identity() || periph_->longitude.is_identity())
      throw Error(ErrorKind::BadParameters, "peripheral words must be nontrivial");
  }
}

std::optional<GenId> Presentation::find_generator(const std::string& name) const {
  const auto it = std::find(gens_.begin(), gens_.end(), name);
  if (it == gens_.end()) return std::nullopt;
  return static_cast<GenId>(it - gens_.begin());
}

std::uint64_t Presentation::total_length() const noexcept {
  std::uint64_t n = 0;
  for (const auto& r : rels_) n += r.length();
  return n;
}

void Presentation::check_word(const Word& w) const {
  if (w.generator_bound() > gens_.size())
    throw Error(ErrorKind::GeneratorOutOfRange,
                "word uses generator " + std::to_string(w.generator_bound() - 1) +
                    " but the table has " + std::to_string(gens_.size()));
}

Presentation Presentation::with_relators(std::vector<Word> extra) const {
  std::vector<Word> rels = rels_;
  rels.insert(rels.end(), extra.begin(), extra.end());
  return Presentation(gens_, std::move(rels), periph_);
}

Presentation Presentation::with_peripheral(std::optional<Peripheral> p) const {
  return Presentation(gens_, rels_, std::move(p));
}

GeneratorMap::GeneratorMap(Presentation source, std::vector<Word> images)
    : source_(std::move(source)), images_(std::move(images)) {
  if (images_.size() != source_.generator_count())
    throw Error(ErrorKind::BadParameters, "generator map needs one image per source generator");
}

GeneratorMap GeneratorMap::identity(const Presentation& p) {
  std::vector<Word> images;
  for (GenId g = 0; g < p.generator_count(); ++g) images.push_back(Word::generator(g));
  return GeneratorMap(p, std::move(images));
}

Word evaluate_map(const GeneratorMap& f, const Word& u) {
  f.source().check_word(u);
  Word out;
  for (const auto& s : u.syllables()) out = out * power(f.images()[s.gen], s.exp);
  return out;
}

TrivialityOracle free_group_oracle() {
  return [](const Word& w) -> std::optional<bool> { return w.is_identity(); };
}

MapCheck check_map_is_homomorphism(const GeneratorMap& f, const Presentation& target,
                                   const TrivialityOracle& oracle) {
  for (const auto& img : f.images()) target.check_word(img);
  MapCheck out;
  for (std::size_t i = 0; i < f.source().relators().size(); ++i) {
    const auto answer = oracle(evaluate_map(f, f.source().relators()[i]));
    if (answer != std::optional<bool>(true)) {
      out.failing_relator = i;
      out.refuted = answer.has_value();
      return out;
    }
  }
  out.verdict = MapVerdict::Certified;
  return out;
}

}  // namespace fillscope

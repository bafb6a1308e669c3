#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fillscope/word.hpp"

namespace fillscope {

struct Peripheral {
  Word meridian;
  Word longitude;

  friend bool operator==(const Peripheral&, const Peripheral&) = default;
};

/// Finitely presented group, optionally decorated with a meridian/longitude
/// pair. Relators are kept freely and cyclically reduced; the empty relator
/// is never stored.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<std::string> generators, std::vector<Word> relators,
               std::optional<Peripheral> peripheral = std::nullopt);

  const std::vector<std::string>& generators() const noexcept { return gens_; }
  const std::vector<Word>& relators() const noexcept { return rels_; }
  const std::optional<Peripheral>& peripheral() const noexcept { return periph_; }
  std::size_t generator_count() const noexcept { return gens_.size(); }
  std::optional<GenId> find_generator(const std::string& name) const;

  /// Total letter length of all relators.
  std::uint64_t total_length() const noexcept;

  /// Throws GeneratorOutOfRange if w uses a generator outside this table.
  void check_word(const Word& w) const;

  Presentation with_relators(std::vector<Word> extra) const;
  Presentation with_peripheral(std::optional<Peripheral> p) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> gens_;
  std::vector<Word> rels_;
  std::optional<Peripheral> periph_;
};

/// Normalizes a relator: free + cyclic reduction.
Word normalize_relator(const Word& w);

/// Homomorphism from a free group on `source` generators, given by images.
class GeneratorMap {
 public:
  GeneratorMap(Presentation source, std::vector<Word> images);

  static GeneratorMap identity(const Presentation& p);

  const Presentation& source() const noexcept { return source_; }
  const std::vector<Word>& images() const noexcept { return images_; }

 private:
  Presentation source_;
  std::vector<Word> images_;
};

Word evaluate_map(const GeneratorMap& f, const Word& u);

/// Three-valued triviality answer from an oracle: true = certified trivial,
/// false = certified nontrivial, nullopt = budget exhausted / no claim.
using TrivialityOracle = std::function<std::optional<bool>(const Word&)>;

/// Oracle for a free target group: a word is trivial iff it freely reduces
/// to the identity.
TrivialityOracle free_group_oracle();

enum class MapVerdict { Certified, Unknown };

struct MapCheck {
  MapVerdict verdict = MapVerdict::Unknown;
  /// First source relator whose image was not certified trivial.
  std::optional<std::size_t> failing_relator;
  /// True when the oracle certified that relator's image nontrivial.
  bool refuted = false;
};

MapCheck check_map_is_homomorphism(const GeneratorMap& f, const Presentation& target,
                                   const TrivialityOracle& oracle);

}  // namespace fillscope

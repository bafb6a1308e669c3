#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fillscope/presentation.hpp"

namespace fillscope {

using Coset = std::int32_t;
inline constexpr Coset kUndefined = -1;

/// Column index of a signed letter (+k generator k-1, -k its inverse).
inline std::size_t letter_column(int letter) {
  return letter > 0 ? 2 * static_cast<std::size_t>(letter - 1)
                    : 2 * static_cast<std::size_t>(-letter - 1) + 1;
}
inline std::size_t inverse_column(std::size_t col) { return col ^ 1U; }

/// Permutation action of generators (and their inverses) on cosets.
///
/// Cosets are 0-based in memory; the text dump is 1-based. Column 2g holds the
/// action of generator g, column 2g+1 the action of its inverse.
class CosetTable {
 public:
  CosetTable() = default;
  CosetTable(std::size_t n_gens, std::size_t n_cosets, std::vector<Coset> entries,
             bool complete, std::vector<Word> subgroup_gens);

  /// Builds a table from generator permutations (inverse columns derived).
  static CosetTable from_permutations(const std::vector<std::vector<Coset>>& perms,
                                      std::vector<Word> subgroup_gens = {});

  std::size_t generator_count() const noexcept { return n_gens_; }
  std::size_t column_count() const noexcept { return 2 * n_gens_; }
  std::size_t coset_count() const noexcept { return n_cosets_; }
  bool complete() const noexcept { return complete_; }
  const std::vector<Word>& subgroup_generators() const noexcept { return subgroup_; }

  Coset at(Coset c, std::size_t col) const {
    return entries_[static_cast<std::size_t>(c) * column_count() + col];
  }
  const std::vector<Coset>& entries() const noexcept { return entries_; }

  /// Action of generator g as a permutation (requires a complete table).
  std::vector<Coset> generator_permutation(GenId g) const;

  friend bool operator==(const CosetTable&, const CosetTable&) = default;

 private:
  std::size_t n_gens_ = 0;
  std::size_t n_cosets_ = 0;
  std::vector<Coset> entries_;
  bool complete_ = false;
  std::vector<Word> subgroup_;
};

/// Image of `start` under w; nullopt when some step is undefined.
std::optional<Coset> evaluate_on_cosets(const CosetTable& t, const Word& w, Coset start);

/// Full permutation image of w; nullopt unless every step is defined.
std::optional<std::vector<Coset>> permutation_of(const CosetTable& t, const Word& w);

bool is_identity_permutation(const std::vector<Coset>& perm);

struct TableCheck {
  bool ok = false;
  std::string reason;
};

/// Checker pass: every column is a bijection, inverse columns agree, every
/// relator acts trivially at every coset and every subgroup generator fixes
/// coset 0. Shares no code with the enumerators.
TableCheck verify_table(const CosetTable& t, const Presentation& p);

/// Line-oriented dump: header, then one `perm <name>:` row per generator.
std::string dump_table(const CosetTable& t, const std::vector<std::string>& gen_names);
CosetTable parse_table_dump(const std::string& text, std::vector<std::string>* gen_names = nullptr);

}  // namespace fillscope

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fillscope/coset_table.hpp"
#include "fillscope/presentation.hpp"

namespace fillscope {

struct EnumBudget {
  std::uint64_t max_cosets = 2'000'000;
  /// Work units: definitions, deductions, merges and lookahead relator scans.
  std::uint64_t max_deductions = 400'000'000;

  /// Throws BadParameters unless both limits are positive.
  void validate() const;
};

/// Outcome of one coset enumeration. On success `table` is complete and has
/// passed verify_table; otherwise `table` holds the partial table at the
/// point the budget ran out.
struct EnumResult {
  bool complete = false;
  CosetTable table;
  std::uint64_t work = 0;
  std::uint64_t max_live = 0;
  std::string exhausted_reason;

  std::optional<std::uint64_t> index() const {
    if (!complete) return std::nullopt;
    return table.coset_count();
  }
};

/// HLT coset enumeration with lookahead. Deterministic in the order of
/// generators, relators and subgroup words.
EnumResult enumerate(const Presentation& p, const std::vector<Word>& subgroup,
                     const EnumBudget& budget = {});

/// Order of the group via enumeration over the trivial subgroup.
EnumResult group_order(const Presentation& p, const EnumBudget& budget = {});

/// Triviality oracle backed by a complete table over the trivial subgroup.
TrivialityOracle coset_table_oracle(CosetTable regular_table);

// ---- low-index subgroups ------------------------------------------------

struct LowIndexBudget {
  /// Node limit for each top-level branch of the search tree.
  std::uint64_t max_nodes_per_branch = 50'000;
};

struct LowIndexReport {
  std::uint64_t tables_emitted = 0;
  std::uint64_t nodes = 0;
  /// Indices of top-level branches abandoned on budget, in search order.
  std::vector<std::size_t> exhausted_branches;
  bool stopped_by_consumer = false;

  bool exhaustive() const { return exhausted_branches.empty() && !stopped_by_consumer; }
};

/// Receives each table; returning false stops the search.
using TableConsumer = std::function<bool(const CosetTable&)>;

/// Enumerates one complete coset table per conjugacy class of subgroups of
/// index <= max_index (tables in standard form, lexicographically least over
/// all choices of base coset). Emission order is deterministic.
LowIndexReport low_index_subgroups(const Presentation& p, std::size_t max_index,
                                   const LowIndexBudget& budget, const TableConsumer& consume);

/// Convenience: collects every emitted table.
std::vector<CosetTable> low_index_tables(const Presentation& p, std::size_t max_index,
                                         const LowIndexBudget& budget = {},
                                         LowIndexReport* report = nullptr);

}  // namespace fillscope

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fillscope/atlas.hpp"
#include "fillscope/coset_enum.hpp"
#include "fillscope/homology.hpp"
#include "fillscope/slope.hpp"
#include "fillscope/tietze.hpp"

namespace fillscope {

/// mu^(n-m) y mu^m y^-1 with m >= 2, |n| in {1, 2}.
struct BSCandidate {
  std::string knot;
  Word y;
  std::int64_t m = 2;
  std::int64_t n = 1;
  Word word;
  /// y commuted with mu in every low-index quotient tried.
  bool degenerate = false;
  std::size_t quotients_checked = 0;
};

/// Throws BadParameters (m <= 1, |n| not 1 or 2, y trivial) or NoPeripheralData.
BSCandidate bs_candidate(const AtlasEntry& knot, const Word& y, std::int64_t m, std::int64_t n,
                         std::size_t degeneracy_index = 6);

struct CombinedElement {
  Word g;
  Word h;
  std::int64_t m = 1;
  Word word;  // g^m h
};

/// Throws BadParameters when m < 1.
CombinedElement shrink_combine(const Word& g, const Word& h, std::int64_t m);

enum class Verdict { Survives, Dies, Unknown };
const char* to_string(Verdict v);

enum class WitnessKind {
  None,
  Abelian,   // homomorphism to Z/d or Z
  Quotient,  // permutation representation from the low-index search
  Order,     // regular representation from a complete enumeration
};
const char* to_string(WitnessKind k);

struct ScanBudgets {
  std::size_t max_index = 12;
  LowIndexBudget low_index;
  EnumBudget enumeration;
  TietzeEffort tietze;
  unsigned jobs = 1;

  /// Multiplies every numeric budget by `factor` (index excepted).
  ScanBudgets scaled(double factor) const;
};

/// Outcome at one slope. Tables act by the original knot generators.
struct SlopeVerdict {
  Slope slope;
  Verdict verdict = Verdict::Unknown;
  WitnessKind kind = WitnessKind::None;
  std::optional<AbelianWitness> abelian;
  std::optional<CosetTable> table;
  std::string detail;
};

struct SurvivalReport {
  std::string knot;
  Presentation knot_presentation;
  Word element;
  std::vector<SlopeVerdict> verdicts;
  ScanBudgets budgets;

  std::size_t count(Verdict v) const;
};

/// Per-slope pipeline: abelian witness, then low-index quotients of the
/// Tietze-simplified filling, then a full enumeration. Slopes run on
/// `budgets.jobs` threads; the report is in window order regardless.
SurvivalReport survival_scan(const AtlasEntry& knot, const Word& g, const std::vector<Slope>& window,
                             const ScanBudgets& budgets = {});

/// The single-slope pipeline behind survival_scan.
SlopeVerdict scan_slope(const AtlasEntry& knot, const Word& g, const Slope& s, const ScanBudgets& budgets);

struct IntersectionEntry {
  Slope slope;
  Verdict verdict;
};

/// Dies where every report dies, Survives where any survives, else Unknown.
/// Throws WindowMismatch unless all reports share knot and window.
std::vector<IntersectionEntry> scan_summary_intersection(const std::vector<SurvivalReport>& reports);

}  // namespace fillscope

#include "fillscope/persistence.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "fillscope/dehn_fill.hpp"
#include "fillscope/error.hpp"

namespace fillscope {

BSCandidate bs_candidate(const AtlasEntry& knot, const Word& y, std::int64_t m, std::int64_t n,
                         std::size_t degeneracy_index) {
  if (m <= 1) throw Error(ErrorKind::BadParameters, "m must be at least 2");
  if (n != 1 && n != -1 && n != 2 && n != -2) throw Error(ErrorKind::BadParameters, "|n| must be 1 or 2");
  if (y.is_identity()) throw Error(ErrorKind::BadParameters, "y must be a nontrivial word");
  knot.presentation.check_word(y);
  const Word& mu = knot.meridian();
  BSCandidate c;
  c.knot = knot.name;
  c.y = y;
  c.m = m;
  c.n = n;
  c.word = power(mu, n - m) * y * power(mu, m) * invert(y);

  const Word comm = commutator(mu, y);
  bool separated = false;
  low_index_subgroups(knot.presentation, degeneracy_index, {}, [&](const CosetTable& t) {
    ++c.quotients_checked;
    const auto perm = permutation_of(t, comm);
    separated = perm && !is_identity_permutation(*perm);
    return !separated;
  });
  c.degenerate = !separated;
  return c;
}

CombinedElement shrink_combine(const Word& g, const Word& h, std::int64_t m) {
  if (m < 1) throw Error(ErrorKind::BadParameters, "m must be at least 1");
  return CombinedElement{g, h, m, power(g, m) * h};
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Survives: return "Survives";
    case Verdict::Dies: return "Dies";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

const char* to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::None: return "none";
    case WitnessKind::Abelian: return "abelian";
    case WitnessKind::Quotient: return "quotient";
    case WitnessKind::Order: return "order";
  }
  return "?";
}

ScanBudgets ScanBudgets::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor))
    throw Error(ErrorKind::BadParameters, "budget scale must be a positive number");
  const auto mul = [&](std::uint64_t v) {
    const double x = std::round(static_cast<double>(v) * factor);
    return x < 1.0 ? std::uint64_t{1} : static_cast<std::uint64_t>(x);
  };
  ScanBudgets out = *this;
  out.low_index.max_nodes_per_branch = mul(low_index.max_nodes_per_branch);
  out.enumeration.max_cosets = mul(enumeration.max_cosets);
  out.enumeration.max_deductions = mul(enumeration.max_deductions);
  out.tietze.max_moves = static_cast<std::size_t>(mul(tietze.max_moves));
  return out;
}

std::size_t SurvivalReport::count(Verdict v) const {
  std::size_t n = 0;
  for (const auto& s : verdicts) n += s.verdict == v ? 1 : 0;
  return n;
}

namespace {

// Re-expresses a table of the simplified group through the original
// generators, which map to words in the simplified ones.
CosetTable to_original_generators(const CosetTable& t, const GeneratorMap& to_simplified) {
  std::vector<std::vector<Coset>> perms;
  for (const Word& w : to_simplified.images()) {
    auto p = permutation_of(t, w);
    if (!p) throw std::logic_error("incomplete table passed to to_original_generators");
    perms.push_back(std::move(*p));
  }
  return CosetTable::from_permutations(perms);
}

void check_or_die(const CosetTable& t, const Presentation& p) {
  const TableCheck c = verify_table(t, p);
  if (!c.ok) throw std::logic_error("translated table failed the checker: " + c.reason);
}

}  // namespace

SlopeVerdict scan_slope(const AtlasEntry& knot, const Word& g, const Slope& s, const ScanBudgets& budgets) {
  const FilledPresentation filled = fill(knot, s);
  const Presentation& P = filled.presentation;
  SlopeVerdict out{s, Verdict::Unknown, WitnessKind::None, std::nullopt, std::nullopt, ""};

  if (auto wit = abelian_witness(g, P)) {
    if (!check_abelian_witness(*wit, g, P)) throw std::logic_error("abelian witness failed its own check");
    out.verdict = Verdict::Survives;
    out.kind = WitnessKind::Abelian;
    out.detail = wit->image_order ? "image order " + wit->image_order->get_str() : "image of infinite order";
    out.abelian = std::move(wit);
    return out;
  }

  const TietzeResult simp = tietze_simplify(P, budgets.tietze);
  const Word g_simple = evaluate_map(simp.to_simplified, g);

  std::optional<CosetTable> quotient;
  std::uint64_t tables = 0;
  const LowIndexReport li =
      low_index_subgroups(simp.presentation, budgets.max_index, budgets.low_index, [&](const CosetTable& t) {
        ++tables;
        const auto perm = permutation_of(t, g_simple);
        if (perm && !is_identity_permutation(*perm)) {
          quotient = t;
          return false;
        }
        return true;
      });
  if (quotient) {
    CosetTable table = to_original_generators(*quotient, simp.to_simplified);
    check_or_die(table, P);
    out.verdict = Verdict::Survives;
    out.kind = WitnessKind::Quotient;
    out.detail = "acts nontrivially on " + std::to_string(table.coset_count()) + " points";
    out.table = std::move(table);
    return out;
  }

  const EnumResult en = group_order(simp.presentation, budgets.enumeration);
  if (en.complete) {
    CosetTable table = to_original_generators(en.table, simp.to_simplified);
    check_or_die(table, P);
    const auto perm = permutation_of(table, g);
    const bool trivial = perm && is_identity_permutation(*perm);
    out.verdict = trivial ? Verdict::Dies : Verdict::Survives;
    out.kind = WitnessKind::Order;
    out.detail = "group order " + std::to_string(table.coset_count());
    out.table = std::move(table);
    return out;
  }

  std::ostringstream d;
  d << "low-index " << tables << " tables" << (li.exhaustive() ? " (exhaustive)" : " (cut)")
    << ", enumeration: " << en.exhausted_reason;
  out.detail = d.str();
  return out;
}

SurvivalReport survival_scan(const AtlasEntry& knot, const Word& g, const std::vector<Slope>& window,
                             const ScanBudgets& budgets) {
  if (g.is_identity()) throw Error(ErrorKind::BadParameters, "element must be nontrivial as a free word");
  knot.presentation.check_word(g);
  budgets.enumeration.validate();
  for (std::size_t i = 0; i < window.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (window[i] == window[j]) throw Error(ErrorKind::BadParameters, "slope " + to_string(window[i]) + " repeated");

  std::vector<std::optional<SlopeVerdict>> results(window.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    for (std::size_t i = next++; i < window.size(); i = next++) {
      try {
        results[i] = scan_slope(knot, g, window[i], budgets);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1U, std::min<unsigned>(budgets.jobs, static_cast<unsigned>(window.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < jobs; ++k) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  SurvivalReport report{knot.name, knot.presentation, g, {}, budgets};
  for (auto& r : results) report.verdicts.push_back(std::move(*r));
  return report;
}

std::vector<IntersectionEntry> scan_summary_intersection(const std::vector<SurvivalReport>& reports) {
  if (reports.empty()) throw Error(ErrorKind::WindowMismatch, "no reports to intersect");
  const SurvivalReport& first = reports.front();
  for (const auto& r : reports) {
    if (r.knot != first.knot) throw Error(ErrorKind::WindowMismatch, "reports are over different knots");
    if (r.verdicts.size() != first.verdicts.size())
      throw Error(ErrorKind::WindowMismatch, "reports have windows of different size");
    for (std::size_t i = 0; i < r.verdicts.size(); ++i)
      if (!(r.verdicts[i].slope == first.verdicts[i].slope))
        throw Error(ErrorKind::WindowMismatch, "reports disagree at window position " + std::to_string(i));
  }
  std::vector<IntersectionEntry> out;
  for (std::size_t i = 0; i < first.verdicts.size(); ++i) {
    bool all_die = true;
    bool any_survive = false;
    for (const auto& r : reports) {
      all_die = all_die && r.verdicts[i].verdict == Verdict::Dies;
      any_survive = any_survive || r.verdicts[i].verdict == Verdict::Survives;
    }
    out.push_back({first.verdicts[i].slope,
                   all_die ? Verdict::Dies : any_survive ? Verdict::Survives : Verdict::Unknown});
  }
  return out;
}

}  // namespace fillscope

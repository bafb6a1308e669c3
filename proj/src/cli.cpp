#include "fillscope/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "fillscope/atlas.hpp"
#include "fillscope/dehn_fill.hpp"
#include "fillscope/error.hpp"
#include "fillscope/homology.hpp"
#include "fillscope/persistence.hpp"
#include "fillscope/report.hpp"
#include "fillscope/sl2.hpp"
#include "fillscope/textio.hpp"
#include "fillscope/tietze.hpp"

namespace fillscope {

double budget_scale_from(const std::optional<std::string>& value) {
  if (!value || value->empty()) return 1.0;
  const std::string& s = *value;
  const auto bad = [&] { return Error(ErrorKind::BadParameters, "FILLSCOPE_BUDGET_SCALE must be a positive rational, got '" + s + "'"); };
  double v = 0.0;
  try {
    std::size_t used = 0;
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
      v = std::stod(s, &used);
      if (used != s.size()) throw bad();
    } else {
      const std::string num = s.substr(0, slash);
      const std::string den = s.substr(slash + 1);
      const double a = std::stod(num, &used);
      if (used != num.size()) throw bad();
      const double b = std::stod(den, &used);
      if (used != den.size() || b == 0.0) throw bad();
      v = a / b;
    }
  } catch (const std::logic_error&) {
    throw bad();
  }
  if (!(v > 0.0) || !std::isfinite(v)) throw bad();
  return v;
}

namespace {

AtlasEntry resolve_knot(const std::string& arg) {
  if (auto e = find_atlas_entry(arg)) return *e;
  if (std::filesystem::is_regular_file(arg)) return external_entry(arg, parse_presentation(read_source(arg)));
  throw Error(ErrorKind::BadParameters, "unknown knot '" + arg + "' (neither an atlas name nor a file)");
}

std::string format_complex(Complex z) {
  std::ostringstream s;
  s << std::setprecision(12) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return s.str();
}

std::vector<Slope> parse_window(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw Error(ErrorKind::BadParameters, "--window expects P,Q");
  try {
    std::size_t used = 0;
    const std::string ps = text.substr(0, comma);
    const std::string qs = text.substr(comma + 1);
    const long long p = std::stoll(ps, &used);
    if (used != ps.size()) throw std::invalid_argument("P");
    const long long q = std::stoll(qs, &used);
    if (used != qs.size()) throw std::invalid_argument("Q");
    if (p < 0 || q < 1) throw Error(ErrorKind::BadParameters, "--window needs P >= 0 and Q >= 1");
    return scan_window(p, q);
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::BadParameters, "--window expects two integers P,Q");
  }
}

EnumBudget scaled_enum_budget(double scale, std::optional<std::uint64_t> cosets) {
  EnumBudget b = ScanBudgets{}.scaled(scale).enumeration;
  if (cosets) b.max_cosets = *cosets;
  b.validate();
  return b;
}

// Knot group with the peripheral decoration dropped, optionally filled and
// with extra relators.
Presentation group_of(const AtlasEntry& e, const std::optional<std::string>& slope,
                      const std::vector<std::string>& kills) {
  Presentation p = slope ? fill(e, parse_slope(*slope)).presentation : e.presentation.with_peripheral(std::nullopt);
  std::vector<Word> extra;
  for (const auto& k : kills) extra.push_back(parse_word(k, e.presentation));
  return p.with_relators(extra);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"fillscope: knot groups under Dehn filling"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string knot;
  std::string slope_arg;
  std::optional<std::string> slope_opt;
  std::vector<std::string> kills;
  bool simplify = false;
  std::optional<std::uint64_t> coset_budget;
  std::string cert_path;

  // atlas
  auto* atlas = app.add_subcommand("atlas", "List, show or certify atlas entries");
  atlas->require_subcommand(1);
  auto* atlas_list = atlas->add_subcommand("list", "List atlas entries");
  auto* atlas_show = atlas->add_subcommand("show", "Print an entry in .fp format");
  atlas_show->add_option("name", knot, "Entry name")->required();
  auto* atlas_certify = atlas->add_subcommand("certify", "Run the longitude certificate battery");
  atlas_certify->add_option("name", knot, "Entry name (default: all knots)");
  std::size_t certify_index = 12;
  atlas_certify->add_option("--max-index", certify_index, "Largest low-index quotient")->check(CLI::Range(1, 30));

  auto* present = app.add_subcommand("present", "Print a knot presentation");
  present->add_option("knot", knot, "Atlas name or .fp file")->required();
  present->add_flag("--simplify", simplify, "Apply Tietze simplification");

  auto* fill_cmd = app.add_subcommand("fill", "Print the filled presentation");
  fill_cmd->add_option("knot", knot, "Atlas name or .fp file")->required();
  fill_cmd->add_option("slope", slope_arg, "Slope p/q")->required();
  fill_cmd->add_flag("--simplify", simplify, "Apply Tietze simplification");

  auto* homology = app.add_subcommand("homology", "First homology of a knot group or filling");
  homology->add_option("knot", knot, "Atlas name or .fp file")->required();
  homology->add_option("--slope", slope_opt, "Fill along p/q first");
  homology->add_option("--kill", kills, "Extra relator (repeatable)");

  auto* order = app.add_subcommand("order", "Group order by coset enumeration");
  order->add_option("knot", knot, "Atlas name or .fp file")->required();
  order->add_option("--slope", slope_opt, "Fill along p/q first");
  order->add_option("--kill", kills, "Extra relator (repeatable)");
  order->add_option("--coset-budget", coset_budget, "Coset limit")->check(CLI::PositiveNumber);
  order->add_option("--cert", cert_path, "Write a group-order certificate here");

  auto* bs = app.add_subcommand("bs-candidate", "Build mu^(n-m) y mu^m y^-1");
  std::string y_word;
  std::int64_t bs_m = 2;
  std::int64_t bs_n = 1;
  bs->add_option("knot", knot, "Atlas name or .fp file")->required();
  bs->add_option("--y", y_word, "The word y")->required();
  bs->add_option("--m", bs_m, "m >= 2");
  bs->add_option("--n", bs_n, "n with |n| = 1 or 2");

  auto* scan = app.add_subcommand("scan", "Survival scan over a slope window");
  std::string element;
  std::string window = "8,3";
  std::size_t index_budget = 0;
  std::optional<std::uint64_t> node_budget;
  unsigned jobs = 1;
  std::string out_path = "scan.report";
  scan->add_option("knot", knot, "Atlas name or .fp file")->required();
  scan->add_option("--element", element, "Element word")->required();
  scan->add_option("--window", window, "P,Q: |p| <= P, 1 <= q <= Q")->capture_default_str();
  scan->add_option("--index-budget", index_budget, "Largest low-index quotient (default 12)");
  scan->add_option("--node-budget", node_budget, "Low-index nodes per branch")->check(CLI::PositiveNumber);
  scan->add_option("--coset-budget", coset_budget, "Coset limit for full enumeration")->check(CLI::PositiveNumber);
  scan->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1U, 256U));
  scan->add_option("--out", out_path, "Report path; certificates go to <out>.certs/")->capture_default_str();

  auto* combine = app.add_subcommand("combine", "Form g^m h, or intersect scan reports");
  std::string g_word;
  std::string h_word;
  std::int64_t comb_m = 1;
  std::vector<std::string> intersect;
  combine->add_option("knot", knot, "Atlas name or .fp file");
  combine->add_option("gword", g_word, "The word g");
  combine->add_option("hword", h_word, "The word h");
  combine->add_option("--m", comb_m, "Exponent m >= 1");
  combine->add_option("--intersect", intersect, "Report files to intersect")->expected(1, -1);

  auto* trace = app.add_subcommand("trace", "Trace under the holonomy representation");
  std::string trace_word;
  std::string against;
  trace->add_option("knot", knot, "Two-bridge or figure-eight entry")->required();
  trace->add_option("word", trace_word, "Element word")->required();
  trace->add_option("--against", against, "Compare with this word for non-conjugacy");

  auto* verify = app.add_subcommand("verify", "Replay a report or certificate");
  std::string verify_path;
  std::uint64_t felsch_limit = 2'000'000;
  verify->add_option("file", verify_path, "Report or certificate file")->required();
  verify->add_option("--felsch-limit", felsch_limit, "Coset limit for the replay enumeration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    const double scale = budget_scale_from(
        std::getenv("FILLSCOPE_BUDGET_SCALE") ? std::optional<std::string>(std::getenv("FILLSCOPE_BUDGET_SCALE"))
                                               : std::nullopt);

    if (*atlas) {
      if (*atlas_list) {
        for (const auto& e : atlas_entries()) out << e.name << '\t' << e.provenance << '\n';
        return kExitOk;
      }
      if (*atlas_show) {
        const AtlasEntry e = resolve_knot(knot);
        out << "# " << e.name << ": " << e.provenance << '\n' << serialize(e.presentation) << '\n';
        return kExitOk;
      }
      std::vector<AtlasEntry> entries;
      if (knot.empty())
        entries = atlas_knots();
      else
        entries.push_back(resolve_knot(knot));
      bool ok = true;
      for (const auto& e : entries) {
        const EntryCertificate c = certify_entry(e, certify_index);
        out << e.name << (c.ok ? " certified" : " FAILED") << '\n';
        for (const auto& l : c.lines) out << "  " << l << '\n';
        ok = ok && c.ok;
      }
      return ok ? kExitOk : kExitCheckFailed;
    }

    if (*present) {
      const AtlasEntry e = resolve_knot(knot);
      if (!simplify) {
        out << serialize(e.presentation) << '\n';
        return kExitOk;
      }
      const TietzeResult t = tietze_simplify(e.presentation, ScanBudgets{}.scaled(scale).tietze);
      out << serialize(t.presentation) << '\n';
      return kExitOk;
    }

    if (*fill_cmd) {
      const AtlasEntry e = resolve_knot(knot);
      const FilledPresentation f = fill(e, parse_slope(slope_arg));
      out << serialize(simplify ? tietze_simplify(f.presentation, ScanBudgets{}.scaled(scale).tietze).presentation
                                : f.presentation)
          << '\n';
      return kExitOk;
    }

    if (*homology) {
      const AtlasEntry e = resolve_knot(knot);
      out << to_string(h1(group_of(e, slope_opt, kills))) << '\n';
      return kExitOk;
    }

    if (*order) {
      const AtlasEntry e = resolve_knot(knot);
      const Presentation p = group_of(e, slope_opt, kills);
      const EnumResult r = group_order(p, scaled_enum_budget(scale, coset_budget));
      if (!r.complete) {
        out << "unknown (" << r.exhausted_reason << ")\n";
        return kExitUnknown;
      }
      out << r.table.coset_count() << '\n';
      if (!cert_path.empty()) {
        std::ofstream f(cert_path);
        if (!(f << format_group_order_certificate(p, r.table)))
          throw Error(ErrorKind::Io, "cannot write " + cert_path);
      }
      return kExitOk;
    }

    if (*bs) {
      const AtlasEntry e = resolve_knot(knot);
      const BSCandidate c = bs_candidate(e, parse_word(y_word, e.presentation), bs_m, bs_n);
      const auto& gens = e.presentation.generators();
      out << "word " << serialize(c.word, gens) << '\n';
      const auto ab = abelianize_word(c.word, gens.size());
      const auto mu = abelianize_word(e.meridian(), gens.size());
      bool multiple = true;
      for (std::size_t i = 0; i < gens.size(); ++i) multiple = multiple && ab[i] == mu[i] * static_cast<long>(bs_n);
      out << "abelianization " << (multiple ? std::to_string(bs_n) + "*[mu]" : std::string("mismatch")) << '\n';
      out << "degenerate " << (c.degenerate ? "yes" : "no") << " (" << c.quotients_checked << " quotients checked)\n";
      return kExitOk;
    }

    if (*scan) {
      const AtlasEntry e = resolve_knot(knot);
      if (!e.is_knot()) throw Error(ErrorKind::NoPeripheralData, e.name + " has no peripheral data");
      ScanBudgets b = ScanBudgets{}.scaled(scale);
      if (index_budget > 0) b.max_index = index_budget;
      if (node_budget) b.low_index.max_nodes_per_branch = *node_budget;
      if (coset_budget) b.enumeration.max_cosets = *coset_budget;
      b.jobs = jobs;
      const std::vector<Slope> w = parse_window(window);
      const SurvivalReport r = survival_scan(e, parse_word(element, e.presentation), w, b);
      write_report(r, out_path);
      out << format_report(r, std::filesystem::path(out_path + ".certs").filename().string());
      return r.count(Verdict::Unknown) > 0 ? kExitUnknown : kExitOk;
    }

    if (*combine) {
      if (!intersect.empty()) {
        std::vector<SurvivalReport> reports;
        for (const auto& path : intersect) reports.push_back(read_report_verdicts(path));
        std::size_t dies = 0;
        for (const auto& entry : scan_summary_intersection(reports)) {
          out << serialize(entry.slope) << ' ' << to_string(entry.verdict) << '\n';
          dies += entry.verdict == Verdict::Dies ? 1 : 0;
        }
        out << "all-dies " << dies << '\n';
        return kExitOk;
      }
      if (knot.empty() || g_word.empty() || h_word.empty())
        throw Error(ErrorKind::BadParameters, "combine needs <knot> <g> <h> (or --intersect)");
      const AtlasEntry e = resolve_knot(knot);
      const CombinedElement c =
          shrink_combine(parse_word(g_word, e.presentation), parse_word(h_word, e.presentation), comb_m);
      out << serialize(c.word, e.presentation.generators()) << '\n';
      return kExitOk;
    }

    if (*trace) {
      const AtlasEntry e = resolve_knot(knot);
      const RepAssignment r = holonomy_for(e);
      const Word w = parse_word(trace_word, e.presentation);
      const NonperipheralityCertificate np = nonperipherality_certificate(r, e.meridian(), w);
      out << "trace " << format_complex(np.trace) << '\n';
      out << "defect " << r.max_relator_defect << " (tolerance " << kDefectTolerance << ")\n";
      out << "peripheral " << (np.verdict == PeripheralVerdict::NonPeripheral ? "NonPeripheral" : "Inconclusive")
          << " (separation " << np.separation << ", tolerance " << np.tolerance << ")\n";
      if (!against.empty()) {
        const NonconjugacyCertificate nc = nonconjugacy_certificate(r, w, parse_word(against, e.presentation));
        out << "against " << format_complex(nc.trace_v) << '\n';
        out << "conjugacy " << (nc.verdict == ConjugacyVerdict::Distinct ? "Distinct" : "Inconclusive")
            << " (separation " << nc.separation << ", tolerance " << nc.tolerance << ")\n";
      }
      return kExitOk;
    }

    if (*verify) {
      const VerifyResult v = verify_file(verify_path, felsch_limit);
      for (const auto& l : v.lines) out << l << '\n';
      if (v.ok)
        out << "verified " << v.replayed << " certificates, " << v.unknown << " unknown verdicts\n";
      else
        out << "verification FAILED\n";
      return v.ok ? kExitOk : kExitCheckFailed;
    }
  } catch (const ParseError& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return e.kind() == ErrorKind::CertificateFailure ? kExitCheckFailed : kExitInputError;
  }
  return kExitOk;
}

}  // namespace fillscope

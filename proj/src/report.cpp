#include "fillscope/report.hpp"

#include <fstream>
#include <sstream>

#include "fillscope/error.hpp"
#include "fillscope/textio.hpp"

namespace fillscope {

std::string certificate_file_name(const Slope& s) {
  std::string p = std::to_string(s.p());
  if (p.front() == '-') p = "m" + p.substr(1);
  return p + "_" + std::to_string(s.q()) + ".cert";
}

std::string format_certificate(const SurvivalReport& r, const SlopeVerdict& v) {
  const auto& gens = r.knot_presentation.generators();
  std::ostringstream out;
  out << "fillscope-certificate 1\n";
  out << "kind " << to_string(v.kind) << '\n';
  out << "verdict " << to_string(v.verdict) << '\n';
  out << "slope " << serialize(v.slope) << '\n';
  out << "element " << serialize(r.element, gens) << '\n';
  if (v.kind == WitnessKind::Abelian) {
    out << "modulus " << v.abelian->modulus.get_str() << '\n';
    out << "images";
    for (const auto& x : v.abelian->images) out << ' ' << x.get_str();
    out << '\n';
  } else if (v.table) {
    if (v.kind == WitnessKind::Order) out << "order " << v.table->coset_count() << '\n';
    out << dump_table(*v.table, gens);
  }
  out << "end-certificate\n";
  return out.str();
}

std::string format_report(const SurvivalReport& r, const std::string& cert_dir_name) {
  const auto& gens = r.knot_presentation.generators();
  std::ostringstream out;
  out << "fillscope-report 1\n";
  out << "knot " << r.knot << '\n';
  out << "presentation " << serialize(r.knot_presentation) << '\n';
  out << "element " << serialize(r.element, gens) << '\n';
  out << "budgets index=" << r.budgets.max_index << " nodes=" << r.budgets.low_index.max_nodes_per_branch
      << " cosets=" << r.budgets.enumeration.max_cosets << " work=" << r.budgets.enumeration.max_deductions
      << " tietze=" << r.budgets.tietze.max_moves << '\n';
  out << "window " << r.verdicts.size() << '\n';
  for (const auto& v : r.verdicts) {
    out << serialize(v.slope) << ' ' << to_string(v.verdict) << ' ' << to_string(v.kind) << ' ';
    if (v.verdict == Verdict::Unknown)
      out << '-';
    else
      out << cert_dir_name << '/' << certificate_file_name(v.slope);
    if (!v.detail.empty()) out << " # " << v.detail;
    out << '\n';
  }
  out << "summary survives=" << r.count(Verdict::Survives) << " dies=" << r.count(Verdict::Dies)
      << " unknown=" << r.count(Verdict::Unknown) << '\n';
  return out.str();
}

namespace {

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::Io, "cannot write " + path.string());
  f << text;
  if (!f) throw Error(ErrorKind::Io, "write failed for " + path.string());
}

}  // namespace

void write_report(const SurvivalReport& r, const std::filesystem::path& report_path) {
  const std::filesystem::path cert_dir = report_path.string() + ".certs";
  std::error_code ec;
  std::filesystem::create_directories(cert_dir, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot create " + cert_dir.string() + ": " + ec.message());
  for (const auto& v : r.verdicts)
    if (v.verdict != Verdict::Unknown) write_text(cert_dir / certificate_file_name(v.slope), format_certificate(r, v));
  write_text(report_path, format_report(r, cert_dir.filename().string()));
}

std::string format_group_order_certificate(const Presentation& p, const CosetTable& regular) {
  std::ostringstream out;
  out << "fillscope-certificate 1\n";
  out << "kind group-order\n";
  out << "presentation " << serialize(p.with_peripheral(std::nullopt)) << '\n';
  out << "order " << regular.coset_count() << '\n';
  out << dump_table(regular, p.generators());
  out << "end-certificate\n";
  return out.str();
}

SurvivalReport read_report_verdicts(const std::filesystem::path& report_path) {
  std::ifstream f(report_path);
  if (!f) throw Error(ErrorKind::Io, "cannot read " + report_path.string());
  const auto bad = [&](const std::string& why) {
    return Error(ErrorKind::SyntaxError, report_path.string() + ": " + why);
  };
  std::vector<std::string> lines;
  for (std::string line; std::getline(f, line);) lines.push_back(line);
  const auto value = [&](std::size_t i, const std::string& key) {
    if (i >= lines.size() || lines[i].rfind(key + " ", 0) != 0) throw bad("expected '" + key + "' on line " + std::to_string(i + 1));
    return lines[i].substr(key.size() + 1);
  };
  if (lines.empty() || lines[0] != "fillscope-report 1") throw bad("not a report");
  SurvivalReport r;
  r.knot = value(1, "knot");
  r.knot_presentation = parse_presentation(SourceText{value(2, "presentation"), report_path.string()});
  r.element = parse_word(value(3, "element"), r.knot_presentation);
  std::size_t n = 0;
  try {
    n = std::stoul(value(5, "window"));
  } catch (const std::logic_error&) {
    throw bad("bad window count");
  }
  for (std::size_t i = 6; i < 6 + n; ++i) {
    if (i >= lines.size()) throw bad("truncated slope list");
    std::istringstream in(lines[i]);
    std::string slope, verdict, kind;
    in >> slope >> verdict >> kind;
    SlopeVerdict v{parse_slope(slope), Verdict::Unknown, WitnessKind::None, std::nullopt, std::nullopt, ""};
    if (verdict == "Survives")
      v.verdict = Verdict::Survives;
    else if (verdict == "Dies")
      v.verdict = Verdict::Dies;
    else if (verdict != "Unknown")
      throw bad("unknown verdict '" + verdict + "'");
    for (WitnessKind k : {WitnessKind::None, WitnessKind::Abelian, WitnessKind::Quotient, WitnessKind::Order})
      if (kind == to_string(k)) v.kind = k;
    r.verdicts.push_back(std::move(v));
  }
  return r;
}

}  // namespace fillscope

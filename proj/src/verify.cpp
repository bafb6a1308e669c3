#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "fillscope/atlas.hpp"
#include "fillscope/error.hpp"
#include "fillscope/felsch.hpp"
#include "fillscope/report.hpp"
#include "fillscope/textio.hpp"

namespace fillscope {

namespace {

struct Failure {
  std::string why;
};

[[noreturn]] void fail(const std::string& why) { throw Failure{why}; }

std::string read_all(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) fail("cannot read " + path.string());
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(line);
  }
  return out;
}

std::pair<std::string, std::string> key_value(const std::string& line) {
  const auto sp = line.find(' ');
  if (sp == std::string::npos) return {line, ""};
  return {line.substr(0, sp), line.substr(sp + 1)};
}

struct CertificateText {
  std::map<std::string, std::string> fields;
  std::string table;
};

CertificateText parse_certificate(const std::string& text) {
  const auto lines = split_lines(text);
  if (lines.empty() || lines[0] != "fillscope-certificate 1") fail("not a certificate (bad header)");
  CertificateText c;
  bool in_table = false;
  bool ended = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line.empty()) continue;
    if (ended) fail("content after end-certificate");
    if (in_table) {
      c.table += line + "\n";
      if (line == "end") in_table = false;
      continue;
    }
    if (line == "end-certificate") {
      ended = true;
      continue;
    }
    if (line.rfind("cosettable", 0) == 0) {
      if (!c.table.empty()) fail("two coset tables in one certificate");
      c.table = line + "\n";
      in_table = true;
      continue;
    }
    auto [k, v] = key_value(line);
    if (!c.fields.emplace(k, v).second) fail("duplicate field " + k);
  }
  if (in_table) fail("unterminated coset table");
  if (!ended) fail("missing end-certificate");
  return c;
}

const std::string& field(const CertificateText& c, const std::string& k) {
  auto it = c.fields.find(k);
  if (it == c.fields.end()) fail("certificate lacks field " + k);
  return it->second;
}

mpz_class parse_integer(const std::string& s) {
  mpz_class z;
  if (s.empty() || z.set_str(s, 10) != 0) fail("bad integer '" + s + "'");
  return z;
}

bool transitive(const CosetTable& t) {
  const std::size_t n = t.coset_count();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<Coset> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Coset c = stack.back();
    stack.pop_back();
    for (std::size_t col = 0; col < t.column_count(); ++col) {
      const Coset d = t.at(c, col);
      if (d >= 0 && !seen[static_cast<std::size_t>(d)]) {
        seen[static_cast<std::size_t>(d)] = 1;
        ++reached;
        stack.push_back(d);
      }
    }
  }
  return reached == n;
}

CosetTable checked_table(const CertificateText& c, const Presentation& p) {
  if (c.table.empty()) fail("certificate has no coset table");
  std::vector<std::string> names;
  CosetTable t;
  try {
    t = parse_table_dump(c.table, &names);
  } catch (const Error& e) {
    fail(e.what());
  }
  if (names != p.generators()) fail("table generators do not match the presentation");
  if (!t.complete()) fail("table is not complete");
  const TableCheck check = verify_table(t, p);
  if (!check.ok) fail("table check: " + check.reason);
  return t;
}

// |G| = N: the table is a transitive action on N points and an independent
// enumeration finds exactly N elements, so the action is regular.
void confirm_regular(const CosetTable& t, const Presentation& p, std::uint64_t expected,
                     std::uint64_t felsch_limit) {
  if (t.coset_count() != expected) fail("order field disagrees with the table size");
  if (!transitive(t)) fail("table is not transitive");
  const auto n = felsch_order(p, felsch_limit);
  if (!n) fail("Felsch enumeration did not finish within " + std::to_string(felsch_limit) + " cosets");
  if (*n != expected) fail("Felsch enumeration gives order " + std::to_string(*n));
}

mpz_class abelian_value(const Word& w, const std::vector<mpz_class>& images, const mpz_class& modulus) {
  mpz_class s = 0;
  for (const auto& syl : w.syllables()) s += images.at(syl.gen) * mpz_class(static_cast<long>(syl.exp));
  if (modulus != 0) {
    s %= modulus;
    if (s < 0) s += modulus;
  }
  return s;
}

std::string replay_scan_certificate(const CertificateText& c, const Presentation& filled, const Word& element,
                                    const std::string& slope_text, const std::string& verdict,
                                    const std::string& kind, std::uint64_t felsch_limit) {
  if (field(c, "kind") != kind) fail("certificate kind differs from the report line");
  if (field(c, "verdict") != verdict) fail("certificate verdict differs from the report line");
  if (field(c, "slope") != slope_text) fail("certificate slope differs from the report line");
  Word cert_element;
  try {
    cert_element = parse_word(field(c, "element"), filled);
  } catch (const Error& e) {
    fail(std::string("certificate element: ") + e.what());
  }
  if (!(cert_element == element)) fail("certificate element differs from the report element");

  if (kind == "abelian") {
    if (verdict != "Survives") fail("abelian certificates only witness survival");
    const mpz_class modulus = parse_integer(field(c, "modulus"));
    if (modulus < 0 || modulus == 1) fail("modulus must be 0 or at least 2");
    std::vector<mpz_class> images;
    std::istringstream in(field(c, "images"));
    for (std::string x; in >> x;) images.push_back(parse_integer(x));
    if (images.size() != filled.generator_count()) fail("wrong number of abelian images");
    for (std::size_t i = 0; i < filled.relators().size(); ++i)
      if (abelian_value(filled.relators()[i], images, modulus) != 0)
        fail("relator " + std::to_string(i) + " does not map to 0");
    const mpz_class v = abelian_value(element, images, modulus);
    if (v == 0) fail("element maps to 0");
    return "element maps to " + v.get_str() + (modulus == 0 ? " in Z" : " in Z/" + modulus.get_str());
  }
  if (kind == "quotient" || kind == "order") {
    const CosetTable t = checked_table(c, filled);
    const auto perm = permutation_of(t, element);
    if (!perm) fail("element does not evaluate on the table");
    const bool identity = is_identity_permutation(*perm);
    if (verdict == "Survives") {
      if (identity) fail("element acts trivially, so the table does not witness survival");
      if (kind == "order") confirm_regular(t, filled, parse_integer(field(c, "order")).get_ui(), felsch_limit);
      return "element acts nontrivially on " + std::to_string(t.coset_count()) + " points";
    }
    if (verdict != "Dies" || kind != "order") fail("death needs an order certificate");
    if (!identity) fail("element acts nontrivially on the regular table");
    confirm_regular(t, filled, parse_integer(field(c, "order")).get_ui(), felsch_limit);
    return "group order " + std::to_string(t.coset_count()) + " confirmed, element acts trivially";
  }
  fail("unknown certificate kind " + kind);
}

void verify_report(const std::filesystem::path& path, const std::vector<std::string>& lines, VerifyResult& res,
                   std::uint64_t felsch_limit) {
  std::size_t i = 1;
  const auto expect = [&](const std::string& key) -> std::string {
    if (i >= lines.size()) fail("report ends before '" + key + "'");
    auto [k, v] = key_value(lines[i]);
    if (k != key) fail("expected '" + key + "' at line " + std::to_string(i + 1));
    ++i;
    return v;
  };
  const std::string knot = expect("knot");
  Presentation base;
  try {
    base = parse_presentation(SourceText{expect("presentation"), path.string()});
  } catch (const Error& e) {
    fail(std::string("presentation: ") + e.what());
  }
  if (!base.peripheral()) fail("report presentation has no peripheral data");
  try {
    if (auto entry = find_atlas_entry(knot)) {
      if (!(entry->presentation == base)) fail("presentation differs from atlas entry " + knot);
      res.lines.push_back("ok presentation matches atlas entry " + knot);
    }
  } catch (const Error&) {
    // Not an atlas name: the embedded presentation is taken as given.
  }
  Word element;
  try {
    element = parse_word(expect("element"), base);
  } catch (const Error& e) {
    fail(std::string("element: ") + e.what());
  }
  expect("budgets");
  const std::size_t window = parse_integer(expect("window")).get_ui();

  const Word mu = base.peripheral()->meridian;
  const Word lambda = base.peripheral()->longitude;
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  std::map<std::string, std::size_t> counts{{"Survives", 0}, {"Dies", 0}, {"Unknown", 0}};
  for (std::size_t k = 0; k < window; ++k, ++i) {
    if (i >= lines.size()) fail("report has fewer slope lines than its window");
    std::string line = lines[i];
    if (const auto hash = line.find(" #"); hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream in(line);
    std::string slope_text, verdict, kind, ref, extra;
    if (!(in >> slope_text >> verdict >> kind >> ref) || (in >> extra)) fail("malformed slope line " + std::to_string(i + 1));
    Slope s(0, 1);
    try {
      s = parse_slope(slope_text);
    } catch (const Error& e) {
      fail("line " + std::to_string(i + 1) + ": " + e.what());
    }
    if (!seen.insert({s.p(), s.q()}).second) fail("slope " + slope_text + " appears twice");
    if (!counts.count(verdict)) fail("unknown verdict " + verdict);
    ++counts[verdict];
    if (verdict == "Unknown") {
      if (kind != "none" || ref != "-") fail("Unknown verdict carries a certificate reference");
      ++res.unknown;
      continue;
    }
    std::vector<Word> rels = base.relators();
    rels.push_back(power(mu, s.p()) * power(lambda, s.q()));
    const Presentation filled(base.generators(), rels);
    try {
      const CertificateText cert = parse_certificate(read_all(path.parent_path() / ref));
      const std::string what = replay_scan_certificate(cert, filled, element, slope_text, verdict, kind, felsch_limit);
      res.lines.push_back("ok " + slope_text + " " + verdict + " (" + kind + "): " + what);
      ++res.replayed;
    } catch (const Failure& f) {
      res.ok = false;
      res.lines.push_back("FAIL " + slope_text + " " + verdict + " (" + kind + "): " + f.why);
    }
  }
  std::ostringstream summary;
  summary << "summary survives=" << counts["Survives"] << " dies=" << counts["Dies"] << " unknown=" << counts["Unknown"];
  if (i >= lines.size() || lines[i] != summary.str()) fail("summary line does not match the slope lines");
  for (++i; i < lines.size(); ++i)
    if (!lines[i].empty()) fail("content after the summary line");
}

void verify_group_order(const CertificateText& c, VerifyResult& res, std::uint64_t felsch_limit) {
  Presentation p;
  try {
    p = parse_presentation(SourceText{field(c, "presentation"), "certificate"});
  } catch (const Error& e) {
    fail(std::string("presentation: ") + e.what());
  }
  const CosetTable t = checked_table(c, p);
  const mpz_class order = parse_integer(field(c, "order"));
  confirm_regular(t, p, order.get_ui(), felsch_limit);
  ++res.replayed;
  res.lines.push_back("ok group order " + order.get_str() + " confirmed by table check and Felsch enumeration");
}

}  // namespace

VerifyResult verify_file(const std::filesystem::path& path, std::uint64_t felsch_limit) {
  VerifyResult res;
  try {
    const std::string text = read_all(path);
    const auto lines = split_lines(text);
    if (!lines.empty() && lines[0] == "fillscope-report 1") {
      verify_report(path, lines, res, felsch_limit);
    } else if (!lines.empty() && lines[0] == "fillscope-certificate 1") {
      const CertificateText c = parse_certificate(text);
      if (field(c, "kind") != "group-order") fail("scan certificates are verified through their report");
      verify_group_order(c, res, felsch_limit);
    } else {
      fail("unrecognized file header");
    }
  } catch (const Failure& f) {
    res.ok = false;
    res.lines.push_back("FAIL " + f.why);
  }
  return res;
}

}  // namespace fillscope

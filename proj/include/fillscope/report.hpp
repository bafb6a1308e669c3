#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "fillscope/persistence.hpp"

namespace fillscope {

// Report layout (one item per line, fields separated by single spaces):
//
//   fillscope-report 1
//   knot <name>
//   presentation <.fp presentation with peripheral section>
//   element <word>
//   budgets index=<k> nodes=<n> cosets=<n> work=<n> tietze=<n>
//   window <number of slopes>
//   <p/q> <Survives|Dies|Unknown> <abelian|quotient|order|none> <certificate file|-> [# note]
//   ...
//   summary survives=<n> dies=<n> unknown=<n>
//
// Certificate files live in "<report>.certs/" and read
//
//   fillscope-certificate 1
//   kind <abelian|quotient|order|group-order>
//   verdict <Survives|Dies>       (scan certificates)
//   presentation <.fp>            (group-order only)
//   slope <p/q>                   (scan certificates)
//   element <word>                (scan certificates)
//   modulus <d> / images <i_1 ... i_n>   (abelian)
//   order <N>                     (order, group-order)
//   cosettable 1 ... end          (quotient, order, group-order)
//   end-certificate

std::string certificate_file_name(const Slope& s);
std::string format_certificate(const SurvivalReport& r, const SlopeVerdict& v);
std::string format_report(const SurvivalReport& r, const std::string& cert_dir_name);

/// Writes the report and its certificate directory "<report_path>.certs".
void write_report(const SurvivalReport& r, const std::filesystem::path& report_path);

/// Reads the verdict lines of a report back (witnesses are not loaded).
/// Throws SyntaxError on malformed input, Io when unreadable.
SurvivalReport read_report_verdicts(const std::filesystem::path& report_path);

/// Standalone certificate for |G| = table size (table over the trivial subgroup).
std::string format_group_order_certificate(const Presentation& p, const CosetTable& regular);

struct VerifyResult {
  bool ok = true;
  std::size_t replayed = 0;
  std::size_t unknown = 0;
  std::vector<std::string> lines;  // "ok ..." / "FAIL ..."
};

/// Replays a report (and every certificate it names) or a standalone
/// certificate, using only the table checker, a separate Felsch enumeration
/// and direct abelian evaluation. Malformed input is reported as a failure.
VerifyResult verify_file(const std::filesystem::path& path, std::uint64_t felsch_limit = 2'000'000);

}  // namespace fillscope

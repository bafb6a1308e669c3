#include <cmath>
#include <sstream>

#include "fillscope/atlas.hpp"
#include "fillscope/coset_enum.hpp"
#include "fillscope/dehn_fill.hpp"
#include "fillscope/error.hpp"
#include "fillscope/sl2.hpp"

namespace fillscope {

EntryCertificate certify_entry(const AtlasEntry& e, std::size_t max_index) {
  EntryCertificate cert;
  const auto note = [&](bool ok, const std::string& what) {
    cert.ok = cert.ok && ok;
    cert.lines.push_back((ok ? "ok " : "FAIL ") + what);
  };
  if (!e.is_knot()) {
    note(false, e.name + " is not a knot entry");
    return cert;
  }
  try {
    check_knot_invariants(e);
    note(true, "H1 = Z, meridian generates H1, longitude null-homologous");
  } catch (const Error& err) {
    note(false, err.what());
  }

  const EnumResult killed = group_order(fill_meridian(e));
  note(killed.complete && killed.table.coset_count() == 1, "meridian normally generates (order 1)");

  const Word mu = e.meridian();
  const Word lambda = e.longitude();
  const Word comm = commutator(mu, lambda);
  std::uint64_t tables = 0;
  std::uint64_t bad = 0;
  const LowIndexReport rep = low_index_subgroups(e.presentation, max_index, {}, [&](const CosetTable& t) {
    ++tables;
    const auto perm = permutation_of(t, comm);
    if (!perm || !is_identity_permutation(*perm)) ++bad;
    return true;
  });
  {
    std::ostringstream s;
    s << "[mu, lambda] trivial in " << tables << " quotients of index <= " << max_index;
    if (!rep.exhaustive()) s << " (search incomplete: " << rep.exhausted_branches.size() << " branches cut)";
    note(bad == 0, s.str());
  }

  if (e.family == AtlasFamily::TwoBridge || e.family == AtlasFamily::FigureEight) {
    try {
      const RepAssignment r = holonomy_for(e);
      const Mat2 m = rep_evaluate(r, mu);
      const Mat2 l = rep_evaluate(r, lambda);
      const double comm_norm = operator_norm(m * l - l * m);
      const Complex tl = l.trace();
      const double parabolic = std::min(std::abs(tl - 2.0), std::abs(tl + 2.0));
      std::ostringstream s;
      s.precision(3);
      s << "holonomy defect " << r.max_relator_defect << ", |[rho mu, rho lambda]| " << comm_norm
        << ", tr rho lambda off +-2 by " << parabolic;
      note(std::abs(m.trace() - 2.0) <= kSeparationTolerance && comm_norm <= 1e-8 &&
               parabolic <= kSeparationTolerance,
           s.str());
    } catch (const Error& err) {
      note(false, err.what());
    }
  }
  return cert;
}

}  // namespace fillscope

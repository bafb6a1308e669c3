#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fillscope/presentation.hpp"

namespace fillscope {

enum class AtlasFamily { Torus, TwoBridge, FigureEight, ComposingSpace, External };

/// A named presentation, with peripheral data for knot exteriors.
struct AtlasEntry {
  std::string name;
  Presentation presentation;
  std::string provenance;
  AtlasFamily family = AtlasFamily::External;
  std::int64_t param_p = 0;  // (p, q) or (alpha, beta) of the family
  std::int64_t param_q = 0;

  bool is_knot() const { return family != AtlasFamily::ComposingSpace && presentation.peripheral().has_value(); }
  const Word& meridian() const;
  const Word& longitude() const;
};

/// <x, y | x^p y^-q>, meridian x^-s y^r with pr - qs = 1, longitude x^p mu^-pq.
AtlasEntry torus_knot(std::int64_t p, std::int64_t q);

/// <t, a | t a^2 t = a t a^-1 t a> with meridian t.
AtlasEntry figure_eight();

/// Schubert normal form <a, b | w a w^-1 b^-1>, p odd, 0 < q < p, gcd 1.
AtlasEntry two_bridge(std::int64_t p, std::int64_t q);

/// <c, d, t | [c, t], [d, t], c^alpha t^-beta>. Not a knot entry.
AtlasEntry composing_space(std::int64_t alpha, std::int64_t beta);

/// Wraps a user presentation; knot invariants are checked when peripheral
/// data is present.
AtlasEntry external_entry(std::string name, Presentation p);

/// Built-in knot entries in listing order.
std::vector<AtlasEntry> atlas_knots();

/// Every built-in entry (knots, then composing spaces).
std::vector<AtlasEntry> atlas_entries();

/// Resolves a built-in name ("fig8", "trefoil", ...) or a parametric name
/// ("torus:2,5", "twobridge:7,3", "composing:3,2").
std::optional<AtlasEntry> find_atlas_entry(const std::string& name);

/// Cheap exact invariants demanded of every knot entry: H1 = Z, meridian
/// generates H1, longitude abelianizes to 0. Throws on violation.
void check_knot_invariants(const AtlasEntry& e);

struct EntryCertificate {
  bool ok = true;
  std::vector<std::string> lines;  // one per check, "ok ..." or "FAIL ..."
};

/// Full longitude battery: exact invariants, [mu, lambda] acting trivially in
/// every low-index quotient up to `max_index`, and (for two-bridge and
/// figure-eight entries) holonomy commutation and parabolicity.
EntryCertificate certify_entry(const AtlasEntry& e, std::size_t max_index = 12);

}  // namespace fillscope

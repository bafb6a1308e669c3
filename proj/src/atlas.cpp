#include "fillscope/atlas.hpp"

#include <numeric>

#include "fillscope/error.hpp"
#include "fillscope/homology.hpp"
#include "fillscope/textio.hpp"

namespace fillscope {

const Word& AtlasEntry::meridian() const {
  if (!presentation.peripheral()) throw Error(ErrorKind::NoPeripheralData, name + " has no peripheral data");
  return presentation.peripheral()->meridian;
}

const Word& AtlasEntry::longitude() const {
  if (!presentation.peripheral()) throw Error(ErrorKind::NoPeripheralData, name + " has no peripheral data");
  return presentation.peripheral()->longitude;
}

void check_knot_invariants(const AtlasEntry& e) {
  const auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::CertificateFailure, e.name + ": " + why);
  };
  const Presentation& p = e.presentation;
  if (!p.peripheral()) fail("knot entry without peripheral data");
  const H1Result h = h1(p);
  if (h.free_rank != 1 || !h.torsion.empty()) fail("H1 is " + to_string(h) + ", expected Z");
  // The meridian generates H1 = Z iff adding it as a relator kills H1.
  const H1Result killed = h1(p.with_relators({e.meridian()}));
  if (killed.free_rank != 0 || !killed.torsion.empty()) fail("meridian does not generate H1");
  if (abelian_order_of_image(e.longitude(), p) != mpz_class(1)) fail("longitude is not null-homologous");
}

AtlasEntry torus_knot(std::int64_t p, std::int64_t q) {
  if (p < 1 || q < 1) throw Error(ErrorKind::BadParameters, "torus knot parameters must be positive");
  if (p == 1 || q == 1) throw Error(ErrorKind::TrivialKnot, "T(p,q) with p or q = 1 is the unknot");
  if (std::gcd(p, q) != 1) throw Error(ErrorKind::NotCoprime, "torus knot parameters must be coprime");
  // Least r >= 0 with p r = 1 (mod q); then s = (p r - 1) / q.
  std::int64_t r = 0;
  while ((p * r) % q != 1 % q) ++r;
  const std::int64_t s = (p * r - 1) / q;
  const Word x = Word::generator(0);
  const Word y = Word::generator(1);
  const Word mu = power(x, -s) * power(y, r);
  const Word lambda = power(x, p) * power(mu, -p * q);
  AtlasEntry e;
  e.name = "torus:" + std::to_string(p) + "," + std::to_string(q);
  e.presentation = Presentation({"x", "y"}, {power(x, p) * power(y, -q)}, Peripheral{mu, lambda});
  e.provenance = "torus knot T(" + std::to_string(p) + "," + std::to_string(q) +
                 "); meridian x^-s y^r with pr - qs = 1; longitude x^p mu^-pq (x^p is central)";
  e.family = AtlasFamily::Torus;
  e.param_p = p;
  e.param_q = q;
  check_knot_invariants(e);
  return e;
}

AtlasEntry figure_eight() {
  AtlasEntry e;
  e.name = "fig8";
  e.presentation = parse_presentation(SourceText{
      "< t, a | t*a^2*t = a*t*a^-1*t*a"
      " | meridian = t, longitude = t*a*t^-1*a^-1*t*a^-1*t^-1*a >",
      "builtin:fig8"});
  e.provenance =
      "figure-eight knot; t is a meridian, a lies in the commutator subgroup. With x0 = a, "
      "x1 = t a t^-1 the relator gives t x1 t^-1 = x1 x0^-1 x1^2; the longitude "
      "x1 x0^-1 x1^-1 x0 is fixed by this automorphism, so it commutes with t. Isomorphic to "
      "twobridge:5,3 via a -> t, b -> t a. Mirror convention: amphicheiral, slopes r and -r "
      "give homeomorphic fillings.";
  e.family = AtlasFamily::FigureEight;
  e.param_p = 5;
  e.param_q = 3;
  check_knot_invariants(e);
  return e;
}

namespace {

std::vector<int> schubert_signs(std::int64_t p, std::int64_t q) {
  std::vector<int> eps;
  for (std::int64_t i = 1; i < p; ++i) eps.push_back(((i * q) / p) % 2 == 0 ? 1 : -1);
  return eps;
}

}  // namespace

AtlasEntry two_bridge(std::int64_t p, std::int64_t q) {
  if (p < 3 || p % 2 == 0 || q <= 0 || q >= p || std::gcd(p, q) != 1)
    throw Error(ErrorKind::BadParameters, "two-bridge parameters need p odd >= 3, 0 < q < p, gcd 1");
  const std::int64_t requested_q = q;
  // The Schubert word needs q odd. q^-1 mod p names the same knot; failing
  // that, p - q names its mirror.
  if (q % 2 == 0) {
    std::int64_t inv = 1;
    while ((inv * q) % p != 1) ++inv;
    q = inv % 2 == 1 ? inv : p - q;
  }
  const auto eps = schubert_signs(p, q);
  std::vector<Syllable> w_raw;
  std::int64_t sigma = 0;
  for (std::size_t i = 0; i < eps.size(); ++i) {
    w_raw.push_back(Syllable{static_cast<GenId>(i % 2 == 0 ? 0 : 1), eps[i]});
    sigma += eps[i];
  }
  const Word w = Word::from_raw(w_raw);
  std::vector<Syllable> rev(w_raw.rbegin(), w_raw.rend());
  const Word w_star = Word::from_raw(rev);
  const Word a = Word::generator(0);
  const Word b = Word::generator(1);
  const Word relator = w * a * invert(w) * invert(b);
  const Word lambda = w_star * w * power(a, -2 * sigma);
  AtlasEntry e;
  e.name = "twobridge:" + std::to_string(p) + "," + std::to_string(requested_q);
  e.presentation = Presentation({"a", "b"}, {relator}, Peripheral{a, lambda});
  e.provenance = "two-bridge knot S(" + std::to_string(p) + "," + std::to_string(q) +
                 "); relator w a w^-1 b^-1 with eps_i = (-1)^floor(iq/p); longitude w* w a^-2sigma "
                 "(w* = w read backwards)";
  if (q != requested_q) e.provenance += "; Schubert word built from q = " + std::to_string(q);
  e.family = AtlasFamily::TwoBridge;
  e.param_p = p;
  e.param_q = q;
  check_knot_invariants(e);
  return e;
}

AtlasEntry composing_space(std::int64_t alpha, std::int64_t beta) {
  if (alpha < 1 || beta < 1) throw Error(ErrorKind::BadParameters, "alpha, beta must be >= 1");
  const Word c = Word::generator(0);
  const Word d = Word::generator(1);
  const Word t = Word::generator(2);
  AtlasEntry e;
  e.name = "composing:" + std::to_string(alpha) + "," + std::to_string(beta);
  e.presentation = Presentation({"c", "d", "t"},
                                {commutator(c, t), commutator(d, t), power(c, alpha) * power(t, -beta)});
  e.provenance = "Seifert piece of a composite-knot filling: <c, d, t | [c,t] = [d,t] = 1, c^alpha = t^beta>;"
                 " mu = t, lambda1 = d, lambda2 = d^-1 c";
  e.family = AtlasFamily::ComposingSpace;
  e.param_p = alpha;
  e.param_q = beta;
  return e;
}

AtlasEntry external_entry(std::string name, Presentation p) {
  AtlasEntry e;
  e.name = std::move(name);
  e.presentation = std::move(p);
  e.provenance = "user-supplied presentation";
  e.family = AtlasFamily::External;
  if (e.presentation.peripheral()) check_knot_invariants(e);
  return e;
}

std::vector<AtlasEntry> atlas_knots() {
  std::vector<AtlasEntry> out;
  auto named = [&](AtlasEntry e, const std::string& alias) {
    e.name = alias;
    out.push_back(std::move(e));
  };
  named(torus_knot(2, 3), "trefoil");
  out.push_back(figure_eight());
  named(torus_knot(2, 5), "cinquefoil");
  named(two_bridge(7, 3), "5_2");
  named(two_bridge(9, 2), "6_1");
  named(torus_knot(3, 4), "T3_4");
  out.push_back(two_bridge(3, 1));
  out.push_back(two_bridge(5, 3));
  return out;
}

std::vector<AtlasEntry> atlas_entries() {
  std::vector<AtlasEntry> out = atlas_knots();
  out.push_back(composing_space(3, 2));
  return out;
}

std::optional<AtlasEntry> find_atlas_entry(const std::string& name) {
  const auto colon = name.find(':');
  if (colon != std::string::npos) {
    const std::string family = name.substr(0, colon);
    const std::string args = name.substr(colon + 1);
    const auto comma = args.find(',');
    if (comma == std::string::npos) return std::nullopt;
    std::int64_t x = 0;
    std::int64_t y = 0;
    try {
      std::size_t used = 0;
      x = std::stoll(args.substr(0, comma), &used);
      if (used != comma) return std::nullopt;
      const std::string rest = args.substr(comma + 1);
      y = std::stoll(rest, &used);
      if (used != rest.size()) return std::nullopt;
    } catch (const std::exception&) {
      return std::nullopt;
    }
    if (family == "torus") return torus_knot(x, y);
    if (family == "twobridge") return two_bridge(x, y);
    if (family == "composing") return composing_space(x, y);
    return std::nullopt;
  }
  if (name == "fig8" || name == "4_1") return figure_eight();
  for (auto& e : atlas_entries())
    if (e.name == name) return e;
  if (name == "3_1") return find_atlas_entry("trefoil");
  if (name == "5_1") return find_atlas_entry("cinquefoil");
  return std::nullopt;
}

}  // namespace fillscope

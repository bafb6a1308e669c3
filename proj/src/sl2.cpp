#include "fillscope/sl2.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "fillscope/error.hpp"

namespace fillscope {

Mat2 Mat2::inverse() const {
  const Complex dt = det();
  return {d / dt, -b / dt, -c / dt, a / dt};
}

Mat2 Mat2::operator*(const Mat2& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

double operator_norm(const Mat2& m) {
  const double f = std::norm(m.a) + std::norm(m.b) + std::norm(m.c) + std::norm(m.d);
  const double dt = std::abs(m.det());
  const double disc = std::max(0.0, f * f - 4.0 * dt * dt);
  return std::sqrt((f + std::sqrt(disc)) / 2.0);
}

Mat2 mat_power(const Mat2& m, std::int64_t e) {
  Mat2 base = e < 0 ? m.inverse() : m;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  Mat2 out = Mat2::identity();
  while (n > 0) {
    if (n & 1) out = out * base;
    base = base * base;
    n >>= 1;
  }
  return out;
}

Mat2 rep_evaluate(const std::vector<Mat2>& images, const Word& w) {
  Mat2 out = Mat2::identity();
  for (const auto& s : w.syllables()) {
    if (s.gen >= images.size()) throw Error(ErrorKind::GeneratorOutOfRange, "word uses an unassigned generator");
    out = out * mat_power(images[s.gen], s.exp);
  }
  return out;
}

Mat2 rep_evaluate(const RepAssignment& r, const Word& w) { return rep_evaluate(r.images, w); }

RepAssignment make_assignment(const Presentation& p, std::vector<Mat2> images) {
  if (images.size() != p.generator_count())
    throw Error(ErrorKind::BadParameters, "one matrix per generator required");
  RepAssignment r{p, std::move(images), 0.0};
  for (const auto& rel : p.relators()) {
    const Mat2 m = rep_evaluate(r, rel);
    const double d = std::min(operator_norm(m - Mat2::identity()), operator_norm(m + Mat2::identity()));
    r.max_relator_defect = std::max(r.max_relator_defect, d);
  }
  return r;
}

Complex bs_trace(std::int64_t m, Complex c, Complex tau) {
  const double mm = static_cast<double>(m) * static_cast<double>(m - 1);
  return 2.0 + c * c * mm * tau * tau;
}

namespace {

void require_certified(const RepAssignment& r) {
  if (!r.certified())
    throw Error(ErrorKind::UncertifiedRepresentation,
                "relator defect " + std::to_string(r.max_relator_defect) + " exceeds tolerance");
}

}  // namespace

NonconjugacyCertificate nonconjugacy_certificate(const RepAssignment& r, const Word& u, const Word& v) {
  require_certified(r);
  NonconjugacyCertificate c;
  c.trace_u = rep_evaluate(r, u).trace();
  c.trace_v = rep_evaluate(r, v).trace();
  c.separation = std::min(std::abs(c.trace_u - c.trace_v), std::abs(c.trace_u + c.trace_v));
  c.defect = r.max_relator_defect;
  c.verdict = c.separation > c.tolerance ? ConjugacyVerdict::Distinct : ConjugacyVerdict::Inconclusive;
  return c;
}

NonperipheralityCertificate nonperipherality_certificate(const RepAssignment& r, const Word& meridian,
                                                         const Word& w) {
  require_certified(r);
  const Complex tm = rep_evaluate(r, meridian).trace();
  if (std::min(std::abs(tm - 2.0), std::abs(tm + 2.0)) > kSeparationTolerance)
    throw Error(ErrorKind::UncertifiedRepresentation, "meridian image is not parabolic");
  NonperipheralityCertificate c;
  c.trace = rep_evaluate(r, w).trace();
  c.separation = std::min(std::abs(c.trace - 2.0), std::abs(c.trace + 2.0));
  c.defect = r.max_relator_defect;
  c.verdict = c.separation > c.tolerance ? PeripheralVerdict::NonPeripheral : PeripheralVerdict::Inconclusive;
  return c;
}

namespace {

IntPoly poly_add(const IntPoly& x, const IntPoly& y) {
  IntPoly out(std::max(x.size(), y.size()));
  for (std::size_t i = 0; i < x.size(); ++i) out[i] += x[i];
  for (std::size_t i = 0; i < y.size(); ++i) out[i] += y[i];
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// x * (k z).
IntPoly poly_times_z(const IntPoly& x, long k) {
  if (x.empty()) return {};
  IntPoly out(x.size() + 1);
  for (std::size_t i = 0; i < x.size(); ++i) out[i + 1] = x[i] * k;
  return out;
}

IntPoly poly_scale(const IntPoly& x, long k) {
  IntPoly out = x;
  for (auto& c : out) c *= k;
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

struct PolyMat {
  IntPoly a{mpz_class(1)}, b, c, d{mpz_class(1)};
};

Complex horner(const IntPoly& f, Complex z) {
  Complex v = 0.0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) v = v * z + it->get_d();
  return v;
}

}  // namespace

IntPoly riley_polynomial(std::int64_t p, std::int64_t q) {
  if (p < 3 || p % 2 == 0 || q <= 0 || q >= p || q % 2 == 0)
    throw Error(ErrorKind::BadParameters, "Riley polynomial needs p odd >= 3 and odd 0 < q < p");
  PolyMat w;
  for (std::int64_t i = 1; i < p; ++i) {
    const long e = ((i * q) / p) % 2 == 0 ? 1 : -1;
    PolyMat n;
    if (i % 2 == 1) {
      // right multiply by a^e = [[1, e], [0, 1]]
      n.a = w.a;
      n.b = poly_add(poly_scale(w.a, e), w.b);
      n.c = w.c;
      n.d = poly_add(poly_scale(w.c, e), w.d);
    } else {
      // right multiply by b^e = [[1, 0], [e z, 1]]
      n.a = poly_add(w.a, poly_times_z(w.b, e));
      n.b = w.b;
      n.c = poly_add(w.c, poly_times_z(w.d, e));
      n.d = w.d;
    }
    w = std::move(n);
  }
  return w.a;
}

std::vector<Complex> polynomial_roots(const IntPoly& f) {
  IntPoly g = f;
  while (!g.empty() && g.back() == 0) g.pop_back();
  if (g.size() < 2) return {};
  const std::size_t n = g.size() - 1;
  const double lead = g.back().get_d();
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 1; i < n; ++i) companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  for (std::size_t i = 0; i < n; ++i)
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(n - 1)) = -g[i].get_d() / lead;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  std::vector<Complex> roots;
  IntPoly deriv;
  for (std::size_t i = 1; i < g.size(); ++i) deriv.push_back(g[i] * static_cast<unsigned long>(i));
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    Complex z = solver.eigenvalues()(i);
    for (int it = 0; it < 50; ++it) {
      const Complex dz = horner(deriv, z);
      if (std::abs(dz) == 0.0) break;
      const Complex step = horner(g, z) / dz;
      z -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(z))) break;
    }
    roots.push_back(z);
  }
  return roots;
}

std::vector<Complex> ordered_riley_roots(const IntPoly& f) {
  std::vector<Complex> roots = polynomial_roots(f);
  const auto key = [](const Complex& z) {
    const bool real = std::abs(z.imag()) <= kSeparationTolerance;
    return std::make_tuple(real ? 1 : 0, real ? 0.0 : std::abs(z.imag()), z.real(), -z.imag());
  };
  std::stable_sort(roots.begin(), roots.end(), [&](const Complex& x, const Complex& y) {
    auto kx = key(x);
    auto ky = key(y);
    if (std::get<0>(kx) != std::get<0>(ky)) return std::get<0>(kx) < std::get<0>(ky);
    if (std::abs(std::get<1>(kx) - std::get<1>(ky)) > 1e-9) return std::get<1>(kx) < std::get<1>(ky);
    if (std::abs(std::get<2>(kx) - std::get<2>(ky)) > 1e-9) return std::get<2>(kx) < std::get<2>(ky);
    return std::get<3>(kx) < std::get<3>(ky);
  });
  return roots;
}

RepAssignment holonomy_for(const AtlasEntry& entry) {
  if (entry.family != AtlasFamily::TwoBridge && entry.family != AtlasFamily::FigureEight)
    throw Error(ErrorKind::BadParameters, entry.name + ": holonomy needs a two-bridge or figure-eight entry");
  const IntPoly f = riley_polynomial(entry.param_p, entry.param_q);
  const Mat2 ma{1.0, 1.0, 0.0, 1.0};
  double best = INFINITY;
  for (const Complex& z : ordered_riley_roots(f)) {
    const Mat2 mb{1.0, 0.0, z, 1.0};
    // figure-eight (t, a) corresponds to the two-bridge pair via t = a, a = a^-1 b.
    std::vector<Mat2> images = entry.family == AtlasFamily::FigureEight ? std::vector<Mat2>{ma, ma.inverse() * mb}
                                                                         : std::vector<Mat2>{ma, mb};
    RepAssignment r = make_assignment(entry.presentation, std::move(images));
    if (r.certified()) return r;
    best = std::min(best, r.max_relator_defect);
  }
  throw Error(ErrorKind::NoRepresentationFound,
              entry.name + ": no Riley root gives relator defect <= 1e-9 (best " + std::to_string(best) + ")");
}

}  // namespace fillscope

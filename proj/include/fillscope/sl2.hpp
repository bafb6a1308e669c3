#pragma once

#include <gmpxx.h>

#include <complex>
#include <vector>

#include "fillscope/atlas.hpp"

namespace fillscope {

using Complex = std::complex<double>;

inline constexpr double kDefectTolerance = 1e-9;
inline constexpr double kSeparationTolerance = 1e-6;

struct Mat2 {
  Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

  static Mat2 identity() { return {}; }
  Complex det() const { return a * d - b * c; }
  Complex trace() const { return a + d; }
  /// Exact inverse for unimodular input (adjugate); divides by det otherwise.
  Mat2 inverse() const;
  Mat2 operator*(const Mat2& o) const;
  Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
  Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
  Mat2 operator-() const { return {-a, -b, -c, -d}; }
};

/// Largest singular value.
double operator_norm(const Mat2& m);
Mat2 mat_power(const Mat2& m, std::int64_t e);

struct RepAssignment {
  Presentation presentation;
  std::vector<Mat2> images;
  double max_relator_defect = 0.0;

  bool certified() const { return max_relator_defect <= kDefectTolerance; }
};

/// Builds an assignment and records the relator defect: max over relators of
/// min(|rho(r) - I|, |rho(r) + I|) in operator norm.
RepAssignment make_assignment(const Presentation& p, std::vector<Mat2> images);

Mat2 rep_evaluate(const RepAssignment& r, const Word& w);
Mat2 rep_evaluate(const std::vector<Mat2>& images, const Word& w);

/// tr of x^(1-m) y x^m y^-1 when x = [[1,tau],[0,1]] and y has lower-left c.
Complex bs_trace(std::int64_t m, Complex c, Complex tau);

enum class ConjugacyVerdict { Distinct, Inconclusive };
enum class PeripheralVerdict { NonPeripheral, Inconclusive };

struct NonconjugacyCertificate {
  ConjugacyVerdict verdict = ConjugacyVerdict::Inconclusive;
  Complex trace_u;
  Complex trace_v;
  double separation = 0.0;  // min(|tr u - tr v|, |tr u + tr v|)
  double tolerance = kSeparationTolerance;
  double defect = 0.0;
};

struct NonperipheralityCertificate {
  PeripheralVerdict verdict = PeripheralVerdict::Inconclusive;
  Complex trace;
  double separation = 0.0;  // min(|tr - 2|, |tr + 2|)
  double tolerance = kSeparationTolerance;
  double defect = 0.0;
};

/// Throws UncertifiedRepresentation if the defect exceeds kDefectTolerance.
NonconjugacyCertificate nonconjugacy_certificate(const RepAssignment& r, const Word& u, const Word& v);

/// Also throws UncertifiedRepresentation if rho(meridian) is not parabolic.
NonperipheralityCertificate nonperipherality_certificate(const RepAssignment& r, const Word& meridian,
                                                         const Word& w);

/// Integer polynomial, coefficients in ascending degree.
using IntPoly = std::vector<mpz_class>;

/// W_11(z) for the Schubert word of S(p, q), q odd: the relator holds under
/// a -> [[1,1],[0,1]], b -> [[1,0],[z,1]] iff this vanishes.
IntPoly riley_polynomial(std::int64_t p, std::int64_t q);

/// All complex roots (companion matrix eigenvalues, Newton polished).
std::vector<Complex> polynomial_roots(const IntPoly& f);

/// Roots in the order holonomy_for tries them: non-real roots first, by
/// |Im|, then real part, then positive imaginary part first; real roots last.
std::vector<Complex> ordered_riley_roots(const IntPoly& f);

/// Parabolic representation of a two-bridge or figure-eight entry.
/// Throws NoRepresentationFound, or BadParameters for other families.
RepAssignment holonomy_for(const AtlasEntry& entry);

}  // namespace fillscope

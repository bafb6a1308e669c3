#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "fillscope/presentation.hpp"

namespace fillscope {

/// Dense integer matrix, row-major, arbitrary precision.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  mpz_class& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& b) const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> a_;
};

/// Exact determinant (fraction-free Bareiss elimination).
mpz_class determinant(const IntMatrix& a);

struct SmithForm {
  IntMatrix S;
  IntMatrix U;  // rows x rows, unimodular
  IntMatrix V;  // cols x cols, unimodular
};

/// S = U A V with S diagonal, nonnegative, d_i | d_{i+1}. The identity and
/// unimodularity are re-checked exactly before returning.
SmithForm smith_normal_form(const IntMatrix& a);

/// Nonzero diagonal of a Smith form, in order.
std::vector<mpz_class> invariant_factors(const SmithForm& f);

struct H1Result {
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion;  // each >= 2, d_i | d_{i+1}

  bool is_finite() const { return free_rank == 0; }
  /// Group order when finite.
  std::optional<mpz_class> order() const;

  friend bool operator==(const H1Result&, const H1Result&) = default;
};

/// Human form: "Z^2 + Z/3", "Z", "0".
std::string to_string(const H1Result& h);

std::vector<mpz_class> abelianize_word(const Word& w, std::size_t n_gens);

/// Rows are relators, columns generators.
IntMatrix relation_matrix(const Presentation& p);

H1Result h1(const Presentation& p);

/// Order of the image of w in H1(p); nullopt when the order is infinite.
std::optional<mpz_class> abelian_order_of_image(const Word& w, const Presentation& p);

/// A homomorphism G -> Z/modulus (modulus 0 means Z) given by integer images of
/// the generators, chosen so that `element` maps to a nonzero class.
struct AbelianWitness {
  mpz_class modulus;
  std::vector<mpz_class> images;
  std::optional<mpz_class> image_order;  // nullopt = infinite
};

/// Finds a witness that w is nontrivial in H1(p), if its image is nonzero.
std::optional<AbelianWitness> abelian_witness(const Word& w, const Presentation& p);

/// Independent replay: every relator maps to 0 and w to a nonzero class.
bool check_abelian_witness(const AbelianWitness& wit, const Word& w, const Presentation& p);

}  // namespace fillscope

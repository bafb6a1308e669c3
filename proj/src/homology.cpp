#include "fillscope/homology.hpp"

#include <stdexcept>

#include "fillscope/error.hpp"

namespace fillscope {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows_ * cols_) throw Error(ErrorKind::BadParameters, "matrix entry count mismatch");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& b) const {
  if (cols_ != b.rows_) throw Error(ErrorKind::BadParameters, "matrix dimension mismatch");
  IntMatrix c(rows_, b.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpz_class& aik = (*this)(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

mpz_class determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::BadParameters, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  mpz_class sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

class SmithReducer {
 public:
  explicit SmithReducer(const IntMatrix& a)
      : m_(a), u_(IntMatrix::identity(a.rows())), v_(IntMatrix::identity(a.cols())) {}

  SmithForm run() {
    const std::size_t lim = std::min(m_.rows(), m_.cols());
    for (std::size_t t = 0; t < lim; ++t) {
      if (!reduce_at(t)) break;
      if (m_(t, t) < 0) negate_row(t);
    }
    return SmithForm{std::move(m_), std::move(u_), std::move(v_)};
  }

 private:
  // Smallest nonzero |entry| in the trailing block; ties by row-major position.
  bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    mpz_class best;
    for (std::size_t i = t; i < m_.rows(); ++i)
      for (std::size_t j = t; j < m_.cols(); ++j) {
        const mpz_class& x = m_(i, j);
        if (x == 0) continue;
        if (!found || abs(x) < best) {
          best = abs(x);
          pi = i;
          pj = j;
          found = true;
        }
      }
    return found;
  }

  bool reduce_at(std::size_t t) {
    for (;;) {
      std::size_t pi = 0;
      std::size_t pj = 0;
      if (!find_pivot(t, pi, pj)) return false;
      swap_rows(t, pi);
      swap_cols(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < m_.rows(); ++i) {
        if (m_(i, t) == 0) continue;
        const mpz_class q = m_(i, t) / m_(t, t);
        add_row(i, t, -q);
        if (m_(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < m_.cols(); ++j) {
        if (m_(t, j) == 0) continue;
        const mpz_class q = m_(t, j) / m_(t, t);
        add_col(j, t, -q);
        if (m_(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      bool divisible = true;
      for (std::size_t i = t + 1; i < m_.rows() && divisible; ++i)
        for (std::size_t j = t + 1; j < m_.cols(); ++j)
          if (m_(i, j) % m_(t, t) != 0) {
            add_row(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) return true;
    }
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m_.cols(); ++j) std::swap(m_(a, j), m_(b, j));
    for (std::size_t j = 0; j < u_.cols(); ++j) std::swap(u_(a, j), u_(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m_.rows(); ++i) std::swap(m_(i, a), m_(i, b));
    for (std::size_t i = 0; i < v_.rows(); ++i) std::swap(v_(i, a), v_(i, b));
  }
  // row dst += k * row src
  void add_row(std::size_t dst, std::size_t src, const mpz_class& k) {
    for (std::size_t j = 0; j < m_.cols(); ++j) m_(dst, j) += k * m_(src, j);
    for (std::size_t j = 0; j < u_.cols(); ++j) u_(dst, j) += k * u_(src, j);
  }
  // col dst += k * col src
  void add_col(std::size_t dst, std::size_t src, const mpz_class& k) {
    for (std::size_t i = 0; i < m_.rows(); ++i) m_(i, dst) += k * m_(i, src);
    for (std::size_t i = 0; i < v_.rows(); ++i) v_(i, dst) += k * v_(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < m_.cols(); ++j) m_(r, j) = -m_(r, j);
    for (std::size_t j = 0; j < u_.cols(); ++j) u_(r, j) = -u_(r, j);
  }

  IntMatrix m_;
  IntMatrix u_;
  IntMatrix v_;
};

void check_smith(const IntMatrix& a, const SmithForm& f) {
  const auto fail = [](const char* why) {
    throw std::logic_error(std::string("Smith normal form check failed: ") + why);
  };
  if (f.U * a * f.V != f.S) fail("S != U A V");
  if (abs(determinant(f.U)) != 1) fail("U is not unimodular");
  if (abs(determinant(f.V)) != 1) fail("V is not unimodular");
  const std::size_t lim = std::min(f.S.rows(), f.S.cols());
  for (std::size_t i = 0; i < f.S.rows(); ++i)
    for (std::size_t j = 0; j < f.S.cols(); ++j)
      if (i != j && f.S(i, j) != 0) fail("S is not diagonal");
  for (std::size_t i = 0; i < lim; ++i) {
    if (f.S(i, i) < 0) fail("negative diagonal entry");
    if (i + 1 < lim) {
      const mpz_class& d = f.S(i, i);
      const mpz_class& e = f.S(i + 1, i + 1);
      if (d == 0 ? e != 0 : e % d != 0) fail("divisibility chain broken");
    }
  }
}

mpz_class diagonal(const SmithForm& f, std::size_t i) {
  return i < std::min(f.S.rows(), f.S.cols()) ? f.S(i, i) : mpz_class(0);
}

std::vector<mpz_class> coordinates(const Word& w, const SmithForm& f) {
  const auto x = abelianize_word(w, f.V.rows());
  std::vector<mpz_class> y(f.V.cols());
  for (std::size_t j = 0; j < f.V.cols(); ++j)
    for (std::size_t i = 0; i < x.size(); ++i) y[j] += x[i] * f.V(i, j);
  return y;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithForm f = SmithReducer(a).run();
  check_smith(a, f);
  return f;
}

std::vector<mpz_class> invariant_factors(const SmithForm& f) {
  std::vector<mpz_class> out;
  for (std::size_t i = 0; i < std::min(f.S.rows(), f.S.cols()); ++i)
    if (f.S(i, i) != 0) out.push_back(f.S(i, i));
  return out;
}

std::optional<mpz_class> H1Result::order() const {
  if (free_rank > 0) return std::nullopt;
  mpz_class n = 1;
  for (const auto& d : torsion) n *= d;
  return n;
}

std::string to_string(const H1Result& h) {
  std::string out;
  if (h.free_rank == 1) out = "Z";
  else if (h.free_rank > 1) out = "Z^" + std::to_string(h.free_rank);
  for (const auto& d : h.torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + d.get_str();
  }
  return out.empty() ? "0" : out;
}

std::vector<mpz_class> abelianize_word(const Word& w, std::size_t n_gens) {
  if (w.generator_bound() > n_gens)
    throw Error(ErrorKind::GeneratorOutOfRange, "word uses a generator outside the table");
  std::vector<mpz_class> v(n_gens);
  for (const auto& s : w.syllables()) v[s.gen] += mpz_class(static_cast<long>(s.exp));
  return v;
}

IntMatrix relation_matrix(const Presentation& p) {
  const std::size_t n = p.generator_count();
  IntMatrix a(p.relators().size(), n);
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    const auto row = abelianize_word(p.relators()[i], n);
    for (std::size_t j = 0; j < n; ++j) a(i, j) = row[j];
  }
  return a;
}

H1Result h1(const Presentation& p) {
  const SmithForm f = smith_normal_form(relation_matrix(p));
  H1Result out;
  out.free_rank = p.generator_count();
  for (const auto& d : invariant_factors(f)) {
    --out.free_rank;
    if (d != 1) out.torsion.push_back(d);
  }
  return out;
}

std::optional<mpz_class> abelian_order_of_image(const Word& w, const Presentation& p) {
  p.check_word(w);
  const SmithForm f = smith_normal_form(relation_matrix(p));
  const auto y = coordinates(w, f);
  mpz_class order = 1;
  for (std::size_t j = 0; j < y.size(); ++j) {
    const mpz_class d = diagonal(f, j);
    if (d == 0) {
      if (y[j] != 0) return std::nullopt;
      continue;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), y[j].get_mpz_t());
    const mpz_class k = d / g;
    mpz_lcm(order.get_mpz_t(), order.get_mpz_t(), k.get_mpz_t());
  }
  return order;
}

std::optional<AbelianWitness> abelian_witness(const Word& w, const Presentation& p) {
  p.check_word(w);
  const SmithForm f = smith_normal_form(relation_matrix(p));
  const auto y = coordinates(w, f);
  std::optional<std::size_t> pick;
  // A free coordinate first, then the first torsion coordinate that sees w.
  for (std::size_t j = 0; j < y.size() && !pick; ++j)
    if (diagonal(f, j) == 0 && y[j] != 0) pick = j;
  for (std::size_t j = 0; j < y.size() && !pick; ++j) {
    const mpz_class d = diagonal(f, j);
    if (d > 1 && y[j] % d != 0) pick = j;
  }
  if (!pick) return std::nullopt;
  AbelianWitness wit;
  wit.modulus = diagonal(f, *pick);
  for (std::size_t i = 0; i < f.V.rows(); ++i) {
    mpz_class v = f.V(i, *pick);
    if (wit.modulus != 0) {
      v %= wit.modulus;
      if (v < 0) v += wit.modulus;
    }
    wit.images.push_back(v);
  }
  wit.image_order = abelian_order_of_image(w, p);
  return wit;
}

bool check_abelian_witness(const AbelianWitness& wit, const Word& w, const Presentation& p) {
  if (wit.images.size() != p.generator_count() || wit.modulus < 0 || wit.modulus == 1) return false;
  if (w.generator_bound() > p.generator_count()) return false;
  const auto value = [&](const Word& u) {
    mpz_class s = 0;
    for (const auto& syl : u.syllables())
      s += wit.images[syl.gen] * mpz_class(static_cast<long>(syl.exp));
    if (wit.modulus != 0) {
      s %= wit.modulus;
      if (s < 0) s += wit.modulus;
    }
    return s;
  };
  for (const auto& r : p.relators())
    if (value(r) != 0) return false;
  return value(w) != 0;
}

}  // namespace fillscope

#include <gtest/gtest.h>

#include <random>

#include "fillscope/homology.hpp"
#include "fillscope/textio.hpp"

using namespace fillscope;

namespace {

// Laplace expansion; fine up to 6x6.
mpz_class naive_det(const std::vector<std::vector<mpz_class>>& m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  mpz_class d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<mpz_class>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<mpz_class> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    mpz_class t = m[0][j] * naive_det(minor);
    d += (j % 2 ? -t : t);
  }
  return d;
}

void subsets(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// gcd of all k x k minors.
mpz_class minor_gcd(const IntMatrix& a, std::size_t k) {
  std::vector<std::vector<std::size_t>> rs, cs;
  std::vector<std::size_t> cur;
  subsets(a.rows(), k, 0, cur, rs);
  subsets(a.cols(), k, 0, cur, cs);
  mpz_class g = 0;
  for (const auto& r : rs)
    for (const auto& c : cs) {
      std::vector<std::vector<mpz_class>> m(k, std::vector<mpz_class>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m[i][j] = a(r[i], c[j]);
      mpz_class d = naive_det(m);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    }
  return g;
}

mpz_class abs_det(const IntMatrix& m) {
  std::vector<std::vector<mpz_class>> v(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v[i][j] = m(i, j);
  mpz_class d = naive_det(v);
  return abs(d);
}

H1Result h1_of(const std::string& s) { return h1(parse_presentation(SourceText{s})); }

}  // namespace

TEST(Homology, SmithFormOn1000RandomMatrices) {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> dim(1, 6), small(-9, 9), big(-1000, 1000), pick(0, 9);
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t r = static_cast<std::size_t>(dim(rng)), c = static_cast<std::size_t>(dim(rng));
    IntMatrix a(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        int roll = pick(rng);
        a(i, j) = roll < 3 ? 0 : roll < 8 ? small(rng) : big(rng);
      }
    if (trial % 10 == 0 && r > 1)
      for (std::size_t j = 0; j < c; ++j) a(r - 1, j) = 2 * a(0, j);  // force rank deficiency
    SmithForm f = smith_normal_form(a);
    ASSERT_EQ(f.U * a * f.V, f.S);
    EXPECT_EQ(abs_det(f.U), 1);
    EXPECT_EQ(abs_det(f.V), 1);
    std::size_t k = std::min(r, c);
    mpz_class prod = 1;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) ASSERT_EQ(f.S(i, j), 0);
    for (std::size_t i = 0; i < k; ++i) {
      ASSERT_GE(f.S(i, i), 0);
      if (i + 1 < k && f.S(i, i) != 0) EXPECT_TRUE(mpz_divisible_p(f.S(i + 1, i + 1).get_mpz_t(), f.S(i, i).get_mpz_t()));
      if (i + 1 < k && f.S(i, i) == 0) EXPECT_EQ(f.S(i + 1, i + 1), 0);
      prod *= f.S(i, i);
      EXPECT_EQ(prod, minor_gcd(a, i + 1)) << "k=" << i + 1;
    }
  }
}

TEST(Homology, Determinant) {
  IntMatrix a(3, 3, {2, -1, 0, -1, 2, -1, 0, -1, 2});
  EXPECT_EQ(determinant(a), 4);
  EXPECT_EQ(determinant(IntMatrix::identity(5)), 1);
}

TEST(Homology, H1Values) {
  EXPECT_EQ(to_string(h1_of("< a, b >")), "Z^2");
  EXPECT_EQ(to_string(h1_of("< a | a^6 >")), "Z/6");
  EXPECT_EQ(to_string(h1_of("< a, b | a^2, b^3 >")), "Z/6");
  EXPECT_EQ(to_string(h1_of("< a, b | a^2, b^4 >")), "Z/2 + Z/4");
  EXPECT_EQ(to_string(h1_of("< a, b | a b a^-1 b^-1 >")), "Z^2");
  EXPECT_EQ(to_string(h1_of("< a, b | a^3 b^-2 >")), "Z");
  EXPECT_EQ(to_string(h1_of("< a, b | a^2, b^3, (a b)^5 >")), "0");
  H1Result r = h1_of("< x, y | x^2 = y^3, x^2 >");
  EXPECT_EQ(r.order(), mpz_class(6));
  EXPECT_FALSE(h1_of("< a, b | a^4 >").order().has_value());
}

TEST(Homology, ImageOrdersAndWitnesses) {
  Presentation p = parse_presentation(SourceText{"< a, b | a^4, b^6, a^2 b^3 >"});
  EXPECT_EQ(abelian_order_of_image(Word::generator(0), p), mpz_class(4));
  EXPECT_EQ(abelian_order_of_image(power(Word::generator(1), 2), p), mpz_class(3));
  EXPECT_EQ(abelian_order_of_image(Word::generator(0, 4), p), mpz_class(1));
  for (const Word& w : {Word::generator(0), Word::generator(1), Word::generator(0, 2) * Word::generator(1)}) {
    auto wit = abelian_witness(w, p);
    ASSERT_TRUE(wit.has_value());
    EXPECT_TRUE(check_abelian_witness(*wit, w, p));
  }
  EXPECT_FALSE(abelian_witness(Word::generator(0, 4), p).has_value());
  Presentation z = parse_presentation(SourceText{"< a, b | a b^-1 >"});
  auto wit = abelian_witness(Word::generator(0), z);
  ASSERT_TRUE(wit.has_value());
  EXPECT_EQ(wit->modulus, 0);
  EXPECT_FALSE(wit->image_order.has_value());
  AbelianWitness forged{2, {1, 0}, 2};
  EXPECT_FALSE(check_abelian_witness(forged, Word::generator(0), z));
}

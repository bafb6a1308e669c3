#include <gtest/gtest.h>

#include <random>

#include "fillscope/error.hpp"
#include "fillscope/textio.hpp"

using namespace fillscope;

namespace {

Word random_word(std::mt19937& rng, std::size_t gens, int max_syl) {
  std::uniform_int_distribution<int> len(0, max_syl), e(-4, 4);
  std::vector<Syllable> raw;
  for (int i = len(rng); i > 0; --i) raw.push_back({static_cast<GenId>(rng() % gens), e(rng)});
  return Word::from_raw(raw);
}

Presentation random_presentation(std::mt19937& rng) {
  std::size_t n = 1 + rng() % 4;
  std::vector<std::string> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back("g" + std::to_string(i) + (i % 2 ? "_x" : ""));
  std::vector<Word> rels;
  for (int i = static_cast<int>(rng() % 5); i > 0; --i) rels.push_back(random_word(rng, n, 8));
  std::optional<Peripheral> per;
  Word m = random_word(rng, n, 4), l = random_word(rng, n, 6);
  if (rng() % 2 && !m.is_identity() && !l.is_identity()) per = Peripheral{m, l};
  return Presentation(gens, rels, per);
}

}  // namespace

TEST(TextIo, WordRoundTrip1000) {
  std::mt19937 rng(21);
  const std::vector<std::string> gens{"a", "b", "c", "mu_2"};
  for (int i = 0; i < 1000; ++i) {
    Word w = random_word(rng, gens.size(), 12);
    std::string s = serialize(w, gens);
    EXPECT_EQ(parse_word(SourceText{s}, gens), w) << s;
  }
}

TEST(TextIo, PresentationRoundTrip1000) {
  std::mt19937 rng(22);
  for (int i = 0; i < 1000; ++i) {
    Presentation p = random_presentation(rng);
    std::string s = serialize(p);
    Presentation q = parse_presentation(SourceText{s});
    EXPECT_EQ(q, p) << s;
    EXPECT_EQ(serialize(q), s);
  }
}

TEST(TextIo, GrammarForms) {
  Presentation p = parse_presentation(SourceText{"< x, y | x^2 = y^3, (x y)^-2 # note\n >"});
  ASSERT_EQ(p.relators().size(), 2u);
  const auto& g = p.generators();
  EXPECT_EQ(p.relators()[0], normalize_relator(parse_word(SourceText{"x^2*y^-3"}, g)));
  EXPECT_EQ(p.relators()[1], normalize_relator(parse_word(SourceText{"y^-1 x^-1 y^-1 x^-1"}, g)));
  EXPECT_TRUE(parse_word(SourceText{"1"}, g).is_identity());
  EXPECT_EQ(parse_word(SourceText{"x x^-1 y"}, g), Word::generator(1));
  Presentation f = parse_presentation(SourceText{"< a, b >"});
  EXPECT_TRUE(f.relators().empty());
  Presentation k = parse_presentation(SourceText{"< t, a | t a | meridian = t, longitude = a t^-1 >"});
  ASSERT_TRUE(k.peripheral().has_value());
  EXPECT_EQ(k.peripheral()->meridian, Word::generator(0));
}

TEST(TextIo, ErrorsCarryPositions) {
  const auto kind_at = [](const std::string& text) -> std::pair<ErrorKind, std::size_t> {
    try {
      parse_presentation(SourceText{text});
    } catch (const ParseError& e) {
      return {e.kind(), e.position()};
    }
    return {ErrorKind::Io, 0};
  };
  EXPECT_EQ(kind_at("< a, b | a c >").first, ErrorKind::UnknownGenerator);
  EXPECT_EQ(kind_at("< a, b | a c >").second, 11u);
  EXPECT_EQ(kind_at("< a, a | a >").first, ErrorKind::DuplicateGenerator);
  EXPECT_EQ(kind_at("< | >").first, ErrorKind::EmptyGeneratorList);
  EXPECT_EQ(kind_at("< a | a^ >").first, ErrorKind::SyntaxError);
  EXPECT_EQ(kind_at("< a | (a >").first, ErrorKind::SyntaxError);
  EXPECT_EQ(kind_at("< a | a").first, ErrorKind::SyntaxError);
}

TEST(TextIo, Slopes) {
  EXPECT_EQ(parse_slope("-3/2"), Slope(-3, 2));
  EXPECT_EQ(parse_slope("5"), Slope(5, 1));
  EXPECT_EQ(serialize(Slope(0, 1)), "0/1");
  EXPECT_THROW(parse_slope("2/4"), Error);
  EXPECT_THROW(parse_slope("1/0"), Error);
  EXPECT_THROW(parse_slope("x"), Error);
}

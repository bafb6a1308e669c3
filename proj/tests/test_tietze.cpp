#include <gtest/gtest.h>

#include "fillscope/atlas.hpp"
#include "fillscope/coset_enum.hpp"
#include "fillscope/dehn_fill.hpp"
#include "fillscope/homology.hpp"
#include "fillscope/textio.hpp"
#include "fillscope/tietze.hpp"

using namespace fillscope;

namespace {

std::uint64_t order_of(const Presentation& p) {
  EnumResult r = group_order(p);
  EXPECT_TRUE(r.complete);
  return r.table.coset_count();
}

// The map to the simplified group kills every original relator in every
// regular table we can build for the target.
void expect_map_sound(const Presentation& src, const TietzeResult& t) {
  EnumResult r = group_order(t.presentation);
  ASSERT_TRUE(r.complete);
  auto oracle = coset_table_oracle(r.table);
  EXPECT_EQ(check_map_is_homomorphism(t.to_simplified, t.presentation, oracle).verdict, MapVerdict::Certified);
  EXPECT_EQ(t.to_simplified.source().generators(), src.generators());
}

}  // namespace

TEST(Tietze, PreservesOrderAndMap) {
  for (const char* s : {"< a, b, c | a b^-1, b c^-1, a^5 >", "< a, b | a^3, b^2, (a b)^2 >",
                        "< a, b, c | c a^-1 b^-1, a^2, b^3, c^5 >", "< x, y, z | x y z, x^2, y^3, z^4 >"}) {
    Presentation p = parse_presentation(SourceText{s});
    TietzeResult t = tietze_simplify(p);
    EXPECT_LE(t.presentation.total_length(), p.total_length()) << s;
    EXPECT_EQ(order_of(t.presentation), order_of(p)) << s;
    expect_map_sound(p, t);
  }
}

TEST(Tietze, EliminatesGenerators) {
  Presentation p = parse_presentation(SourceText{"< a, b, c | a b^-1, b c^-1, a^5 >"});
  TietzeResult t = tietze_simplify(p);
  EXPECT_EQ(t.presentation.generator_count(), 1u);
  EXPECT_FALSE(t.moves.empty());
}

TEST(Tietze, DropsDuplicatesAndTrivia) {
  Presentation p = parse_presentation(SourceText{"< a, b | a^3, a^-3, b a^3 b^-1, b^2 >"});
  TietzeResult t = tietze_simplify(p);
  EXPECT_EQ(t.presentation.relators().size(), 2u);
}

TEST(Tietze, KeepsHomologyOfFillings) {
  AtlasEntry f = figure_eight();
  for (std::int64_t p : {-5, 0, 3, 7}) {
    Presentation q = fill(f, Slope(p, 1)).presentation;
    TietzeResult t = tietze_simplify(q);
    EXPECT_EQ(h1(t.presentation), h1(q));
  }
}

TEST(Tietze, ZeroEffortIsIdentity) {
  Presentation p = parse_presentation(SourceText{"< a, b, c | a b^-1, c >"});
  TietzeResult t = tietze_simplify(p, TietzeEffort{0});
  EXPECT_EQ(t.presentation.generator_count(), 3u);
  EXPECT_TRUE(t.moves.empty());
}

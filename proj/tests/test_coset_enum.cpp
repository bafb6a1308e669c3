#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "fillscope/atlas.hpp"
#include "fillscope/coset_enum.hpp"
#include "fillscope/error.hpp"
#include "fillscope/textio.hpp"

using namespace fillscope;

namespace {

using Perm = std::vector<Coset>;

Presentation pres(const std::string& s) { return parse_presentation(SourceText{s}); }

Perm compose(const Perm& a, const Perm& b) {  // apply a, then b
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[static_cast<std::size_t>(a[i])];
  return r;
}

// Closure of a set of permutations under composition.
std::size_t group_size(const std::vector<Perm>& gens) {
  if (gens.empty()) return 1;
  Perm id(gens[0].size());
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> seen{id};
  std::vector<Perm> todo{id};
  while (!todo.empty()) {
    Perm x = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      Perm y = compose(x, g);
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return seen.size();
}

std::vector<Perm> perms_of(const CosetTable& t) {
  std::vector<Perm> out;
  for (GenId g = 0; g < t.generator_count(); ++g) out.push_back(t.generator_permutation(g));
  return out;
}

void expect_regular_order(const Presentation& p, std::uint64_t n) {
  EnumResult r = group_order(p);
  ASSERT_TRUE(r.complete) << r.exhausted_reason;
  EXPECT_EQ(*r.index(), n);
  EXPECT_TRUE(verify_table(r.table, p).ok);
  // A regular table realises the group itself.
  EXPECT_EQ(group_size(perms_of(r.table)), n);
}

bool transitive(const std::vector<Perm>& gens, std::size_t n) {
  std::vector<bool> seen(n);
  std::vector<std::size_t> todo{0};
  seen[0] = true;
  while (!todo.empty()) {
    std::size_t x = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      auto y = static_cast<std::size_t>(g[x]);
      if (seen[y]) continue;
      seen[y] = true;
      todo.push_back(y);
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

// Number of conjugacy classes of index-n subgroups of F_2: orbits of S_n on
// transitive pairs under simultaneous conjugation.
std::size_t f2_classes(std::size_t n) {
  std::vector<Perm> all;
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  do all.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::set<std::pair<Perm, Perm>> seen;
  std::size_t orbits = 0;
  for (const auto& a : all)
    for (const auto& b : all) {
      if (!transitive({a, b}, n) || seen.count({a, b})) continue;
      ++orbits;
      for (const auto& s : all) {
        Perm si(n);
        for (std::size_t i = 0; i < n; ++i) si[static_cast<std::size_t>(s[i])] = static_cast<Coset>(i);
        seen.insert({compose(compose(si, a), s), compose(compose(si, b), s)});
      }
    }
  return orbits;
}

std::size_t classes_up_to(const Presentation& p, std::size_t k) {
  LowIndexReport rep;
  auto tables = low_index_tables(p, k, {}, &rep);
  EXPECT_TRUE(rep.exhaustive());
  for (const auto& t : tables) EXPECT_TRUE(verify_table(t, p).ok);
  return tables.size();
}

}  // namespace

TEST(CosetEnum, SmallGroupsAgainstPermutationClosure) {
  expect_regular_order(pres("< a, b | a^3, b^2, (a b)^2 >"), 6);
  expect_regular_order(pres("< a, b | a^2, b^3, (a b)^5 >"), 60);
  expect_regular_order(pres("< a, b | a^2, b^3, (a b)^4 >"), 24);
  expect_regular_order(pres("< a | a^7 >"), 7);
  expect_regular_order(pres("< a, b | a^4, b^2, (a b)^2 >"), 8);
  expect_regular_order(pres("< x, y | x^2 = y^3, x^2, x y x^-1 y^-1 >"), 6);
  expect_regular_order(pres("< a, b | a b a^-1 b^-1, a^3, b^9 >"), 27);
}

TEST(CosetEnum, FreeProductIsExhausted) {
  EnumBudget b;
  b.max_cosets = 20'000;
  EnumResult r = group_order(pres("< x, y | x^2 = y^3, x^2 >"), b);
  EXPECT_FALSE(r.complete);
  EXPECT_FALSE(r.exhausted_reason.empty());
}

TEST(CosetEnum, Figure8Quotient336) {
  AtlasEntry f = figure_eight();
  Word g = parse_word("t^-1*(a^2*t*a)*t^2*(a^2*t*a)^-1", f.presentation);
  Presentation q = f.presentation.with_relators({g});
  EnumResult r = group_order(q);
  ASSERT_TRUE(r.complete);
  EXPECT_EQ(*r.index(), 336u);
  EXPECT_TRUE(verify_table(r.table, q).ok);
  auto t = permutation_of(r.table, f.meridian());
  ASSERT_TRUE(t.has_value());
  EXPECT_FALSE(is_identity_permutation(*t));
}

TEST(CosetEnum, SubgroupIndex) {
  Presentation s3 = pres("< a, b | a^3, b^2, (a b)^2 >");
  EnumResult r = enumerate(s3, {Word::generator(0)});
  ASSERT_TRUE(r.complete);
  EXPECT_EQ(*r.index(), 2u);
  EXPECT_TRUE(verify_table(r.table, s3).ok);
  r = enumerate(s3, {Word::generator(1)});
  EXPECT_EQ(*r.index(), 3u);
  EXPECT_TRUE(verify_table(r.table, s3).ok);
}

TEST(CosetEnum, BudgetValidation) {
  EnumBudget b;
  b.max_cosets = 0;
  EXPECT_THROW(group_order(pres("< a | a^2 >"), b), Error);
}

TEST(CosetEnum, TableCheckerRejectsBrokenTables) {
  Presentation s3 = pres("< a, b | a^3, b^2, (a b)^2 >");
  EnumResult r = group_order(s3);
  ASSERT_TRUE(r.complete);
  auto e = r.table.entries();
  std::swap(e[0], e[e.size() - 2]);
  CosetTable bad(2, r.table.coset_count(), e, true, {});
  EXPECT_FALSE(verify_table(bad, s3).ok);
  CosetTable wrong = CosetTable::from_permutations({{1, 2, 0}, {0, 1, 2}});
  EXPECT_FALSE(verify_table(wrong, s3).ok);
}

TEST(CosetEnum, DumpRoundTrip) {
  Presentation a5 = pres("< a, b | a^2, b^3, (a b)^5 >");
  EnumResult r = group_order(a5);
  std::vector<std::string> names;
  CosetTable t = parse_table_dump(dump_table(r.table, a5.generators()), &names);
  EXPECT_EQ(names, a5.generators());
  EXPECT_EQ(t.entries(), r.table.entries());
  EXPECT_TRUE(verify_table(t, a5).ok);
}

TEST(CosetEnum, Oracle) {
  Presentation s3 = pres("< a, b | a^3, b^2, (a b)^2 >");
  auto oracle = coset_table_oracle(group_order(s3).table);
  EXPECT_EQ(oracle(power(Word::generator(0), 3)), true);
  EXPECT_EQ(oracle(Word::generator(1)), false);
}

TEST(LowIndex, FreeGroupCountsMatchBruteForce) {
  Presentation f2 = pres("< a, b >");
  std::size_t total = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    total += f2_classes(n);
    EXPECT_EQ(classes_up_to(f2, n), total) << n;
  }
  EXPECT_EQ(total, 1u + 3u + 7u + 26u);
}

TEST(LowIndex, CyclicAndTrefoil) {
  EXPECT_EQ(classes_up_to(pres("< a | a^5 >"), 6), 2u);
  EXPECT_EQ(classes_up_to(pres("< a | a^6 >"), 6), 4u);
  Presentation tre = torus_knot(2, 3).presentation;
  auto tables = low_index_tables(tre, 3);
  bool s3 = false;
  for (const auto& t : tables) {
    EXPECT_TRUE(verify_table(t, tre).ok);
    if (t.coset_count() == 3 && group_size(perms_of(t)) == 6) s3 = true;
  }
  EXPECT_TRUE(s3);
}

TEST(LowIndex, ConsumerCanStop) {
  std::size_t seen = 0;
  auto rep = low_index_subgroups(pres("< a, b >"), 4, {}, [&](const CosetTable&) { return ++seen < 5; });
  EXPECT_EQ(seen, 5u);
  EXPECT_TRUE(rep.stopped_by_consumer);
  EXPECT_FALSE(rep.exhaustive());
}

TEST(LowIndex, BranchBudget) {
  LowIndexBudget tiny;
  tiny.max_nodes_per_branch = 3;
  LowIndexReport rep;
  low_index_tables(pres("< a, b >"), 5, tiny, &rep);
  EXPECT_FALSE(rep.exhausted_branches.empty());
}

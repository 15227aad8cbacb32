#include <gtest/gtest.h>

#include <random>

#include "test_config.hpp"
#include "trilin/indexsets.hpp"

using namespace trilin;

namespace {

MultiIndex mi(const char* s) { return parse_multiindex(s); }
IndexSet set(const char* s) { return parse_index_set(s); }

// elements not strictly generated by another element, by exhaustive pairs
IndexSet brute_weakly_essential(const IndexSet& s, std::size_t i) {
  IndexSet r;
  for (const auto& a : s) {
    if (a.proper_index() != i) continue;
    bool gen = false;
    for (const auto& b : s)
      if (b.proper_index() == i && !(a == b) && generates(b, a)) gen = true;
    if (!gen) r.insert(a);
  }
  return r;
}

}  // namespace

TEST(IndexSet, ParsePrint) {
  EXPECT_EQ(to_string(set("{(0,3),(1,1)}")), "{(0,3),(1,1)}");
  EXPECT_EQ(to_string(set("{}")), "{}");
  EXPECT_THROW(set("{(0,3),"), std::invalid_argument);
}

TEST(IndexSet, Least) {
  EXPECT_EQ(least(set("{(1,3),(2,1)}"), 2), mi("(1,3)"));
  EXPECT_EQ(least(set("{(0,2,1),(1,0,1)}"), 3), mi("(0,2,1)"));
  EXPECT_EQ(least(set("{(4,4)}"), 2), mi("(4,4)"));
  EXPECT_THROW(least(IndexSet{}, 2), std::invalid_argument);
}

TEST(IndexSet, InGenerated) {
  EXPECT_TRUE(in_generated(set("{(1,2,1)}"), mi("(3,1,1)")));
  EXPECT_FALSE(in_generated(set("{(0,3)}"), mi("(0,2)")));
  EXPECT_FALSE(in_generated(IndexSet{}, mi("(1)")));
}

TEST(IndexSet, WeaklyEssential) {
  IndexSet sinjet = set("{(0,3),(1,1),(0,9)}");
  EXPECT_EQ(weakly_essential_alg1(sinjet, 2), set("{(0,3),(1,1)}"));
  EXPECT_EQ(weakly_essential_alg2(sinjet, 2), set("{(0,3),(1,1)}"));
  EXPECT_EQ(weakly_essential_alg1(set("{(1,2,1),(2,2,0)}"), 3), set("{(1,2,1)}"));
  EXPECT_EQ(weakly_essential_alg2(set("{(1,2,1),(2,2,0)}"), 3), set("{(1,2,1)}"));
  EXPECT_EQ(weakly_essential_alg1(set("{(2,5)}"), 2), set("{(2,5)}"));
  EXPECT_EQ(weakly_essential_alg2(set("{(2,5)}"), 2), set("{(2,5)}"));
  // (3,0) is a proper 1-index and is ignored at i = 2
  EXPECT_EQ(weakly_essential_alg1(set("{(0,3),(1,1),(3,0)}"), 2), set("{(0,3),(1,1)}"));
  EXPECT_EQ(weakly_essential_alg2(set("{(0,3),(1,1),(3,0)}"), 2), set("{(0,3),(1,1)}"));
}

TEST(IndexSet, AllProperTwoIndicesReduceToUnit) {
  auto all = proper_indices_up_to(2, 4);
  IndexSet s(all.begin(), all.end());
  EXPECT_EQ(weakly_essential_alg1(s, 2), set("{(0,1)}"));
  EXPECT_EQ(weakly_essential_alg2(s, 2), set("{(0,1)}"));
}

TEST(IndexSet, EssentialSets) {
  // top slot is kept as is
  auto e = essential_sets({IndexSet{}, IndexSet{}, set("{(0,3),(1,1)}")});
  EXPECT_EQ(e[2], set("{(0,3),(1,1)}"));
  // x2 = y2 + y1 + y1^2 puts y1^3 into x2^2, so (0,2) generates (3)
  auto e2 = essential_sets({IndexSet{}, set("{(3)}"), set("{(0,2)}")});
  EXPECT_TRUE(generates(mi("(0,2)"), mi("(3)")));
  EXPECT_TRUE(e2[1].empty());
  auto e3 = essential_sets({IndexSet{}, set("{(3)}"), set("{(4,1)}")});
  EXPECT_EQ(e3[1], set("{(3)}"));
  auto e4 = essential_sets(
      {IndexSet{}, IndexSet{}, IndexSet{}, IndexSet{}, set("{(0,0,1,3),(1,0,0,1)}")});
  EXPECT_EQ(e4[4], set("{(0,0,1,3),(1,0,0,1)}"));
}

TEST(IndexSet, Complement) {
  auto c = complement_of_generated(set("{(0,3),(1,1)}"), 2);
  ASSERT_TRUE(c.finite);
  EXPECT_EQ(c.elements, set("{(0,1),(0,2)}"));
  EXPECT_EQ(c.bound, 3u);
  auto c2 = complement_of_generated(set("{(0,1)}"), 2);
  ASSERT_TRUE(c2.finite);
  EXPECT_TRUE(c2.elements.empty());
  EXPECT_FALSE(complement_of_generated(set("{(1,1)}"), 2).finite);
  EXPECT_EQ(lambda_bound(set("{(0,3),(1,1)}"), 2), 3u);
  EXPECT_FALSE(lambda_bound(set("{(1,1)}"), 2).has_value());
}

TEST(IndexSet, ComplementMatchesEnumeration) {
  // every proper 2-index of order <= 8 outside the complement is generated
  IndexSet e = set("{(0,3),(1,1)}");
  auto c = complement_of_generated(e, 2);
  for (const auto& a : proper_indices_up_to(2, 8)) EXPECT_EQ(in_generated(e, a), c.elements.count(a) == 0) << a.str();
}

TEST(IndexSet, AlgorithmsMatchBruteForce) {
  std::mt19937_64 rng(cfg::kSeed + 7);
  std::uniform_int_distribution<std::size_t> dim(1, 4), size(0, 25);
  for (int t = 0; t < 300; ++t) {
    std::size_t i = dim(rng);
    auto pool = proper_indices_up_to(i, 6);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    IndexSet s;
    std::size_t m = size(rng);
    for (std::size_t k = 0; k < m; ++k) s.insert(pool[pick(rng)]);
    IndexSet want = brute_weakly_essential(s, i);
    EXPECT_EQ(weakly_essential_alg1(s, i), want);
    EXPECT_EQ(weakly_essential_alg2(s, i), want);
  }
}

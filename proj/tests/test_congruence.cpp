#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "census/congruence.hpp"
#include "census/errors.hpp"

using namespace census;

namespace {

Word W(const std::string& s) { return Word::parse(s); }

const char* kRunningExample =
    "a^2 -> 1\n"
    "ab -> 1\n"
    "ba^2 -> b\n"
    "bab -> ba\n"
    "b^2a -> b^2\n"
    "b^3 -> a\n";

RightCongruence running_example() { return RightCongruence::parse(kRunningExample); }

// Oracle: index-n subgroups of F_2 = transitive actions of <a, b> on
// {0..n-1} with 0 as base point, i.e. (#transitive pairs in S_n) / (n-1)!.
std::uint64_t transitive_pair_count(int n) {
  std::vector<int> x(static_cast<std::size_t>(n));
  std::iota(x.begin(), x.end(), 0);
  std::vector<std::vector<int>> perms;
  do perms.push_back(x);
  while (std::next_permutation(x.begin(), x.end()));
  std::uint64_t count = 0;
  for (const auto& s : perms) {
    for (const auto& t : perms) {
      std::vector<bool> seen(static_cast<std::size_t>(n), false);
      std::vector<int> stack{0};
      seen[0] = true;
      int reached = 1;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : {s[static_cast<std::size_t>(v)], t[static_cast<std::size_t>(v)]}) {
          if (!seen[static_cast<std::size_t>(w)]) {
            seen[static_cast<std::size_t>(w)] = true;
            ++reached;
            stack.push_back(w);
          }
        }
      }
      if (reached == n) ++count;
    }
  }
  std::uint64_t fact = 1;
  for (int i = 2; i < n; ++i) fact *= static_cast<std::uint64_t>(i);
  return count / fact;
}

}  // namespace

TEST(RightCongruence, ParseAndValidate) {
  const RightCongruence rc = running_example();
  EXPECT_EQ(rc.n(), 5);
  EXPECT_EQ(rc.f(W("bab")), W("ba"));
  EXPECT_EQ(rc.to_text(), kRunningExample);
  EXPECT_EQ(RightCongruence::parse("aa -> 1\nab -> a\nb -> 1\n").f(W("ab")), W("a"));
  // f(c) must be a prefix below c
  EXPECT_THROW(RightCongruence::parse("a -> 1\nb -> b\n"), InvalidCongruence);
  EXPECT_THROW(RightCongruence::parse("aa -> 1\nab -> ab\nb -> 1\n"), InvalidCongruence);
  EXPECT_THROW(RightCongruence::parse("a -> 1\n"), InvalidCongruence);
  EXPECT_THROW(RightCongruence::parse("a -> 1\nb\n"), InvalidCongruence);
}

TEST(ActionTable, RunningExample) {
  const ActionTable t = action_table(running_example());
  ASSERT_EQ(t.states, (std::vector<Word>{W("1"), W("a"), W("b"), W("ba"), W("b^2")}));
  auto image = [&](const std::vector<int>& delta) {
    std::vector<Word> out;
    for (int i : delta) out.push_back(t.states[static_cast<std::size_t>(i)]);
    return out;
  };
  EXPECT_EQ(image(t.delta_a), (std::vector<Word>{W("a"), W("1"), W("ba"), W("b"), W("b^2")}));
  EXPECT_EQ(image(t.delta_b), (std::vector<Word>{W("b"), W("1"), W("b^2"), W("ba"), W("a")}));
  EXPECT_TRUE(is_regular(running_example()));
}

TEST(ActionTable, SmallestCase) {
  const RightCongruence rc = RightCongruence::parse("a -> 1\nb -> 1\n");
  const ActionTable t = action_table(rc);
  EXPECT_EQ(t.delta_a, std::vector<int>{0});
  EXPECT_EQ(t.delta_b, std::vector<int>{0});
  EXPECT_TRUE(is_regular(rc));
  EXPECT_FALSE(is_regular(RightCongruence::parse("aa -> 1\nab -> 1\nb -> 1\n")));
}

TEST(Enumeration, Counts) {
  const std::vector<std::size_t> expected{1, 3, 13, 71, 461, 3447};
  for (int n = 1; n <= 6; ++n) {
    std::size_t count = 0;
    enumerate_regular(n, [&](const RightCongruence& rc) {
      ASSERT_TRUE(is_regular(rc));
      ++count;
    });
    EXPECT_EQ(count, expected[static_cast<std::size_t>(n - 1)]);
    EXPECT_EQ(hall_count(n), expected[static_cast<std::size_t>(n - 1)]);
  }
  EXPECT_EQ(hall_count(7), 29093);
}

TEST(Enumeration, AgreesWithTransitiveActions) {
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(all_regular(n).size(), transitive_pair_count(n)) << "n=" << n;
}

TEST(Enumeration, AgreesWithExhaustiveFilter) {
  for (int n = 1; n <= 4; ++n) {
    std::set<std::string> fast;
    for (const auto& rc : all_regular(n)) fast.insert(rc.to_text());
    std::set<std::string> slow;
    for (const auto& rc : all_regular_brute_force(n)) slow.insert(rc.to_text());
    EXPECT_EQ(fast, slow) << "n=" << n;
  }
}

TEST(Enumeration, RegularImagesFollowMuA) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& rc : all_regular(n)) {
      const TreeParts parts = tree_parts(rc.tree());
      for (const auto& c : parts.ca) ASSERT_EQ(rc.f(c), mu_a(c));
      for (const auto& c : parts.cb) ASSERT_TRUE(std::find(parts.pa.begin(), parts.pa.end(), rc.f(c)) != parts.pa.end());
    }
  }
}

TEST(Bijection, RunningExample) {
  EXPECT_EQ(to_indecomposable(running_example()), Permutation::parse("325461"));
  EXPECT_EQ(from_indecomposable(Permutation::parse("325461")).to_text(), kRunningExample);
  const auto ep = extended_prefix_set(running_example().tree());
  std::vector<std::string> rendered;
  for (const auto& x : ep) rendered.push_back(x.to_power_string());
  EXPECT_EQ(rendered, (std::vector<std::string>{"a", "1", "a^-1", "ba", "b", "b^2"}));
}

TEST(Bijection, SmallestCase) {
  const RightCongruence rc = RightCongruence::parse("a -> 1\nb -> 1\n");
  EXPECT_EQ(to_indecomposable(rc), Permutation::parse("21"));
  EXPECT_EQ(from_indecomposable(Permutation::parse("21")).to_text(), rc.to_text());
}

TEST(Bijection, Errors) {
  EXPECT_THROW(from_indecomposable(Permutation::parse("123")), NotIndecomposable);
  EXPECT_THROW(from_indecomposable(Permutation::parse("1")), NotIndecomposable);
  EXPECT_THROW(to_indecomposable(RightCongruence::parse("aa -> 1\nab -> 1\nb -> 1\n")), NotRegular);
}

TEST(Bijection, RoundTripsAndImage) {
  for (int n = 1; n <= 5; ++n) {
    std::set<Permutation> image;
    for (const auto& rc : all_regular(n)) {
      const Permutation theta = to_indecomposable(rc);
      ASSERT_TRUE(image.insert(theta).second);
      ASSERT_EQ(from_indecomposable(theta).to_text(), rc.to_text());
      const LRMaxima m = lr_maxima(theta);
      const TreeStats st = tree_stats(rc.tree());
      for (std::size_t h = 0; h < st.s.size(); ++h) ASSERT_EQ(m.values[h], st.s[h] + 1);
    }
    const auto indec = all_indecomposables(n + 1);
    EXPECT_EQ(image, std::set<Permutation>(indec.begin(), indec.end()));
    for (const auto& theta : indec) ASSERT_EQ(to_indecomposable(from_indecomposable(theta)), theta);
  }
}

TEST(GroupWords, Reduction) {
  EXPECT_EQ(free_reduce("aAb"), "b");
  EXPECT_EQ(free_reduce("abBA"), "");
  EXPECT_EQ(free_reduce("baBAab"), "ba");
  EXPECT_EQ(group_inverse("abA"), "aBA");
  EXPECT_EQ(free_reduce("ab" + group_inverse("ab")), "");
}

TEST(Subgroups, IndexOne) {
  const auto all = all_regular(1);
  ASSERT_EQ(all.size(), 1U);
  auto gens = subgroup_generators(all[0]);
  std::sort(gens.begin(), gens.end());
  EXPECT_EQ(gens, (std::vector<GroupWord>{"a", "b"}));
}

TEST(Subgroups, IndexTwoMatchTheListedSubgroups) {
  // Each listed generating set lies in exactly one index-2 subgroup; with
  // equal index, containment is equality.
  const std::vector<std::vector<GroupWord>> listed{{"aa", "ab", "ba"}, {"a", "bab", "bb"}, {"aa", "aba", "b"}};
  const auto all = all_regular(2);
  ASSERT_EQ(all.size(), 3U);
  std::set<std::size_t> matched;
  for (const auto& gens : listed) {
    std::vector<std::size_t> homes;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (std::all_of(gens.begin(), gens.end(), [&](const GroupWord& w) { return subgroup_contains(all[i], w); })) {
        homes.push_back(i);
      }
    }
    ASSERT_EQ(homes.size(), 1U);
    matched.insert(homes[0]);
  }
  EXPECT_EQ(matched.size(), 3U);
}

TEST(Subgroups, GeneratorsBelongAndHaveRankNPlusOne) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& rc : all_regular(n)) {
      const auto gens = subgroup_generators(rc);
      ASSERT_EQ(gens.size(), static_cast<std::size_t>(n + 1));
      for (const auto& g : gens) {
        ASSERT_EQ(free_reduce(g), g);
        ASSERT_TRUE(subgroup_contains(rc, g));
        ASSERT_TRUE(subgroup_contains(rc, group_inverse(g)));
      }
    }
  }
  EXPECT_FALSE(subgroup_contains(running_example(), "a"));
  EXPECT_TRUE(subgroup_contains(running_example(), ""));
}

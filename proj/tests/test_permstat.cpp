#include <gtest/gtest.h>

#include <set>

#include "census/errors.hpp"
#include "census/permstat.hpp"

using namespace census;

namespace {

Permutation P(const std::string& s) { return Permutation::parse(s); }

// Oracles written from the definitions, independent of the library code.
std::int64_t inv_by_pairs(const Permutation& s) {
  std::int64_t count = 0;
  for (int i = 1; i <= s.size(); ++i)
    for (int j = i + 1; j <= s.size(); ++j) count += s(i) > s(j) ? 1 : 0;
  return count;
}

// The 1 of row i sits in column s(i); its hook is the zero cells to its left
// in row i and below it in column s(i).
std::int64_t hook_union_by_cells(const Permutation& s) {
  const int n = s.size();
  std::set<std::pair<int, int>> cells;
  for (int i = 1; i <= n; ++i) {
    for (int col = 1; col < s(i); ++col) cells.insert({i, col});
    for (int row = i + 1; row <= n; ++row) cells.insert({row, s(i)});
  }
  for (int i = 1; i <= n; ++i) cells.erase({i, s(i)});
  return static_cast<std::int64_t>(cells.size());
}

bool indecomposable_by_prefix_sets(const Permutation& s) {
  for (int i = 1; i < s.size(); ++i) {
    std::set<int> prefix;
    for (int j = 1; j <= i; ++j) prefix.insert(s(j));
    if (*prefix.rbegin() == i) return false;
  }
  return s.size() >= 1;
}

}  // namespace

TEST(Permutation, ParseAndValidate) {
  EXPECT_EQ(P("325461").image(), (std::vector<int>{3, 2, 5, 4, 6, 1}));
  EXPECT_EQ(P("3,2,1").image(), (std::vector<int>{3, 2, 1}));
  EXPECT_EQ(P("10,1,2,3,4,5,6,7,8,9").to_string(), "10,1,2,3,4,5,6,7,8,9");
  EXPECT_THROW(P("1224"), InvalidPermutation);
  EXPECT_THROW(P("0"), InvalidPermutation);
  EXPECT_THROW(Permutation({2, 3}), InvalidPermutation);
  EXPECT_EQ(P("231").inverse(), P("312"));
}

TEST(Statistics, Inversions) {
  EXPECT_EQ(inversions(Permutation::identity(5)), 0);
  EXPECT_EQ(inversions(P("321")), 3);
  // Direct pair count: 32, 31, 21, 54, 51, 41, 61.
  EXPECT_EQ(inversions(P("325461")), 7);
  EXPECT_EQ(inv_by_pairs(P("325461")), 7);
}

TEST(Statistics, Versions) {
  EXPECT_EQ(versions(Permutation::identity(4)), 6);
  EXPECT_EQ(versions(P("321")), 0);
  enumerate_permutations(6, [](const Permutation& s) { ASSERT_EQ(versions(s), 15 - inversions(s)); });
}

TEST(Statistics, HookUnionExamples) {
  EXPECT_EQ(hook_union_size(P("231")), 5);
  EXPECT_EQ(hook_union_size(P("325461")), 22);
  EXPECT_EQ(hook_union_size(Permutation::identity(1)), 0);
  EXPECT_EQ(p_via_inversions(Permutation::identity(5)), 10);
  const std::vector<std::string> admissible{"123", "132", "213", "231"};
  const std::vector<std::int64_t> values{3, 4, 4, 5};
  for (std::size_t i = 0; i < admissible.size(); ++i) EXPECT_EQ(p_via_inversions(P(admissible[i])), values[i]);
}

TEST(Statistics, AgreeWithOraclesOnSmallGroups) {
  for (int n = 0; n <= 7; ++n) {
    enumerate_permutations(n, [n](const Permutation& s) {
      ASSERT_EQ(inversions(s), inv_by_pairs(s));
      const std::int64_t hooks = hook_union_by_cells(s);
      ASSERT_EQ(hook_union_size(s), hooks) << s.to_string();
      ASSERT_EQ(hooks, 2 * inversions(s) + versions(s));
      ASSERT_EQ(hooks, inversions(s) + binomial2(n));
      ASSERT_EQ(inversions(s.inverse()), inversions(s));
      ASSERT_EQ(hook_union_size(s.inverse()), hooks);
    });
  }
}

TEST(Indecomposable, Examples) {
  EXPECT_TRUE(is_indecomposable(Permutation::identity(1)));
  EXPECT_FALSE(is_indecomposable(Permutation::identity(2)));
  std::set<std::string> s3;
  for (const auto& s : all_indecomposables(3)) s3.insert(s.to_string());
  EXPECT_EQ(s3, (std::set<std::string>{"231", "312", "321"}));
  EXPECT_FALSE(is_indecomposable(P("213")));
  EXPECT_TRUE(is_indecomposable_lr(P("325461")));
  EXPECT_FALSE(is_indecomposable_lr(Permutation::identity(3)));
}

TEST(Indecomposable, CriteriaAgreeWithPrefixSets) {
  for (int n = 1; n <= 7; ++n) {
    enumerate_permutations(n, [](const Permutation& s) {
      const bool expected = indecomposable_by_prefix_sets(s);
      ASSERT_EQ(is_indecomposable(s), expected) << s.to_string();
      ASSERT_EQ(is_indecomposable_lr(s), expected) << s.to_string();
    });
  }
}

TEST(Indecomposable, Counts) {
  const std::vector<std::size_t> expected{1, 1, 3, 13, 71, 461, 3447};
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(all_indecomposables(n).size(), expected[static_cast<std::size_t>(n - 1)]);
  EXPECT_EQ(all_permutations(4).size(), 24U);
}

TEST(LRMaxima, Examples) {
  const LRMaxima m = lr_maxima(P("325461"));
  EXPECT_EQ(m.positions, (std::vector<int>{1, 3, 5}));
  EXPECT_EQ(m.values, (std::vector<int>{3, 5, 6}));
  const LRMaxima id = lr_maxima(Permutation::identity(4));
  EXPECT_EQ(id.positions, (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(id.values, (std::vector<int>{1, 2, 3, 4}));
  const LRMaxima top = lr_maxima(P("5,1,2,3,4"));
  EXPECT_EQ(top.positions, std::vector<int>{1});
  EXPECT_EQ(top.values, std::vector<int>{5});
}

TEST(Standardize, Examples) {
  const std::vector<int> w{3, 6, 4, 9};
  EXPECT_EQ(standardize(w), P("1324"));
  const std::vector<int> v{2, 4, 1};
  EXPECT_EQ(standardize(v), P("231"));
  const std::vector<int> perm{2, 3, 1};
  EXPECT_EQ(standardize(perm), P("231"));
  const std::vector<int> dup{1, 1};
  EXPECT_THROW(standardize(dup), DuplicateLetters);
}

TEST(StripLRMaxima, Examples) {
  EXPECT_EQ(strip_lr_maxima(P("325461")), P("231"));
  EXPECT_EQ(strip_lr_maxima(Permutation::identity(4)).size(), 0);
  EXPECT_EQ(strip_lr_maxima(P("21")), Permutation::identity(1));
}

TEST(PTheta, Examples) {
  const auto sides = ptheta_sides(P("325461"));
  EXPECT_EQ(sides.lhs, 22);
  EXPECT_EQ(sides.rhs, 5 + 3 * 6 - 6 + (3 - 1) + (5 - 3) + (6 - 5));
  EXPECT_TRUE(ptheta_identity_check(Permutation::identity(3)));
  for (int n = 1; n <= 6; ++n) {
    enumerate_permutations(n, [](const Permutation& s) { ASSERT_TRUE(ptheta_identity_check(s)) << s.to_string(); });
  }
}

TEST(ShiftedConcat, Examples) {
  EXPECT_EQ(shifted_concat(P("21"), P("1")), P("213"));
  EXPECT_EQ(shifted_concat(P("312"), Permutation::identity(0)), P("312"));
  EXPECT_EQ(inversions(shifted_concat(P("231"), P("21"))), 3);
  EXPECT_EQ(shifted_concat(P("231"), P("21")), P("23154"));
}

TEST(ShiftedConcat, AssociativeAndAdditive) {
  const auto s2 = all_permutations(2);
  const auto s3 = all_permutations(3);
  for (const auto& x : s2)
    for (const auto& y : s3)
      for (const auto& z : s2) {
        ASSERT_EQ(shifted_concat(shifted_concat(x, y), z), shifted_concat(x, shifted_concat(y, z)));
        ASSERT_EQ(inversions(shifted_concat(x, y)), inversions(x) + inversions(y));
      }
}

TEST(ShiftedConcat, FactorizationRebuilds) {
  for (int n = 0; n <= 6; ++n) {
    enumerate_permutations(n, [](const Permutation& s) {
      Permutation rebuilt = Permutation::identity(0);
      for (const auto& f : indecomposable_factors(s)) {
        ASSERT_TRUE(is_indecomposable(f));
        rebuilt = shifted_concat(rebuilt, f);
      }
      ASSERT_EQ(rebuilt, s);
    });
  }
}

TEST(Polynomials, IndecInversionPolynomials) {
  const LaurentPoly q = LaurentPoly::q();
  EXPECT_EQ(indec_inv_polynomial(1), LaurentPoly(1));
  EXPECT_EQ(indec_inv_polynomial(2), q);
  EXPECT_EQ(indec_inv_polynomial(3), q.pow(3) + 2 * q.pow(2));
  EXPECT_EQ(indec_inv_polynomial(4), q.pow(6) + 3 * q.pow(5) + 5 * q.pow(4) + 4 * q.pow(3));
  EXPECT_EQ(indec_inv_polynomial(5).eval(1), 71);
  EXPECT_EQ(indec_p_polynomial(2), q.pow(2));
  for (int m = 1; m <= 7; ++m) {
    EXPECT_EQ(indec_p_polynomial(m), indec_inv_polynomial(m).shifted(binomial2(m)));
    EXPECT_EQ(indec_p_polynomial(m).eval(1), indec_inv_polynomial(m).eval(1));
  }
}

TEST(Polynomials, QFactorialIdentity) {
  for (int n = 0; n <= 7; ++n) EXPECT_EQ(inv_polynomial(n), q_factorial(static_cast<unsigned>(n)));
}

TEST(Polynomials, SeriesIdentity) {
  EXPECT_TRUE(series_identity_check(0));
  EXPECT_TRUE(series_identity_check(4));
  EXPECT_TRUE(series_identity_check(8));
}

TEST(Polynomials, SeriesInversionGivesQFactorials) {
  TruncatedSeries s(4);
  s.set(0, 1);
  for (unsigned k = 1; k <= 4; ++k) s.set(k, -indec_inv_polynomial(static_cast<int>(k)));
  const TruncatedSeries u = series_invert(s);
  for (unsigned k = 0; k <= 4; ++k) EXPECT_EQ(u[k], q_factorial(k));
}

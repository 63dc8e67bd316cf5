#include <gtest/gtest.h>

#include "census/errors.hpp"
#include "census/haglund.hpp"
#include "census/linfq.hpp"
#include "census/permstat.hpp"

using namespace census;

namespace {

const LaurentPoly q = LaurentPoly::q();

Partition L(const std::string& s) { return Partition::parse(s); }

}  // namespace

TEST(Partition, Validation) {
  EXPECT_EQ(L("2,3,3").parts(), (std::vector<int>{2, 3, 3}));
  EXPECT_EQ(L("").size(), 0);
  EXPECT_EQ(L("2,3,3").cells(), 8);
  EXPECT_THROW(L("3,2,3"), InvalidPartition);
  EXPECT_THROW(L("1,4,4"), InvalidPartition);
  EXPECT_THROW(L("-1,1"), InvalidPartition);
  // C(2n, n) weakly increasing sequences with parts in [0, n]
  const std::vector<std::size_t> binom{1, 2, 6, 20, 70, 252, 924};
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(partitions_with_parts(n).size(), binom[static_cast<std::size_t>(n)]);
}

TEST(SupportSet, Examples) {
  const auto cells = support_set(L("2,3,3"));
  EXPECT_EQ(cells.size(), 8U);
  EXPECT_EQ(cells.front(), (std::pair<int, int>{1, 1}));
  EXPECT_EQ(cells.back(), (std::pair<int, int>{3, 3}));
  EXPECT_TRUE(support_set(L("0,0,0")).empty());
}

TEST(Product, Examples) {
  EXPECT_EQ(H_product(L("2,3,3")), q.pow(3) * (q - 1).pow(3) * (q + 1).pow(2));
  EXPECT_EQ(H_product(L("2,3,3")).eval_integer(2), 72);
  EXPECT_EQ(H_product(L("1")), q - 1);
  EXPECT_TRUE(H_product(L("1,1")).is_zero());
  EXPECT_EQ(H_product(L("")), LaurentPoly(1));
}

TEST(HookSum, Examples) {
  std::vector<std::string> admissible;
  std::vector<std::int64_t> p_values;
  for (const auto& image : admissible_permutations(L("2,3,3"))) {
    const Permutation s(image);
    admissible.push_back(s.to_string());
    p_values.push_back(hook_union_size(s));
  }
  EXPECT_EQ(admissible, (std::vector<std::string>{"123", "132", "213", "231"}));
  EXPECT_EQ(p_values, (std::vector<std::int64_t>{3, 4, 4, 5}));
  EXPECT_EQ(H_hooksum(L("2,3,3")), (q - 1).pow(3) * (q.pow(3) + 2 * q.pow(4) + q.pow(5)));
  EXPECT_TRUE(H_hooksum(L("1,1")).is_zero());
}

TEST(HookSum, FullSquare) {
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> parts(static_cast<std::size_t>(n), n);
    const LaurentPoly expected =
        q_minus_one_pow(static_cast<unsigned>(n)) * q_factorial(static_cast<unsigned>(n)).shifted(binomial2(n));
    EXPECT_EQ(H_hooksum(Partition(parts)), expected);
  }
}

TEST(Equivalence, ProductHookSumAndBruteForce) {
  EXPECT_TRUE(H_equivalence_check(3, {2, 3}).passed);
  EXPECT_TRUE(H_equivalence_check(6, {2, 3, 5}, 3, 9).passed);
  for (int n = 1; n <= 4; ++n) {
    for (const auto& lambda : partitions_with_parts(n)) {
      bool forced_zero = false;
      for (int i = 1; i <= n; ++i) forced_zero = forced_zero || lambda[i] < i;
      if (!forced_zero) continue;
      EXPECT_TRUE(H_product(lambda).is_zero());
      EXPECT_TRUE(H_hooksum(lambda).is_zero());
      if (lambda.cells() <= 9) EXPECT_EQ(count_invertible_support(lambda, 2), 0);
    }
  }
}

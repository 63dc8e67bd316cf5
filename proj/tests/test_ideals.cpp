#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "census/errors.hpp"
#include "census/haglund.hpp"
#include "census/ideals.hpp"

using namespace census;

namespace {

const LaurentPoly q = LaurentPoly::q();

Word W(const std::string& s) { return Word::parse(s); }

CodeTree running_tree() {
  return CodeTree({W("a^2"), W("ab"), W("ba^2"), W("bab"), W("b^2a"), W("b^3")});
}

// Oracle from module theory: a right ideal of codimension n is a cyclic
// n-dimensional module with a marked generator. Count triples (A, B, v) with
// A, B invertible and v cyclic under the monoid they generate, then divide
// by |GL_n(F_p)|, which acts freely on such triples.
using Mat = std::vector<std::vector<int>>;

std::vector<Mat> all_matrices(int n, int p) {
  std::vector<Mat> out;
  const int cells = n * n;
  std::vector<int> digit(static_cast<std::size_t>(cells), 0);
  while (true) {
    Mat m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < cells; ++i) m[static_cast<std::size_t>(i / n)][static_cast<std::size_t>(i % n)] = digit[static_cast<std::size_t>(i)];
    out.push_back(std::move(m));
    int i = 0;
    while (i < cells && ++digit[static_cast<std::size_t>(i)] == p) digit[static_cast<std::size_t>(i++)] = 0;
    if (i == cells) break;
  }
  return out;
}

int row_rank(std::vector<std::vector<int>> rows, int p) {
  int rank = 0;
  const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0) pivot = r;
    if (pivot < 0) continue;
    std::swap(rows[static_cast<std::size_t>(pivot)], rows[static_cast<std::size_t>(rank)]);
    auto& pr = rows[static_cast<std::size_t>(rank)];
    int inv = 1;
    while (pr[static_cast<std::size_t>(c)] * inv % p != 1) ++inv;
    for (auto& x : pr) x = x * inv % p;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank) continue;
      auto& row = rows[static_cast<std::size_t>(r)];
      const int f = row[static_cast<std::size_t>(c)];
      for (std::size_t k = 0; k < row.size(); ++k) row[k] = ((row[k] - f * pr[k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

std::vector<int> times(const std::vector<int>& v, const Mat& m, int p) {
  std::vector<int> out(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[j] = (out[j] + v[i] * m[i][j]) % p;
  return out;
}

mpz_class cyclic_module_count(int n, int p) {
  std::vector<Mat> gl;
  for (auto& m : all_matrices(n, p))
    if (row_rank(m, p) == n) gl.push_back(std::move(m));
  std::vector<std::vector<int>> vectors;
  {
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    while (true) {
      vectors.push_back(v);
      int i = 0;
      while (i < n && ++v[static_cast<std::size_t>(i)] == p) v[static_cast<std::size_t>(i++)] = 0;
      if (i == n) break;
    }
  }
  std::uint64_t cyclic = 0;
  for (const auto& a : gl) {
    for (const auto& b : gl) {
      for (const auto& v : vectors) {
        // grow the span of the orbit of v until it is closed
        std::set<std::vector<int>> orbit{v};
        std::vector<std::vector<int>> frontier{v};
        while (!frontier.empty()) {
          std::vector<std::vector<int>> next;
          for (const auto& w : frontier)
            for (const Mat* m : {&a, &b})
              if (auto x = times(w, *m, p); orbit.insert(x).second) next.push_back(x);
          frontier = std::move(next);
        }
        std::vector<std::vector<int>> rows(orbit.begin(), orbit.end());
        if (row_rank(rows, p) == n) ++cyclic;
      }
    }
  }
  return mpz_class(static_cast<unsigned long>(cyclic)) / static_cast<unsigned long>(gl.size());
}

}  // namespace

TEST(Formula, Examples) {
  EXPECT_EQ(A_formula(1), (q - 1).pow(2));
  EXPECT_EQ(A_formula(2), (q - 1).pow(3) * q.pow(2) * (q + 2));
  EXPECT_EQ(A_formula(2).eval_integer(2), 16);
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(A_formula(n).eval(1), 0);
    EXPECT_EQ(A_formula_p(n), A_formula(n));
  }
  EXPECT_EQ(A_formula_p(1), (q - 1).pow(2));
  EXPECT_THROW(A_formula(0), InvalidCodimension);
  EXPECT_THROW(A_formula_p(0), InvalidCodimension);
  EXPECT_THROW(A_structural(0), InvalidCodimension);
}

TEST(Formula, ShapeOfTheCount) {
  for (int n = 1; n <= 6; ++n) {
    const LaurentPoly a = A_formula(n);
    EXPECT_TRUE(a.is_polynomial());
    EXPECT_EQ(a.leading_coefficient(), 1);
    EXPECT_EQ(a.degree(), (n + 1) * (n - 2) / 2 + (n + 1) + binomial2(n + 1));
  }
}

TEST(Structural, TwoTreesAtCodimensionTwo) {
  const IdealCountReport r = A_structural(2);
  ASSERT_EQ(r.trees.size(), 2U);
  EXPECT_TRUE(r.breakdown_consistent());
  EXPECT_EQ(std::get<LaurentPoly>(r.total), (q - 1).pow(3) * q.pow(2) * (q + 2));
}

TEST(Structural, RunningTreeContribution) {
  const IdealCountReport r = A_structural(5);
  const TreeSignature sig = signature(running_tree());
  const auto it = std::find_if(r.trees.begin(), r.trees.end(), [&](const auto& t) { return t.signature == sig; });
  ASSERT_NE(it, r.trees.end());
  EXPECT_EQ(it->k, 3);
  EXPECT_EQ(it->N, 8);
  EXPECT_EQ(it->M, 3);
  EXPECT_EQ(std::get<LaurentPoly>(it->contribution),
            (q - 1).pow(3) * q.pow(11) * q.pow(3) * (q - 1).pow(3) * (q + 1).pow(2));
}

TEST(Structural, AgreesWithFormula) {
  for (int n = 1; n <= 6; ++n) {
    const IdealCountReport r = A_structural(n);
    EXPECT_EQ(std::get<LaurentPoly>(r.total), A_formula(n));
    EXPECT_TRUE(r.breakdown_consistent());
  }
}

TEST(Assignment, SlotsAndValues) {
  CoefficientAssignment ca(running_tree(), 3);
  // prefixes below each leaf: a^2, ab: {1, a}; ba^2, bab: {1, a, b, ba}; b^2a, b^3: all five
  EXPECT_EQ(ca.slots().size(), 2U + 2 + 4 + 4 + 5 + 5);
  ca.set(W("bab"), W("a"), 5);
  EXPECT_EQ(ca.alpha(W("bab"), W("a")).value(), 2U);
  EXPECT_THROW(ca.alpha(W("ab"), W("b")), std::out_of_range);
  EXPECT_THROW(ca.alpha(W("b"), W("1")), std::out_of_range);
  EXPECT_THROW(CoefficientAssignment(running_tree(), 6), NotPrime);
}

TEST(Assignment, MuMatricesOfRunningTree) {
  const CodeTree t = running_tree();
  CoefficientAssignment ca(t, 5);
  auto [mu_a, mu_b] = build_mu_matrices(ca);
  const auto at = [&](const FqMatrix& m, const char* row, const char* col) {
    return m.at(t.internal_index(W(row)), t.internal_index(W(col)));
  };
  EXPECT_EQ(at(mu_a, "1", "a"), 1U);
  EXPECT_EQ(at(mu_a, "b", "ba"), 1U);
  EXPECT_EQ(at(mu_b, "1", "b"), 1U);
  EXPECT_EQ(at(mu_b, "b", "b^2"), 1U);
  int ones = 0;
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c) ones += static_cast<int>(mu_a.at(r, c) + mu_b.at(r, c));
  EXPECT_EQ(ones, 4);
  ca.set(W("a^2"), W("1"), 3);
  ca.set(W("b^3"), W("a"), 2);
  std::tie(mu_a, mu_b) = build_mu_matrices(ca);
  EXPECT_EQ(at(mu_a, "a", "1"), 3U);
  EXPECT_EQ(at(mu_b, "b^2", "a"), 2U);
}

TEST(BruteForce, SmallValues) {
  const std::vector<std::tuple<int, std::uint32_t, long>> cases{{1, 2, 1}, {1, 3, 4}, {2, 2, 16}, {2, 3, 360}, {3, 2, 1088}};
  for (const auto& [n, p, value] : cases) {
    const IdealCountReport r = brute_force_A(n, p);
    EXPECT_EQ(std::get<mpz_class>(r.total), value) << n << " " << p;
    EXPECT_EQ(A_formula(n).eval_integer(p), value);
    EXPECT_TRUE(r.breakdown_consistent());
    EXPECT_EQ(r.q, p);
  }
}

TEST(BruteForce, AgreesWithCyclicModuleOracle) {
  EXPECT_EQ(cyclic_module_count(1, 2), 1);
  EXPECT_EQ(cyclic_module_count(1, 3), 4);
  EXPECT_EQ(cyclic_module_count(2, 2), 16);
  EXPECT_EQ(cyclic_module_count(2, 3), 360);
  EXPECT_EQ(cyclic_module_count(3, 2), 1088);
}

TEST(BruteForce, Budget) {
  EXPECT_THROW(brute_force_A(3, 2, 10), TooLarge);
  EXPECT_THROW(brute_force_tree(running_tree(), 2, 1000), TooLarge);
}

TEST(PairCounts, RunningTreeMuALeg) {
  EXPECT_EQ(mu_a_count(running_tree(), 2), 256);
  EXPECT_EQ(mu_a_count(running_tree(), 3), 8 * 6561);
  EXPECT_EQ(mu_b_count(running_tree(), 2), 8 * 72);
}

TEST(PairCounts, ProductLaw) {
  for (int n = 1; n <= 3; ++n) {
    EXPECT_TRUE(per_tree_pair_count_check(n, 2).passed);
    EXPECT_TRUE(per_tree_pair_count_check(n, 3).passed);
  }
  for (const auto& t : enumerate_trees(3)) {
    const PairCounts pc = pair_counts(t, 2);
    EXPECT_EQ(pc.joint, pc.a_count * pc.b_count);
    EXPECT_EQ(pc.a_count, pc.expected_a);
    EXPECT_EQ(pc.b_count, pc.expected_b);
  }
}

TEST(Generators, Examples) {
  const CodeTree ab({W("a"), W("b")});
  CoefficientAssignment zero(ab, 2);
  const auto bare = ideal_generators(zero);
  ASSERT_EQ(bare.size(), 2U);
  EXPECT_EQ(bare[0].to_string(), "a");
  EXPECT_EQ(bare[1].to_string(), "b");
  CoefficientAssignment one(ab, 2);
  one.set(W("a"), W("1"), 1);
  one.set(W("b"), W("1"), 1);
  const auto gens = ideal_generators(one);
  EXPECT_EQ(gens[0].to_string(), "a - 1");
  EXPECT_EQ(gens[1].to_string(), "b - 1");
  CoefficientAssignment fig(running_tree(), 5);
  fig.set(W("b^3"), W("ba"), 3);
  fig.set(W("b^3"), W("1"), 2);
  const auto g = ideal_generators(fig);
  EXPECT_EQ(g.size(), 6U);
  EXPECT_EQ(g.back().to_string(), "b^3 - 2*1 - 3*ba");
}

TEST(Cells, Examples) {
  const CellDecomposition two = cell_decomposition(2);
  ASSERT_EQ(two.cells.size(), 3U);
  std::multiset<std::int64_t> dims;
  for (const auto& c : two.cells) dims.insert(c.affine_dim);
  EXPECT_EQ(dims, (std::multiset<std::int64_t>{2, 2, 3}));
  EXPECT_EQ(two.polynomial(), (q - 1).pow(3) * (2 * q.pow(2) + q.pow(3)));
  const CellDecomposition one = cell_decomposition(1);
  ASSERT_EQ(one.cells.size(), 1U);
  EXPECT_EQ(one.cells[0].affine_dim, 0);
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(cell_decomposition(n).polynomial(), A_formula(n));
}

TEST(Methods, Names) {
  for (auto m : {CountMethod::Formula, CountMethod::Structural, CountMethod::BruteForce})
    EXPECT_EQ(parse_count_method(to_string(m)), m);
  EXPECT_THROW(parse_count_method("guess"), std::invalid_argument);
}

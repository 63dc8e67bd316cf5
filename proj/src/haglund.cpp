#include "census/haglund.hpp"

#include <functional>

#include "census/linfq.hpp"
#include "census/permstat.hpp"

namespace census {

std::vector<std::pair<int, int>> support_set(const Partition& lambda) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= lambda.size(); ++i)
    for (int j = 1; j <= lambda[i]; ++j) cells.emplace_back(i, j);
  return cells;
}

LaurentPoly H_product(const Partition& lambda) {
  const int n = lambda.size();
  for (int i = 1; i <= n; ++i)
    if (lambda[i] < i) return {};
  LaurentPoly result = LaurentPoly::monomial(binomial2(n));
  for (int i = 1; i <= n; ++i) result *= LaurentPoly::monomial(lambda[i] + 1 - i) - 1;
  return result;
}

std::vector<std::vector<int>> admissible_permutations(const Partition& lambda) {
  const int n = lambda.size();
  std::vector<std::vector<int>> out;
  std::vector<int> image(static_cast<std::size_t>(n));
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::function<void(int)> place = [&](int row) {
    if (row > n) {
      out.push_back(image);
      return;
    }
    for (int col = 1; col <= lambda[row]; ++col) {
      if (used[static_cast<std::size_t>(col)]) continue;
      used[static_cast<std::size_t>(col)] = true;
      image[static_cast<std::size_t>(row - 1)] = col;
      place(row + 1);
      used[static_cast<std::size_t>(col)] = false;
    }
  };
  place(1);
  return out;
}

LaurentPoly H_hooksum(const Partition& lambda) {
  std::vector<LaurentPoly::Term> terms;
  for (auto& image : admissible_permutations(lambda)) {
    terms.emplace_back(hook_union_size(Permutation(std::move(image))), 1);
  }
  return q_minus_one_pow(static_cast<unsigned>(lambda.size())) * LaurentPoly::from_terms(std::move(terms));
}

CheckOutcome H_equivalence_check(int max_parts, const std::vector<std::uint32_t>& primes, int brute_max_parts,
                                 int max_cells) {
  for (int n = 0; n <= max_parts; ++n) {
    for (const auto& lambda : partitions_with_parts(n)) {
      const LaurentPoly product = H_product(lambda);
      const LaurentPoly hooks = H_hooksum(lambda);
      if (!(product == hooks)) {
        return CheckOutcome::fail("lambda=(" + lambda.to_string() + "): product " + product.to_string() +
                                  " != hook sum " + hooks.to_string());
      }
      if (n > brute_max_parts || lambda.cells() > max_cells) continue;
      for (std::uint32_t p : primes) {
        const mpz_class brute = count_invertible_support(lambda, p);
        const mpz_class value = product.eval_integer(p);
        if (brute != value) {
          return CheckOutcome::fail("lambda=(" + lambda.to_string() + "), p=" + std::to_string(p) + ": formula " +
                                    value.get_str() + " != brute force " + brute.get_str());
        }
      }
    }
  }
  return CheckOutcome::pass();
}

}  // namespace census

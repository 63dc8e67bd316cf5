#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "census/check.hpp"
#include "census/partition.hpp"
#include "census/qpoly.hpp"

namespace census {

/// E_lambda: cells (i, j), 1-based, with j <= lambda_i.
std::vector<std::pair<int, int>> support_set(const Partition& lambda);

/// q^C(n,2) prod (q^(lambda_i + 1 - i) - 1), or 0 if some lambda_i < i.
LaurentPoly H_product(const Partition& lambda);

/// (q-1)^n sum q^p(sigma) over permutations with sigma(i) <= lambda_i.
LaurentPoly H_hooksum(const Partition& lambda);

/// Permutations whose matrix lies inside E_lambda, by column backtracking.
std::vector<std::vector<int>> admissible_permutations(const Partition& lambda);

/// H_product == H_hooksum for every partition with at most max_parts parts,
/// and both evaluate to the brute-force invertible count at every prime for
/// partitions with at most brute_max_parts parts and at most max_cells cells.
CheckOutcome H_equivalence_check(int max_parts, const std::vector<std::uint32_t>& primes,
                                 int brute_max_parts = 3, int max_cells = 9);

}  // namespace census

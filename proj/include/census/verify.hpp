#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "census/check.hpp"
#include "census/linfq.hpp"

namespace census {

// Exhaustive cross-checks grouped into suites. Every check returns the first
// counterexample it meets; bounds are explicit arguments.

// qpoly (reported with permstat)
/// Distributivity and the evaluation morphism on seeded random polynomials.
CheckOutcome check_polynomial_axioms(std::uint64_t seed, int samples);

// permstat
CheckOutcome check_hook_identities(int max_n);
CheckOutcome check_indecomposable_criteria(int max_n);
CheckOutcome check_ptheta(int max_n);
/// Each permutation is produced exactly once as a shifted concatenation of
/// indecomposables, and inv is additive over the factors.
CheckOutcome check_unique_factorization(int max_n);
CheckOutcome check_q_factorial(int max_n);
CheckOutcome check_series(unsigned order);

// words
/// Catalan counts, the M identity, phi, signature round trip and the mu bijections
/// on every tree with at most max_n internal nodes.
CheckOutcome check_trees(int max_n);
CheckOutcome check_order_lemmas(int max_len);
/// Antisymmetry and transitivity of the twisted order on all triples.
CheckOutcome check_twisted_total_order(std::size_t max_len);

// congruence
CheckOutcome check_regular_counts(int max_n);
CheckOutcome check_enumeration_oracle(int max_n);
/// Round trip in both directions, image equal to Indec_(n+1), and the
/// LR-maxima relations between a congruence and its permutation.
CheckOutcome check_bijection(int max_n);
CheckOutcome check_subgroups(int max_n);

// haglund
CheckOutcome check_haglund(int max_parts, const std::vector<std::uint32_t>& primes, int brute_max_parts);
CheckOutcome check_haglund_recursion(int max_parts);

// ideals
CheckOutcome check_three_routes(int max_n);
CheckOutcome check_formula_shape(int max_n, const std::vector<std::uint32_t>& primes);
/// Pairs (n, p) whose joint enumeration stays within work_cap assignments.
std::vector<std::pair<int, std::uint32_t>> affordable_pairs(int max_n, const std::vector<std::uint32_t>& primes,
                                                            std::uint64_t work_cap, bool joint);
CheckOutcome check_brute_force(const std::vector<std::pair<int, std::uint32_t>>& pairs, std::uint64_t budget);
CheckOutcome check_mu_a_leg(const std::vector<std::pair<int, std::uint32_t>>& pairs, std::uint64_t budget);
CheckOutcome check_pair_counts(const std::vector<std::pair<int, std::uint32_t>>& pairs, std::uint64_t budget);
CheckOutcome check_cells(int max_n);

struct VerifyOptions {
  std::string suite = "all";
  int max_n = 5;
  std::vector<std::uint32_t> primes{2, 3};
  std::uint64_t budget = kDefaultBudget;
  /// Total assignments a brute-force check may enumerate for one (n, p).
  std::uint64_t work_cap = std::uint64_t{1} << 22;
  std::uint64_t seed = 0;
};

struct CheckResult {
  std::string suite;
  std::string name;
  CheckOutcome outcome;
  double seconds = 0;
};

const std::vector<std::string>& verify_suites();

/// Runs the selected suite(s), in parallel, returning results in a fixed
/// order. Throws std::invalid_argument on an unknown suite or max_n < 1.
std::vector<CheckResult> run_verify(const VerifyOptions& options);

}  // namespace census

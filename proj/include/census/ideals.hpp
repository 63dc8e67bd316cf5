#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "census/check.hpp"
#include "census/linfq.hpp"
#include "census/permstat.hpp"
#include "census/qpoly.hpp"
#include "census/words.hpp"

namespace census {

// Counting right ideals of codimension n in F_q<a, b, a^-1, b^-1>.
//
// Three routes are provided and must agree: the closed formula over
// indecomposable permutations, the structural sum over code trees, and a
// brute-force enumeration of coefficient families at a fixed prime q.

/// (q-1)^(n+1) q^((n+1)(n-2)/2) sum over Indec_(n+1) of q^inv.
/// Throws InvalidCodimension for n < 1.
LaurentPoly A_formula(int n);
/// (q-1)^(n+1) sum over Indec_(n+1) of q^(p - n - 1).
LaurentPoly A_formula_p(int n);

enum class CountMethod { Formula, Structural, BruteForce };
std::string to_string(CountMethod m);
/// Throws std::invalid_argument on an unknown name.
CountMethod parse_count_method(const std::string& name);

/// A polynomial in q, or an integer when q is fixed.
using CountValue = std::variant<LaurentPoly, mpz_class>;
std::string to_string(const CountValue& v);

struct TreeContribution {
  TreeSignature signature;
  int k = 0;
  std::int64_t N = 0;
  std::int64_t M = 0;
  Partition lambda;
  CountValue contribution;
  friend bool operator==(const TreeContribution&, const TreeContribution&) = default;
};

struct IdealCountReport {
  int n = 0;
  CountMethod method = CountMethod::Formula;
  std::optional<std::uint32_t> q;
  CountValue total;
  std::vector<TreeContribution> trees;  // empty for the closed formula

  /// The per-tree contributions add up to the total (vacuous when empty).
  bool breakdown_consistent() const;
  friend bool operator==(const IdealCountReport&, const IdealCountReport&) = default;
};

IdealCountReport formula_report(int n);
/// sum over trees of (q-1)^k q^(N+M) H_lambda(q).
IdealCountReport A_structural(int n);

/**
 * The coefficients alpha_(c,p) for p < c of one code tree over F_p. Slots
 * are ordered by leaf, then by prefix, both alphabetically.
 */
class CoefficientAssignment {
 public:
  struct Slot {
    int leaf;      // index into tree.leaves()
    int internal;  // index into tree.internal()
  };

  /// All coefficients zero. Throws NotPrime.
  CoefficientAssignment(CodeTree tree, std::uint32_t p);

  const CodeTree& tree() const { return tree_; }
  std::uint32_t modulus() const { return modulus_; }
  const std::vector<Slot>& slots() const { return slots_; }
  static std::vector<Slot> slots_of(const CodeTree& tree);

  std::uint32_t slot_value(std::size_t i) const { return values_.at(i); }
  void set_slot(std::size_t i, std::int64_t value);
  /// Throws std::out_of_range unless p < c with c a leaf and p a prefix.
  FqScalar alpha(const Word& c, const Word& p) const;
  void set(const Word& c, const Word& p, std::int64_t value);

 private:
  std::size_t slot_index(const Word& c, const Word& p) const;
  CodeTree tree_;
  std::uint32_t modulus_;
  std::vector<Slot> slots_;
  std::vector<std::uint32_t> values_;
};

/// mu(a), mu(b) on the basis P (sorted alphabetically), rows acted upon.
std::pair<FqMatrix, FqMatrix> build_mu_matrices(const CoefficientAssignment& ca);

/// Assignments of one tree with both mu(a) and mu(b) invertible.
/// Throws TooLarge when p^slots exceeds the budget.
mpz_class brute_force_tree(const CodeTree& tree, std::uint32_t p, std::uint64_t budget = kDefaultBudget);
IdealCountReport brute_force_A(int n, std::uint32_t p, std::uint64_t budget = kDefaultBudget);

/// Counts for one tree: invertible mu(a) values, invertible mu(b) values,
/// and invertible pairs, next to (p-1)^k p^N and p^M H_lambda(p).
struct PairCounts {
  mpz_class a_count;
  mpz_class b_count;
  mpz_class joint;
  mpz_class expected_a;
  mpz_class expected_b;
};
/// Only the mu(a) leg; cheap even when the joint enumeration is not.
mpz_class mu_a_count(const CodeTree& tree, std::uint32_t p, std::uint64_t budget = kDefaultBudget);
mpz_class mu_b_count(const CodeTree& tree, std::uint32_t p, std::uint64_t budget = kDefaultBudget);
PairCounts pair_counts(const CodeTree& tree, std::uint32_t p, std::uint64_t budget = kDefaultBudget);
CheckOutcome per_tree_pair_count_check(int n, std::uint32_t p, std::uint64_t budget = kDefaultBudget);

/// c - sum alpha_(c,p) p over the nonzero coefficients.
struct IdealGenerator {
  Word leading;
  std::vector<std::pair<Word, FqScalar>> lower_terms;
  std::string to_string() const;
};
std::vector<IdealGenerator> ideal_generators(const CoefficientAssignment& ca);

struct IdealCell {
  Permutation theta;
  int torus_rank = 0;
  std::int64_t affine_dim = 0;
};
struct CellDecomposition {
  int n = 0;
  std::vector<IdealCell> cells;
  /// sum of (q-1)^torus_rank q^affine_dim.
  LaurentPoly polynomial() const;
};
CellDecomposition cell_decomposition(int n);

}  // namespace census

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "census/permstat.hpp"
#include "census/words.hpp"

namespace census {

/**
 * A right congruence of finite index on {a,b}*, given by a code tree (C, P)
 * and f: C -> P with f(c) < c. f is stored extensionally, aligned with the
 * alphabetically sorted leaves.
 */
class RightCongruence {
 public:
  /// Throws InvalidCongruence unless every image lies in P below its leaf.
  RightCongruence(CodeTree tree, std::vector<Word> images);

  const CodeTree& tree() const { return tree_; }
  const std::vector<Word>& images() const { return images_; }
  /// f(c). Throws InvalidCongruence if c is not a leaf.
  const Word& f(const Word& c) const;
  int n() const { return tree_.n(); }

  /// Lines "c -> f(c)" sorted by c, words in power form.
  std::string to_text() const;
  /// Parses the form above; "aa" and "a^2" both accepted.
  static RightCongruence parse(const std::string& text);

  friend bool operator==(const RightCongruence&, const RightCongruence&) = default;

 private:
  CodeTree tree_;
  std::vector<Word> images_;
};

/// Transition maps on the states P (sorted alphabetically), as indices.
struct ActionTable {
  std::vector<Word> states;
  std::vector<int> delta_a;
  std::vector<int> delta_b;
};

ActionTable action_table(const RightCongruence& rc);
bool is_regular(const RightCongruence& rc);

/// Regular congruences with n classes: f = mu_a on C_a and f a bijection
/// C_b -> P_a with f(c) < c.
void enumerate_regular(int n, const std::function<void(const RightCongruence&)>& visit);
std::vector<RightCongruence> all_regular(int n);
/// Filters every triplet (C, P, f) through is_regular. Exponential; an oracle.
std::vector<RightCongruence> all_regular_brute_force(int n);

/// The indecomposable permutation of S_(n+1) attached to a regular
/// congruence. Throws NotRegular.
Permutation to_indecomposable(const RightCongruence& rc);
/// Inverse of to_indecomposable. Throws NotIndecomposable.
RightCongruence from_indecomposable(const Permutation& theta);

/// P~ = P + {a^-1} in twisted order.
std::vector<ExtendedWord> extended_prefix_set(const CodeTree& t);

/// Reduced word over a, b, A = a^-1, B = b^-1.
using GroupWord = std::string;
GroupWord free_reduce(const GroupWord& w);
GroupWord group_inverse(const GroupWord& w);
/// c f(c)^-1 freely reduced, one per leaf, in leaf order. Throws NotRegular.
std::vector<GroupWord> subgroup_generators(const RightCongruence& rc);
/// Whether w lies in the subgroup: its action fixes the class of 1.
/// Throws NotRegular.
bool subgroup_contains(const RightCongruence& rc, const GroupWord& w);

/// Index-n subgroups of F_2 via Hall's recursion.
mpz_class hall_count(int n);

}  // namespace census

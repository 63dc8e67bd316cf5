#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "census/qpoly.hpp"

namespace census {

/// A permutation of {1..n} in one-line notation. n = 0 is allowed.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidPermutation unless image is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);
  /// "325461" when every value is a single digit, else "10,2,...".
  static Permutation parse(const std::string& text);

  int size() const { return static_cast<int>(image_.size()); }
  /// 1-based: (*this)(i) = sigma(i).
  int operator()(int i) const { return image_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& image() const { return image_; }
  Permutation inverse() const;

  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

/// Positions and values of the left-to-right maxima, both 1-based.
struct LRMaxima {
  std::vector<int> positions;
  std::vector<int> values;
  int count() const { return static_cast<int>(positions.size()); }
};

std::int64_t binomial2(std::int64_t n);

std::int64_t inversions(const Permutation& s);
std::int64_t versions(const Permutation& s);
/// p(sigma) counted cell by cell on the permutation matrix.
std::int64_t hook_union_size(const Permutation& s);
/// p(sigma) as 2 inv + v.
std::int64_t p_via_inversions(const Permutation& s);

bool is_indecomposable(const Permutation& s);
LRMaxima lr_maxima(const Permutation& s);
/// Indecomposability via sigma(i_j) >= i_(j+1) on the LR maxima.
bool is_indecomposable_lr(const Permutation& s);

/// Rank-replacement of a repetition-free word. Throws DuplicateLetters.
Permutation standardize(std::span<const int> word);
/// Delete the LR-maximum values and standardize the remainder.
Permutation strip_lr_maxima(const Permutation& t);

/// Both sides of p(t) = p(s) + k n - k(k+1)/2 + sum (j_s - i_s),
/// s = strip_lr_maxima(t).
struct PThetaSides {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};
PThetaSides ptheta_sides(const Permutation& t);
bool ptheta_identity_check(const Permutation& t);

Permutation shifted_concat(const Permutation& a, const Permutation& b);
/// Unique factorization into indecomposable blocks (empty for S_0).
std::vector<Permutation> indecomposable_factors(const Permutation& s);

/// Calls visit on every permutation of S_n in lexicographic order.
void enumerate_permutations(int n, const std::function<void(const Permutation&)>& visit);
void enumerate_indecomposables(int n, const std::function<void(const Permutation&)>& visit);
std::vector<Permutation> all_permutations(int n);
std::vector<Permutation> all_indecomposables(int n);

/// sum over Indec_m of q^inv.
LaurentPoly indec_inv_polynomial(int m);
/// sum over Indec_m of q^p.
LaurentPoly indec_p_polynomial(int m);
/// sum over S_n of q^inv, by enumeration.
LaurentPoly inv_polynomial(int n);

/// Compares sum_n [n]_q! t^n with (1 - sum_k P_k t^k)^(-1) up to t^order.
bool series_identity_check(unsigned order);

}  // namespace census

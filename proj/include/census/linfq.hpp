#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "census/partition.hpp"

namespace census {

bool is_prime(std::uint32_t p);

/// An element of the prime field F_p.
class FqScalar {
 public:
  /// Throws NotPrime. value is reduced mod p.
  FqScalar(std::int64_t value, std::uint32_t p);

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }

  friend FqScalar operator+(FqScalar x, FqScalar y);
  friend FqScalar operator-(FqScalar x, FqScalar y);
  friend FqScalar operator*(FqScalar x, FqScalar y);
  /// Multiplicative inverse. Throws std::domain_error on zero.
  FqScalar inverse() const;
  friend bool operator==(const FqScalar&, const FqScalar&) = default;

 private:
  struct Unchecked {};
  FqScalar(std::uint32_t value, std::uint32_t p, Unchecked) : value_(value), modulus_(p) {}
  std::uint32_t value_;
  std::uint32_t modulus_;
};

/// Dense matrix over F_p; the modulus is stored once.
class FqMatrix {
 public:
  /// Zero matrix. Throws NotPrime.
  FqMatrix(int rows, int cols, std::uint32_t p);
  static FqMatrix identity(int n, std::uint32_t p);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::uint32_t modulus() const { return modulus_; }
  /// 0-based access to the reduced representative.
  std::uint32_t at(int r, int c) const { return entries_[index(r, c)]; }
  void set(int r, int c, std::int64_t value);
  FqScalar scalar(int r, int c) const { return FqScalar(at(r, c), modulus_); }

  friend bool operator==(const FqMatrix&, const FqMatrix&) = default;

 private:
  std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c); }
  int rows_;
  int cols_;
  std::uint32_t modulus_;
  std::vector<std::uint32_t> entries_;
};

/// Rank by Gaussian elimination mod p.
int rank(const FqMatrix& m);
/// Throws NonSquare.
bool is_invertible(const FqMatrix& m);
/// Determinant by cofactor expansion; exponential, for small oracles.
std::uint32_t determinant_cofactor(const FqMatrix& m);

/// A 0-based (row, col) cell.
using Cell = std::pair<int, int>;

/// Every matrix of the given shape vanishing outside `support`, with the
/// support cells read as little-endian base-p digits in the order given.
void enumerate_support_matrices(int rows, int cols, const std::vector<Cell>& support, std::uint32_t p,
                                const std::function<void(const FqMatrix&)>& visit);

/// Default enumeration budget (matrices or assignments per work item).
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 26;

/// p^exponent, or TooLarge when it exceeds `budget`.
std::uint64_t checked_power(std::uint32_t p, std::size_t exponent, std::uint64_t budget);

/// Invertible n x n matrices supported in E_lambda, by brute force.
/// Throws TooLarge past `budget` matrices.
mpz_class count_invertible_support(const Partition& lambda, std::uint32_t p,
                                   std::uint64_t budget = kDefaultBudget);

}  // namespace census

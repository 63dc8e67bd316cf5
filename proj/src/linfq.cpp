#include "census/linfq.hpp"

#include <limits>
#include <stdexcept>

#include "census/errors.hpp"

namespace census {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

std::uint32_t require_prime(std::uint32_t p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  return p;
}

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t mul_mod(std::uint32_t x, std::uint32_t y, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * y % p);
}

std::uint32_t inverse_mod(std::uint32_t x, std::uint32_t p) {
  // Fermat: x^(p-2)
  std::uint64_t result = 1;
  std::uint64_t base = x;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1U) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

FqScalar::FqScalar(std::int64_t value, std::uint32_t p) : value_(reduce(value, require_prime(p))), modulus_(p) {}

FqScalar operator+(FqScalar x, FqScalar y) {
  if (x.modulus_ != y.modulus_) throw DimensionMismatch("scalars from different fields");
  return {(x.value_ + y.value_) % x.modulus_, x.modulus_, FqScalar::Unchecked{}};
}

FqScalar operator-(FqScalar x, FqScalar y) {
  if (x.modulus_ != y.modulus_) throw DimensionMismatch("scalars from different fields");
  return {(x.value_ + x.modulus_ - y.value_) % x.modulus_, x.modulus_, FqScalar::Unchecked{}};
}

FqScalar operator*(FqScalar x, FqScalar y) {
  if (x.modulus_ != y.modulus_) throw DimensionMismatch("scalars from different fields");
  return {mul_mod(x.value_, y.value_, x.modulus_), x.modulus_, FqScalar::Unchecked{}};
}

FqScalar FqScalar::inverse() const {
  if (value_ == 0) throw std::domain_error("zero has no inverse");
  return {inverse_mod(value_, modulus_), modulus_, Unchecked{}};
}

FqMatrix::FqMatrix(int rows, int cols, std::uint32_t p)
    : rows_(rows), cols_(cols), modulus_(require_prime(p)),
      entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {
  if (rows < 0 || cols < 0) throw DimensionMismatch("negative dimension");
}

FqMatrix FqMatrix::identity(int n, std::uint32_t p) {
  FqMatrix m(n, n, p);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void FqMatrix::set(int r, int c, std::int64_t value) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
  entries_[index(r, c)] = reduce(value, modulus_);
}

int rank(const FqMatrix& m) {
  const std::uint32_t p = m.modulus();
  const int rows = m.rows();
  const int cols = m.cols();
  std::vector<std::uint32_t> a(static_cast<std::size_t>(rows * cols));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) a[static_cast<std::size_t>(r * cols + c)] = m.at(r, c);
  auto at = [&](int r, int c) -> std::uint32_t& { return a[static_cast<std::size_t>(r * cols + c)]; };
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = rank;
    while (pivot < rows && at(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (int k = 0; k < cols; ++k) std::swap(at(pivot, k), at(rank, k));
    const std::uint32_t inv = inverse_mod(at(rank, c), p);
    for (int r = rank + 1; r < rows; ++r) {
      if (at(r, c) == 0) continue;
      const std::uint32_t factor = mul_mod(at(r, c), inv, p);
      for (int k = c; k < cols; ++k) {
        at(r, k) = (at(r, k) + p - mul_mod(factor, at(rank, k), p)) % p;
      }
    }
    ++rank;
  }
  return rank;
}

bool is_invertible(const FqMatrix& m) {
  if (m.rows() != m.cols()) throw NonSquare(std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  return rank(m) == m.rows();
}

std::uint32_t determinant_cofactor(const FqMatrix& m) {
  if (m.rows() != m.cols()) throw NonSquare(std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  const int n = m.rows();
  const std::uint32_t p = m.modulus();
  if (n == 0) return 1 % p;
  if (n == 1) return m.at(0, 0);
  std::uint64_t det = 0;
  for (int c = 0; c < n; ++c) {
    if (m.at(0, c) == 0) continue;
    FqMatrix minor(n - 1, n - 1, p);
    for (int r = 1; r < n; ++r) {
      int mc = 0;
      for (int k = 0; k < n; ++k) {
        if (k == c) continue;
        minor.set(r - 1, mc++, m.at(r, k));
      }
    }
    const std::uint64_t term = mul_mod(m.at(0, c), determinant_cofactor(minor), p);
    det = (c % 2 == 0) ? (det + term) % p : (det + p - term) % p;
  }
  return static_cast<std::uint32_t>(det);
}

void enumerate_support_matrices(int rows, int cols, const std::vector<Cell>& support, std::uint32_t p,
                                const std::function<void(const FqMatrix&)>& visit) {
  FqMatrix m(rows, cols, p);
  std::vector<std::uint32_t> digit(support.size(), 0);
  while (true) {
    visit(m);
    std::size_t i = 0;
    while (i < digit.size()) {
      const auto [r, c] = support[i];
      if (++digit[i] < p) {
        m.set(r, c, digit[i]);
        break;
      }
      digit[i] = 0;
      m.set(r, c, 0);
      ++i;
    }
    if (i == digit.size()) break;
  }
}

std::uint64_t checked_power(std::uint32_t p, std::size_t exponent, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (total > budget / p) {
      throw TooLarge(std::to_string(p) + "^" + std::to_string(exponent) + " exceeds budget " + std::to_string(budget));
    }
    total *= p;
  }
  if (total > budget) throw TooLarge("enumeration exceeds budget " + std::to_string(budget));
  return total;
}

mpz_class count_invertible_support(const Partition& lambda, std::uint32_t p, std::uint64_t budget) {
  require_prime(p);
  const int n = lambda.size();
  std::vector<Cell> support;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= lambda[i]; ++j) support.emplace_back(i - 1, j - 1);
  checked_power(p, support.size(), budget);
  std::uint64_t count = 0;
  enumerate_support_matrices(n, n, support, p, [&](const FqMatrix& m) {
    if (is_invertible(m)) ++count;
  });
  return mpz_class(static_cast<unsigned long>(count));
}

}  // namespace census

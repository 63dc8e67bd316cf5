#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace census {

/**
 * Univariate Laurent polynomial in q with arbitrary-precision integer
 * coefficients.
 *
 * Terms are kept in canonical form: exponents strictly increasing, no zero
 * coefficient stored. The zero polynomial has no terms. Values are immutable
 * once built; every operation returns a fresh canonical value.
 */
class LaurentPoly {
 public:
  using Exponent = std::int64_t;
  using Term = std::pair<Exponent, mpz_class>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT: integers promote implicitly
  explicit LaurentPoly(const mpz_class& constant);

  static LaurentPoly monomial(Exponent exp, const mpz_class& coef = 1);
  /// Alias for monomial(1): the variable q.
  static LaurentPoly q();
  /// Builds from arbitrary (unsorted, possibly repeated or zero) terms.
  static LaurentPoly from_terms(std::vector<Term> terms);
  /// coeffs[i] is the coefficient of q^(min_exp + i).
  static LaurentPoly from_dense(Exponent min_exp, const std::vector<mpz_class>& coeffs);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  /// Highest / lowest exponent. Precondition: nonzero.
  Exponent degree() const;
  Exponent low_degree() const;
  mpz_class coefficient(Exponent exp) const;
  mpz_class leading_coefficient() const;
  /// True when no exponent is negative.
  bool is_polynomial() const;

  friend LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& r);
  friend LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& r);
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& r);
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& r) { return *this = *this + r; }
  LaurentPoly& operator-=(const LaurentPoly& r) { return *this = *this - r; }
  LaurentPoly& operator*=(const LaurentPoly& r) { return *this = *this * r; }
  friend bool operator==(const LaurentPoly& p, const LaurentPoly& r) = default;

  /// Multiplication by q^shift.
  LaurentPoly shifted(Exponent shift) const;
  LaurentPoly pow(unsigned e) const;

  /// Exact evaluation. Throws EvalAtZero for q0 = 0 with negative exponents.
  mpq_class eval(const mpq_class& q0) const;
  /// Integer evaluation. Throws EvalAtZero as above and std::domain_error if
  /// the value is not an integer (only possible with negative exponents).
  mpz_class eval_integer(const mpz_class& q0) const;

  /// Exact division by (q - 1) when the remainder vanishes.
  bool divisible_by_q_minus_one() const;
  LaurentPoly divide_by_q_minus_one() const;

  /// Expanded form, descending exponents, e.g. "q^6 - q^5 - 3q^4 + 5q^3 - 2q^2".
  std::string to_string() const;

 private:
  void canonicalize();
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// p + r, p * r, eval: named forms of the operators above.
inline LaurentPoly poly_add(const LaurentPoly& p, const LaurentPoly& r) { return p + r; }
inline LaurentPoly poly_mul(const LaurentPoly& p, const LaurentPoly& r) { return p * r; }
inline mpq_class poly_eval(const LaurentPoly& p, const mpq_class& q0) { return p.eval(q0); }

/// (1)(1+q)(1+q+q^2)...(1+q+...+q^(n-1)).
LaurentPoly q_factorial(unsigned n);

/// (q - 1)^e.
LaurentPoly q_minus_one_pow(unsigned e);

/// Factored rendering p = (q-1)^a * q^b * rest, with a maximal.
struct FactoredForm {
  unsigned q_minus_one_power = 0;
  LaurentPoly::Exponent q_power = 0;
  LaurentPoly rest;
  std::string to_string() const;
};
/// Precondition: p nonzero.
FactoredForm factor_out_q_and_q_minus_one(const LaurentPoly& p);

/**
 * Formal power series in t with LaurentPoly coefficients, truncated at
 * t^order. coeffs().size() == order + 1 always.
 */
class TruncatedSeries {
 public:
  explicit TruncatedSeries(unsigned order);
  TruncatedSeries(unsigned order, std::vector<LaurentPoly> coeffs);

  unsigned order() const { return order_; }
  const std::vector<LaurentPoly>& coeffs() const { return coeffs_; }
  const LaurentPoly& operator[](unsigned k) const { return coeffs_.at(k); }
  void set(unsigned k, LaurentPoly value) { coeffs_.at(k) = std::move(value); }

  friend TruncatedSeries operator*(const TruncatedSeries& s, const TruncatedSeries& u);
  friend bool operator==(const TruncatedSeries& s, const TruncatedSeries& u) = default;

 private:
  unsigned order_;
  std::vector<LaurentPoly> coeffs_;
};

/// u with s*u = 1 mod t^(order+1). Throws NonUnitConstantTerm unless s[0] == 1.
TruncatedSeries series_invert(const TruncatedSeries& s);

}  // namespace census

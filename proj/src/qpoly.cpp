#include "census/qpoly.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "census/errors.hpp"

namespace census {

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace_back(0, mpz_class(constant));
}

LaurentPoly::LaurentPoly(const mpz_class& constant) {
  if (constant != 0) terms_.emplace_back(0, constant);
}

LaurentPoly LaurentPoly::monomial(Exponent exp, const mpz_class& coef) {
  LaurentPoly p;
  if (coef != 0) p.terms_.emplace_back(exp, coef);
  return p;
}

LaurentPoly LaurentPoly::q() { return monomial(1); }

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  LaurentPoly p;
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

LaurentPoly LaurentPoly::from_dense(Exponent min_exp, const std::vector<mpz_class>& coeffs) {
  LaurentPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) p.terms_.emplace_back(min_exp + static_cast<Exponent>(i), coeffs[i]);
  }
  return p;
}

void LaurentPoly::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& x, const Term& y) { return x.first < y.first; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first) {
      merged.back().second += t.second;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.second == 0; });
  terms_ = std::move(merged);
}

LaurentPoly::Exponent LaurentPoly::degree() const {
  if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
  return terms_.back().first;
}

LaurentPoly::Exponent LaurentPoly::low_degree() const {
  if (terms_.empty()) throw std::domain_error("low degree of the zero polynomial");
  return terms_.front().first;
}

mpz_class LaurentPoly::coefficient(Exponent exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, Exponent e) { return t.first < e; });
  if (it != terms_.end() && it->first == exp) return it->second;
  return 0;
}

mpz_class LaurentPoly::leading_coefficient() const {
  if (terms_.empty()) return 0;
  return terms_.back().second;
}

bool LaurentPoly::is_polynomial() const {
  return terms_.empty() || terms_.front().first >= 0;
}

LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& r) {
  LaurentPoly out;
  auto& t = out.terms_;
  t.reserve(p.terms_.size() + r.terms_.size());
  auto i = p.terms_.begin();
  auto j = r.terms_.begin();
  while (i != p.terms_.end() || j != r.terms_.end()) {
    if (j == r.terms_.end() || (i != p.terms_.end() && i->first < j->first)) {
      t.push_back(*i++);
    } else if (i == p.terms_.end() || j->first < i->first) {
      t.push_back(*j++);
    } else {
      mpz_class c = i->second + j->second;
      if (c != 0) t.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& r) { return p + (-r); }

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& r) {
  if (p.is_zero() || r.is_zero()) return {};
  const auto lo = p.low_degree() + r.low_degree();
  const auto hi = p.degree() + r.degree();
  std::vector<mpz_class> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [ep, cp] : p.terms_) {
    for (const auto& [er, cr] : r.terms_) {
      dense[static_cast<std::size_t>(ep + er - lo)] += cp * cr;
    }
  }
  return LaurentPoly::from_dense(lo, dense);
}

LaurentPoly LaurentPoly::shifted(Exponent shift) const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.first += shift;
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

mpq_class LaurentPoly::eval(const mpq_class& q0) const {
  if (q0 == 0 && !is_polynomial()) {
    throw EvalAtZero("negative exponent " + std::to_string(low_degree()) + " at q = 0");
  }
  mpq_class sum = 0;
  for (const auto& [e, c] : terms_) {
    mpq_class power = 1;
    mpz_class num, den;
    const unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(num.get_mpz_t(), q0.get_num_mpz_t(), ae);
    mpz_pow_ui(den.get_mpz_t(), q0.get_den_mpz_t(), ae);
    power = e < 0 ? mpq_class(den, num) : mpq_class(num, den);
    power.canonicalize();
    sum += power * mpq_class(c);
  }
  sum.canonicalize();
  return sum;
}

mpz_class LaurentPoly::eval_integer(const mpz_class& q0) const {
  mpq_class v = eval(mpq_class(q0));
  if (v.get_den() != 1) throw std::domain_error("evaluation is not an integer");
  return v.get_num();
}

bool LaurentPoly::divisible_by_q_minus_one() const {
  // p(1) == 0
  mpz_class s = 0;
  for (const auto& t : terms_) s += t.second;
  return s == 0;
}

LaurentPoly LaurentPoly::divide_by_q_minus_one() const {
  if (!divisible_by_q_minus_one()) throw std::domain_error("not divisible by (q-1)");
  if (is_zero()) return {};
  // Synthetic division from the top: quotient coefficient of q^(e-1) is the
  // running sum of coefficients at exponents >= e.
  const auto lo = low_degree();
  const auto hi = degree();
  std::vector<mpz_class> dense(static_cast<std::size_t>(hi - lo));
  mpz_class running = 0;
  for (auto e = hi; e > lo; --e) {
    running += coefficient(e);
    dense[static_cast<std::size_t>(e - 1 - lo)] = running;
  }
  return from_dense(lo, dense);
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str();
    os << "q";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

LaurentPoly q_factorial(unsigned n) {
  LaurentPoly result(1);
  LaurentPoly bracket;  // 1 + q + ... + q^(k-1)
  for (unsigned k = 1; k <= n; ++k) {
    bracket += LaurentPoly::monomial(k - 1);
    result *= bracket;
  }
  return result;
}

LaurentPoly q_minus_one_pow(unsigned e) { return (LaurentPoly::q() - 1).pow(e); }

std::string FactoredForm::to_string() const {
  std::ostringstream os;
  bool any = false;
  auto sep = [&] {
    if (any) os << " * ";
    any = true;
  };
  if (q_minus_one_power > 0) {
    sep();
    os << "(q-1)";
    if (q_minus_one_power != 1) os << "^" << q_minus_one_power;
  }
  if (q_power != 0) {
    sep();
    os << "q";
    if (q_power != 1) os << "^" << q_power;
  }
  if (!(rest == LaurentPoly(1)) || !any) {
    sep();
    if (rest.term_count() > 1) {
      os << "(" << rest.to_string() << ")";
    } else {
      os << rest.to_string();
    }
  }
  return os.str();
}

FactoredForm factor_out_q_and_q_minus_one(const LaurentPoly& p) {
  if (p.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
  FactoredForm f;
  f.rest = p;
  while (f.rest.divisible_by_q_minus_one()) {
    f.rest = f.rest.divide_by_q_minus_one();
    ++f.q_minus_one_power;
  }
  f.q_power = f.rest.low_degree();
  f.rest = f.rest.shifted(-f.q_power);
  return f;
}

TruncatedSeries::TruncatedSeries(unsigned order) : order_(order), coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(unsigned order, std::vector<LaurentPoly> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

TruncatedSeries operator*(const TruncatedSeries& s, const TruncatedSeries& u) {
  const unsigned order = std::min(s.order_, u.order_);
  TruncatedSeries out(order);
  for (unsigned m = 0; m <= order; ++m) {
    LaurentPoly acc;
    for (unsigned k = 0; k <= m; ++k) acc += s.coeffs_[k] * u.coeffs_[m - k];
    out.coeffs_[m] = std::move(acc);
  }
  return out;
}

TruncatedSeries series_invert(const TruncatedSeries& s) {
  if (!(s[0] == LaurentPoly(1))) {
    throw NonUnitConstantTerm("t^0 coefficient is " + s[0].to_string());
  }
  TruncatedSeries u(s.order());
  u.set(0, LaurentPoly(1));
  for (unsigned m = 1; m <= s.order(); ++m) {
    LaurentPoly acc;
    for (unsigned k = 1; k <= m; ++k) acc -= s[k] * u[m - k];
    u.set(m, std::move(acc));
  }
  return u;
}

}  // namespace census

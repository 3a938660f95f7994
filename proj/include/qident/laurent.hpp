// Sparse bivariate Laurent polynomials over exact rationals: finite sums of
// coeff * q^a * x^b with integer exponents of either sign.
//
// Invariant: terms are sorted by (q_exp, x_exp), exponent pairs are unique,
// and no coefficient is zero. Every operation restores this canonical form,
// so structural equality coincides with mathematical equality.
#pragma once

#include "qident/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qident {

struct Monomial {
  Rat coeff;  // nonzero in any canonical term list
  std::int64_t q_exp = 0;
  std::int64_t x_exp = 0;
};

bool operator==(const Monomial& a, const Monomial& b);

class BivariateLaurent {
 public:
  BivariateLaurent() = default;  // zero polynomial

  static BivariateLaurent constant(Rat c);
  static BivariateLaurent one() { return constant(Rat(1)); }
  static BivariateLaurent monomial(Rat c, std::int64_t q_exp, std::int64_t x_exp);
  // Accepts arbitrary order, duplicate keys and zero coefficients; sorts,
  // merges and prunes.
  static BivariateLaurent from_terms(std::vector<Monomial> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Monomial>& terms() const { return terms_; }

  // Coefficient of q^q_exp x^x_exp (zero when absent).
  Rat coeff(std::int64_t q_exp, std::int64_t x_exp) const;

  // Degree bounds over the support; all four return 0 for the zero polynomial.
  std::int64_t min_q_exp() const;
  std::int64_t max_q_exp() const;
  std::int64_t min_x_exp() const;
  std::int64_t max_x_exp() const;

  BivariateLaurent& operator+=(const BivariateLaurent& rhs);
  BivariateLaurent& operator-=(const BivariateLaurent& rhs);
  BivariateLaurent& operator*=(const BivariateLaurent& rhs);
  BivariateLaurent operator-() const;

  friend BivariateLaurent operator+(const BivariateLaurent& a, const BivariateLaurent& b);
  friend BivariateLaurent operator-(const BivariateLaurent& a, const BivariateLaurent& b);
  friend BivariateLaurent operator*(const BivariateLaurent& a, const BivariateLaurent& b);
  friend bool operator==(const BivariateLaurent& a, const BivariateLaurent& b);
  friend bool operator!=(const BivariateLaurent& a, const BivariateLaurent& b) {
    return !(a == b);
  }

  // In-place building blocks for the factor-by-factor products upstream.
  void add_term(const Rat& c, std::int64_t q_exp, std::int64_t x_exp);
  void mul_monomial(const Rat& c, std::int64_t dq, std::int64_t dx);  // *= c q^dq x^dx
  void mul_binomial(const Rat& c, std::int64_t dq, std::int64_t dx);  // *= 1 + c q^dq x^dx
  void mul_scalar(const Rat& c);
  // mul_binomial followed by discarding terms with q_exp > max_q, fused so
  // truncated products never materialize the dropped tail. Requires dq >= 0.
  void mul_binomial_capped(const Rat& c, std::int64_t dq, std::int64_t dx,
                           std::int64_t max_q);
  void drop_q_above(std::int64_t max_q);

  // Exact evaluation. A zero base under a negative exponent throws
  // std::domain_error.
  Rat eval(const Rat& q0, const Rat& x0) const;
  // Collapses x to the value x0, leaving a polynomial in q alone.
  BivariateLaurent substitute_x(const Rat& x0) const;

  std::string to_string() const;

 private:
  explicit BivariateLaurent(std::vector<Monomial> canonical)
      : terms_(std::move(canonical)) {}

  std::vector<Monomial> terms_;
};

std::ostream& operator<<(std::ostream& os, const BivariateLaurent& p);

}  // namespace qident

// Power series in q with Laurent coefficients in x, truncated at a fixed
// order T: only terms with 0 <= q_exp <= T are stored. Products drop
// everything beyond T, so two series agree iff they agree as series modulo
// q^{T+1}.
#pragma once

#include "qident/laurent.hpp"

namespace qident {

class TruncatedSeries {
 public:
  // Zero series at the given order. Throws std::invalid_argument when
  // order < 0.
  explicit TruncatedSeries(std::int64_t order);

  static TruncatedSeries one(std::int64_t order);
  // Keeps terms with q_exp <= order; throws std::domain_error if p carries a
  // negative q-exponent (such a p has no series expansion at q = 0).
  static TruncatedSeries truncate(const BivariateLaurent& p, std::int64_t order);

  std::int64_t order() const { return order_; }
  const BivariateLaurent& terms() const { return terms_; }
  bool is_zero() const { return terms_.is_zero(); }

  Rat coeff(std::int64_t q_exp, std::int64_t x_exp) const {
    return terms_.coeff(q_exp, x_exp);
  }

  // Mixed-order arithmetic is a logic error upstream; both operands must
  // carry the same order or std::invalid_argument is thrown.
  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  TruncatedSeries& operator*=(const TruncatedSeries& rhs);

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

  // Equal orders and equal term lists.
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) {
    return !(a == b);
  }

  // += c q^q_exp x^x_exp; requires q_exp >= 0 (throws std::domain_error),
  // silently drops terms beyond the order.
  void add_term(const Rat& c, std::int64_t q_exp, std::int64_t x_exp);

  // *= (1 + c q^dq x^dx) with dq >= 0 (throws std::domain_error otherwise),
  // truncating on the fly.
  void mul_binomial(const Rat& c, std::int64_t dq, std::int64_t dx);

  std::string to_string() const;

 private:
  std::int64_t order_;
  BivariateLaurent terms_;
};

}  // namespace qident

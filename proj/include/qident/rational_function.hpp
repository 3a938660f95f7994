// Quotients of bivariate Laurent polynomials. No gcd/normal form is
// maintained; equality is decided by cross-multiplication, which is exact
// because the polynomial ring is an integral domain with canonical forms.
#pragma once

#include "qident/laurent.hpp"

namespace qident {

class RationalFunction {
 public:
  RationalFunction();  // zero (0/1)
  explicit RationalFunction(BivariateLaurent num);
  // Throws std::domain_error when den is the zero polynomial.
  RationalFunction(BivariateLaurent num, BivariateLaurent den);

  static RationalFunction one();

  const BivariateLaurent& num() const { return num_; }
  const BivariateLaurent& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }

  // Addition takes the fast path a/d + b/d = (a+b)/d whenever the two
  // denominators are structurally equal, which canonical forms make a full
  // equality test.
  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction operator-() const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);

  // Throws std::domain_error when rhs is zero.
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

  // a/b == c/d  iff  a*d == c*b.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }

  // Exact evaluation; throws std::domain_error when the denominator
  // evaluates to zero.
  Rat eval(const Rat& q0, const Rat& x0) const;

  std::string to_string() const;

 private:
  BivariateLaurent num_;
  BivariateLaurent den_;
};

}  // namespace qident

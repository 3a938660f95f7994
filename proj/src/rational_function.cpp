#include "qident/rational_function.hpp"

#include <stdexcept>
#include <utility>

namespace qident {

RationalFunction::RationalFunction() : den_(BivariateLaurent::one()) {}

RationalFunction::RationalFunction(BivariateLaurent num)
    : num_(std::move(num)), den_(BivariateLaurent::one()) {}

RationalFunction::RationalFunction(BivariateLaurent num, BivariateLaurent den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
}

RationalFunction RationalFunction::one() {
  return RationalFunction(BivariateLaurent::one());
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
  }
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) {
  if (den_ == rhs.den_) {
    num_ -= rhs.num_;
  } else {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ = den_ * rhs.den_;
  }
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  return *this;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r(*this);
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  RationalFunction r(a);
  r += b;
  return r;
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  RationalFunction r(a);
  r -= b;
  return r;
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  RationalFunction r(a);
  r *= b;
  return r;
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

Rat RationalFunction::eval(const Rat& q0, const Rat& x0) const {
  const Rat d = den_.eval(q0, x0);
  if (d == 0) throw std::domain_error("RationalFunction::eval: denominator vanishes");
  return num_.eval(q0, x0) / d;
}

std::string RationalFunction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

}  // namespace qident

#include "qident/truncated_series.hpp"

#include <stdexcept>
#include <string>

namespace qident {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("TruncatedSeries: order mismatch (" +
                                std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()) + ")");
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::int64_t order) : order_(order) {
  if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
}

TruncatedSeries TruncatedSeries::one(std::int64_t order) {
  TruncatedSeries s(order);
  s.terms_ = BivariateLaurent::one();
  return s;
}

TruncatedSeries TruncatedSeries::truncate(const BivariateLaurent& p, std::int64_t order) {
  if (p.min_q_exp() < 0 && !p.is_zero())
    throw std::domain_error("TruncatedSeries::truncate: negative q-exponent in " +
                            p.to_string());
  TruncatedSeries s(order);
  s.terms_ = p;
  s.terms_.drop_q_above(order);
  return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  require_same_order(*this, rhs);
  terms_ += rhs.terms_;
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  require_same_order(*this, rhs);
  terms_ -= rhs.terms_;
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& rhs) {
  require_same_order(*this, rhs);
  terms_ *= rhs.terms_;
  terms_.drop_q_above(order_);
  return *this;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(a);
  r += b;
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(a);
  r -= b;
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(a);
  r *= b;
  return r;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.order_ == b.order_ && a.terms_ == b.terms_;
}

void TruncatedSeries::add_term(const Rat& c, std::int64_t q_exp, std::int64_t x_exp) {
  if (q_exp < 0)
    throw std::domain_error("TruncatedSeries::add_term: negative q-exponent");
  if (q_exp > order_) return;
  terms_.add_term(c, q_exp, x_exp);
}

void TruncatedSeries::mul_binomial(const Rat& c, std::int64_t dq, std::int64_t dx) {
  if (dq < 0)
    throw std::domain_error("TruncatedSeries::mul_binomial: negative q-shift");
  terms_.mul_binomial_capped(c, dq, dx, order_);
}

std::string TruncatedSeries::to_string() const {
  return terms_.to_string() + " + O(q^" + std::to_string(order_ + 1) + ")";
}

}  // namespace qident

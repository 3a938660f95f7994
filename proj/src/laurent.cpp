#include "qident/laurent.hpp"

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace qident {

namespace {

inline bool key_less(std::int64_t aq, std::int64_t ax, std::int64_t bq, std::int64_t bx) {
  return aq != bq ? aq < bq : ax < bx;
}

inline bool term_less(const Monomial& a, const Monomial& b) {
  return key_less(a.q_exp, a.x_exp, b.q_exp, b.x_exp);
}

// Sorts, merges duplicate exponent pairs, drops zero coefficients.
void canonicalize(std::vector<Monomial>& v) {
  std::sort(v.begin(), v.end(), term_less);
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    Monomial acc = std::move(v[i]);
    std::size_t j = i + 1;
    while (j < v.size() && v[j].q_exp == acc.q_exp && v[j].x_exp == acc.x_exp) {
      acc.coeff += v[j].coeff;
      ++j;
    }
    if (acc.coeff != 0) v[out++] = std::move(acc);
    i = j;
  }
  v.resize(out);
}

struct KeyHash {
  std::size_t operator()(const std::pair<std::int64_t, std::int64_t>& k) const {
    auto mix = [](std::uint64_t z) {
      z += 0x9e3779b97f4a7c15ULL;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      return z ^ (z >> 31);
    };
    return static_cast<std::size_t>(
        mix(static_cast<std::uint64_t>(k.first) * 0x9e3779b97f4a7c15ULL +
            static_cast<std::uint64_t>(k.second)));
  }
};

// out = a + c * shift(b, dq, dx), linear merge of two sorted term lists.
std::vector<Monomial> merge_scaled_shifted(const std::vector<Monomial>& a,
                                           const std::vector<Monomial>& b, const Rat& c,
                                           std::int64_t dq, std::int64_t dx) {
  std::vector<Monomial> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  Rat tmp;
  while (i < a.size() || j < b.size()) {
    const bool take_a =
        j >= b.size() ||
        (i < a.size() &&
         key_less(a[i].q_exp, a[i].x_exp, b[j].q_exp + dq, b[j].x_exp + dx));
    const bool take_b =
        i >= a.size() ||
        (j < b.size() &&
         key_less(b[j].q_exp + dq, b[j].x_exp + dx, a[i].q_exp, a[i].x_exp));
    if (take_a) {
      out.push_back(a[i]);
      ++i;
    } else if (take_b) {
      tmp = c * b[j].coeff;
      if (tmp != 0) out.push_back(Monomial{tmp, b[j].q_exp + dq, b[j].x_exp + dx});
      ++j;
    } else {
      tmp = a[i].coeff + c * b[j].coeff;
      if (tmp != 0) out.push_back(Monomial{tmp, a[i].q_exp, a[i].x_exp});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

bool operator==(const Monomial& a, const Monomial& b) {
  return a.q_exp == b.q_exp && a.x_exp == b.x_exp && a.coeff == b.coeff;
}

BivariateLaurent BivariateLaurent::constant(Rat c) {
  BivariateLaurent p;
  if (c != 0) p.terms_.push_back(Monomial{std::move(c), 0, 0});
  return p;
}

BivariateLaurent BivariateLaurent::monomial(Rat c, std::int64_t q_exp, std::int64_t x_exp) {
  BivariateLaurent p;
  if (c != 0) p.terms_.push_back(Monomial{std::move(c), q_exp, x_exp});
  return p;
}

BivariateLaurent BivariateLaurent::from_terms(std::vector<Monomial> terms) {
  canonicalize(terms);
  return BivariateLaurent(std::move(terms));
}

bool BivariateLaurent::is_one() const {
  return terms_.size() == 1 && terms_[0].q_exp == 0 && terms_[0].x_exp == 0 &&
         terms_[0].coeff == 1;
}

Rat BivariateLaurent::coeff(std::int64_t q_exp, std::int64_t x_exp) const {
  const Monomial probe{Rat(1), q_exp, x_exp};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), probe, term_less);
  if (it != terms_.end() && it->q_exp == q_exp && it->x_exp == x_exp) return it->coeff;
  return Rat(0);
}

std::int64_t BivariateLaurent::min_q_exp() const {
  return terms_.empty() ? 0 : terms_.front().q_exp;
}

std::int64_t BivariateLaurent::max_q_exp() const {
  return terms_.empty() ? 0 : terms_.back().q_exp;
}

std::int64_t BivariateLaurent::min_x_exp() const {
  std::int64_t m = 0;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (i == 0 || terms_[i].x_exp < m) m = terms_[i].x_exp;
  return m;
}

std::int64_t BivariateLaurent::max_x_exp() const {
  std::int64_t m = 0;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (i == 0 || terms_[i].x_exp > m) m = terms_[i].x_exp;
  return m;
}

BivariateLaurent& BivariateLaurent::operator+=(const BivariateLaurent& rhs) {
  terms_ = merge_scaled_shifted(terms_, rhs.terms_, Rat(1), 0, 0);
  return *this;
}

BivariateLaurent& BivariateLaurent::operator-=(const BivariateLaurent& rhs) {
  terms_ = merge_scaled_shifted(terms_, rhs.terms_, Rat(-1), 0, 0);
  return *this;
}

BivariateLaurent BivariateLaurent::operator-() const {
  BivariateLaurent p(*this);
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

BivariateLaurent operator+(const BivariateLaurent& a, const BivariateLaurent& b) {
  BivariateLaurent r(a);
  r += b;
  return r;
}

BivariateLaurent operator-(const BivariateLaurent& a, const BivariateLaurent& b) {
  BivariateLaurent r(a);
  r -= b;
  return r;
}

BivariateLaurent operator*(const BivariateLaurent& a, const BivariateLaurent& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const BivariateLaurent* small = &a;
  const BivariateLaurent* big = &b;
  if (small->term_count() > big->term_count()) std::swap(small, big);

  if (small->term_count() == 1) {
    BivariateLaurent r(*big);
    const Monomial& t = small->terms_[0];
    r.mul_monomial(t.coeff, t.q_exp, t.x_exp);
    return r;
  }

  // A handful of terms: fold shifted copies of the larger factor together by
  // linear merges. Beyond that the merge passes outgrow a hashed
  // accumulation, so switch strategies.
  if (small->term_count() <= 4) {
    std::vector<Monomial> acc;
    for (const Monomial& t : small->terms_)
      acc = merge_scaled_shifted(acc, big->terms_, t.coeff, t.q_exp, t.x_exp);
    return BivariateLaurent::from_terms(std::move(acc));
  }

  std::unordered_map<std::pair<std::int64_t, std::int64_t>, Rat, KeyHash> acc;
  acc.reserve(small->term_count() + big->term_count());
  for (const Monomial& s : small->terms_)
    for (const Monomial& t : big->terms_)
      acc[{s.q_exp + t.q_exp, s.x_exp + t.x_exp}] += s.coeff * t.coeff;
  std::vector<Monomial> out;
  out.reserve(acc.size());
  for (auto& [key, c] : acc)
    if (c != 0) out.push_back(Monomial{std::move(c), key.first, key.second});
  return BivariateLaurent::from_terms(std::move(out));
}

BivariateLaurent& BivariateLaurent::operator*=(const BivariateLaurent& rhs) {
  *this = *this * rhs;
  return *this;
}

bool operator==(const BivariateLaurent& a, const BivariateLaurent& b) {
  return a.terms_ == b.terms_;
}

void BivariateLaurent::add_term(const Rat& c, std::int64_t q_exp, std::int64_t x_exp) {
  if (c == 0) return;
  const Monomial probe{Rat(1), q_exp, x_exp};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), probe, term_less);
  if (it != terms_.end() && it->q_exp == q_exp && it->x_exp == x_exp) {
    it->coeff += c;
    if (it->coeff == 0) terms_.erase(it);
  } else {
    terms_.insert(it, Monomial{c, q_exp, x_exp});
  }
}

void BivariateLaurent::mul_monomial(const Rat& c, std::int64_t dq, std::int64_t dx) {
  if (c == 0) {
    terms_.clear();
    return;
  }
  for (auto& t : terms_) {
    t.coeff *= c;
    t.q_exp += dq;
    t.x_exp += dx;
  }
}

void BivariateLaurent::mul_binomial(const Rat& c, std::int64_t dq, std::int64_t dx) {
  if (dq == 0 && dx == 0) {
    mul_scalar(Rat(1) + c);
    return;
  }
  terms_ = merge_scaled_shifted(terms_, terms_, c, dq, dx);
}

void BivariateLaurent::mul_scalar(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return;
  }
  for (auto& t : terms_) t.coeff *= c;
}

void BivariateLaurent::mul_binomial_capped(const Rat& c, std::int64_t dq, std::int64_t dx,
                                           std::int64_t max_q) {
  if (dq < 0)
    throw std::domain_error("mul_binomial_capped: negative q-shift under truncation");
  drop_q_above(max_q);
  if (dq == 0 && dx == 0) {
    mul_scalar(Rat(1) + c);
    return;
  }
  // Terms are sorted by q_exp first, so the shifted copies that survive the
  // cap come from a prefix of the term list.
  std::vector<Monomial> prefix(terms_);
  std::size_t keep = prefix.size();
  while (keep > 0 && prefix[keep - 1].q_exp + dq > max_q) --keep;
  prefix.resize(keep);
  terms_ = merge_scaled_shifted(terms_, prefix, c, dq, dx);
}

void BivariateLaurent::drop_q_above(std::int64_t max_q) {
  std::size_t keep = terms_.size();
  while (keep > 0 && terms_[keep - 1].q_exp > max_q) --keep;
  terms_.resize(keep);
}

Rat BivariateLaurent::eval(const Rat& q0, const Rat& x0) const {
  Rat sum(0);
  for (const auto& t : terms_) sum += t.coeff * rat_pow(q0, t.q_exp) * rat_pow(x0, t.x_exp);
  return sum;
}

BivariateLaurent BivariateLaurent::substitute_x(const Rat& x0) const {
  BivariateLaurent r;
  for (const auto& t : terms_) r.add_term(t.coeff * rat_pow(x0, t.x_exp), t.q_exp, 0);
  return r;
}

std::string BivariateLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    const bool neg = t.coeff < 0;
    const Rat mag = neg ? Rat(-t.coeff) : t.coeff;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    std::string vars;
    if (t.q_exp != 0) {
      vars += "q";
      if (t.q_exp != 1) vars += "^" + std::to_string(t.q_exp);
    }
    if (t.x_exp != 0) {
      if (!vars.empty()) vars += "*";
      vars += "x";
      if (t.x_exp != 1) vars += "^" + std::to_string(t.x_exp);
    }
    if (vars.empty()) {
      os << rat_to_string(mag);
    } else if (mag == 1) {
      os << vars;
    } else {
      os << rat_to_string(mag) << "*" << vars;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const BivariateLaurent& p) {
  return os << p.to_string();
}

}  // namespace qident

#include "qident/qfactorial.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qident {

std::int64_t tri(std::int64_t k) {
  return k % 2 == 0 ? (k / 2) * (k - 1) : k * ((k - 1) / 2);
}

bool operator==(const ProductSpec& a, const ProductSpec& b) {
  return a.modulus == b.modulus && a.bases == b.bases;
}

BivariateLaurent poch_mod(const Monomial& base, std::int64_t n, std::int64_t d) {
  if (n < 0) throw std::invalid_argument("poch_mod: negative length");
  if (d < 1) throw std::invalid_argument("poch_mod: modulus must be positive");
  BivariateLaurent p = BivariateLaurent::one();
  for (std::int64_t j = 0; j < n; ++j)
    p.mul_binomial(-base.coeff, base.q_exp + d * j, base.x_exp);
  return p;
}

RationalFunction poch(const Monomial& base, std::int64_t n) {
  if (n >= 0) return RationalFunction(poch_mod(base, n, 1));
  const Monomial shifted{base.coeff, base.q_exp + n, base.x_exp};
  BivariateLaurent den = poch_mod(shifted, -n, 1);
  if (den.is_zero())
    throw std::domain_error(
        "poch: undefined at index " + std::to_string(n) + " for base " +
        BivariateLaurent::monomial(base.coeff, base.q_exp, base.x_exp).to_string() +
        " (a reciprocal factor vanishes identically)");
  return RationalFunction(BivariateLaurent::one(), std::move(den));
}

BivariateLaurent qbinom(std::int64_t m, std::int64_t k) {
  if (m < 0) throw std::invalid_argument("qbinom: negative upper index");
  if (k < 0 || k > m) return {};
  std::vector<BivariateLaurent> row(static_cast<std::size_t>(k) + 1);
  row[0] = BivariateLaurent::one();
  for (std::int64_t i = 1; i <= m; ++i) {
    for (std::int64_t j = std::min(i, k); j >= 1; --j) {
      BivariateLaurent t = row[static_cast<std::size_t>(j)];
      t.mul_monomial(Rat(1), j, 0);
      row[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] + t;
    }
  }
  return row[static_cast<std::size_t>(k)];
}

namespace {

void require_expandable(const char* who, const Monomial& base) {
  if (base.q_exp < 0 || (base.q_exp == 0 && base.x_exp == 0))
    throw std::domain_error(
        std::string(who) + ": inadmissible base " +
        BivariateLaurent::monomial(base.coeff, base.q_exp, base.x_exp).to_string() +
        " (needs q_exp >= 0 and a nonconstant monomial)");
}

void apply_inf_factors(TruncatedSeries& s, const Monomial& base, std::int64_t d) {
  for (std::int64_t j = 0; base.q_exp + d * j <= s.order(); ++j)
    s.mul_binomial(-base.coeff, base.q_exp + d * j, base.x_exp);
}

}  // namespace

TruncatedSeries poch_inf(const Monomial& base, std::int64_t d, std::int64_t order) {
  if (d < 1) throw std::invalid_argument("poch_inf: modulus must be positive");
  require_expandable("poch_inf", base);
  TruncatedSeries s = TruncatedSeries::one(order);
  apply_inf_factors(s, base, d);
  return s;
}

TruncatedSeries bracket_inf(const ProductSpec& spec, std::int64_t order) {
  if (spec.bases.empty()) throw std::invalid_argument("bracket_inf: empty bracket");
  if (spec.modulus < 1) throw std::invalid_argument("bracket_inf: modulus must be positive");
  for (const Monomial& base : spec.bases) require_expandable("bracket_inf", base);
  TruncatedSeries s = TruncatedSeries::one(order);
  for (const Monomial& base : spec.bases) apply_inf_factors(s, base, spec.modulus);
  return s;
}

}  // namespace qident

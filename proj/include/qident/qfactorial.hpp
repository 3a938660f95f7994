// q-analogue building blocks: finite and extended q-shifted factorials,
// Gaussian binomials, and truncated infinite products / brackets.
#pragma once

#include "qident/rational_function.hpp"
#include "qident/truncated_series.hpp"

#include <cstdint>
#include <vector>

namespace qident {

// C(k,2) = k(k-1)/2, extended to every integer by the polynomial formula.
std::int64_t tri(std::int64_t k);

// [b1, b2, ..., br; q^d]_infinity: the product over all bases of
// (b_i; q^d)_infinity.
struct ProductSpec {
  std::vector<Monomial> bases;   // nonempty
  std::int64_t modulus = 1;      // the d in (.; q^d)
};

bool operator==(const ProductSpec& a, const ProductSpec& b);

// (base; q^d)_n = prod_{j=0}^{n-1} (1 - q^{d j} * base).
// Throws std::invalid_argument for n < 0 or d < 1.
BivariateLaurent poch_mod(const Monomial& base, std::int64_t n, std::int64_t d);

// (base; q)_n for any integer n. For n < 0 uses the extension
// (a;q)_{-n} = 1/((a q^{-n}; q)_n), i.e. (a;q)_n = 1/((q^n a; q)_{-n}).
// The degenerate bases whose reciprocal factor vanishes identically (a pure
// q-power hitting 1) throw std::domain_error.
RationalFunction poch(const Monomial& base, std::int64_t n);

// Gaussian binomial [m over k]_q via the Pascal recurrence
// [i over j] = [i-1 over j-1] + q^j [i-1 over j]; division-free, a
// polynomial in q alone. Zero when k < 0 or k > m; m < 0 throws
// std::invalid_argument.
BivariateLaurent qbinom(std::int64_t m, std::int64_t k);

// (base; q^d)_infinity exact through q-order T: exactly the factors with
// base.q_exp + d*j <= T are multiplied; every omitted factor is
// 1 + O(q^{T+1}). Requires base.q_exp >= 0 and, when base.q_exp == 0,
// base.x_exp != 0 (otherwise the infinite product is identically 0 or
// divergent as a formal series); violations throw std::domain_error naming
// the base.
TruncatedSeries poch_inf(const Monomial& base, std::int64_t d, std::int64_t order);

// [b1, ..., br; q^d]_infinity through q-order T: the product of poch_inf
// over all bases. Preconditions of poch_inf apply to every base; an empty
// bracket or d < 1 throws std::invalid_argument.
TruncatedSeries bracket_inf(const ProductSpec& spec, std::int64_t order);

}  // namespace qident

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qident/qfactorial.hpp"
#include "test_util.hpp"

#include <map>
#include <stdexcept>
#include <vector>

using qident::BivariateLaurent;
using qident::bracket_inf;
using qident::make_rat;
using qident::Monomial;
using qident::poch;
using qident::poch_inf;
using qident::poch_mod;
using qident::ProductSpec;
using qident::qbinom;
using qident::Rat;
using qident::RationalFunction;
using qident::tri;
using qident::TruncatedSeries;

namespace {

// Independent Gaussian-binomial oracle using the mirrored recurrence
// [i over j] = [i-1 over j] + q^{i-j} [i-1 over j-1].
BivariateLaurent qbinom_oracle(std::int64_t m, std::int64_t k) {
  if (k < 0 || k > m) return {};
  std::vector<std::vector<BivariateLaurent>> table(static_cast<std::size_t>(m) + 1);
  for (std::int64_t i = 0; i <= m; ++i) {
    table[i].resize(static_cast<std::size_t>(i) + 1);
    for (std::int64_t j = 0; j <= i; ++j) {
      if (j == 0 || j == i) {
        table[i][j] = BivariateLaurent::one();
      } else {
        BivariateLaurent shifted = table[i - 1][j - 1];
        shifted.mul_monomial(Rat(1), i - j, 0);
        table[i][j] = table[i - 1][j] + shifted;
      }
    }
  }
  return table[m][k];
}

// Ordinary binomial coefficients, integer Pascal triangle.
std::int64_t binom_int(std::int64_t m, std::int64_t k) {
  if (k < 0 || k > m) return 0;
  std::vector<std::int64_t> row(static_cast<std::size_t>(m) + 1, 0);
  row[0] = 1;
  for (std::int64_t i = 1; i <= m; ++i)
    for (std::int64_t j = i; j >= 1; --j) row[j] += row[j - 1];
  return row[k];
}

Monomial mono(Rat c, std::int64_t qe, std::int64_t xe) { return Monomial{c, qe, xe}; }

}  // namespace

TEST_CASE("triangular numbers") {
  CHECK(tri(0) == 0);
  CHECK(tri(1) == 0);
  CHECK(tri(2) == 1);
  CHECK(tri(-1) == 1);
  CHECK(tri(-2) == 3);
  CHECK(tri(7) == 21);
  // exponent bookkeeping used across the identities
  for (std::int64_t k = -50; k <= 50; ++k) {
    CHECK(k * k + tri(k) == 3 * tri(k) + k);
    CHECK(2 * (k * k + tri(k)) == k * (3 * k - 1));
  }
}

TEST_CASE("finite q-shifted factorials") {
  const auto x = mono(Rat(1), 0, 1);
  CHECK(poch(x, 0) == RationalFunction::one());
  // (x;q)_2 = 1 - (1+q)x + q x^2
  auto expected = BivariateLaurent::from_terms(
      {{Rat(1), 0, 0}, {Rat(-1), 0, 1}, {Rat(-1), 1, 1}, {Rat(1), 1, 2}});
  CHECK(poch(x, 2) == RationalFunction(expected));
  CHECK(poch_mod(x, 2, 1) == expected);

  CHECK(poch_mod(mono(Rat(1), 1, 2), 1, 2) ==
        BivariateLaurent::one() - BivariateLaurent::monomial(Rat(1), 1, 2));
  auto two_factors = BivariateLaurent::one();
  two_factors.mul_binomial(Rat(-1), 1, 2);
  two_factors.mul_binomial(Rat(-1), 3, 2);
  CHECK(poch_mod(mono(Rat(1), 1, 2), 2, 2) == two_factors);

  for (std::int64_t n = 0; n <= 8; ++n)
    CHECK(poch_mod(x, n, 1) == poch(x, n).num());

  CHECK_THROWS_AS(poch_mod(x, -1, 1), std::invalid_argument);
  CHECK_THROWS_AS(poch_mod(x, 2, 0), std::invalid_argument);
}

TEST_CASE("extended negative index") {
  // (a;q)_{-1} = 1/(1 - a/q)
  const auto a = mono(Rat(3), 1, 1);  // 3qx
  auto r = poch(a, -1);
  CHECK(r == RationalFunction(BivariateLaurent::one(),
                              BivariateLaurent::one() -
                                  BivariateLaurent::monomial(Rat(3), 0, 1)));

  // extension consistency: poch(a, n) * poch(q^n a, -n) == 1 for |n| <= 4
  qtest::Rng rng(1001);
  int checked = 0;
  for (int iter = 0; iter < 60; ++iter) {
    const Monomial base{rng.nonzero_rat(), rng.range(-3, 3), rng.range(-2, 2)};
    for (std::int64_t n = -4; n <= 4; ++n) {
      const Monomial shifted{base.coeff, base.q_exp + n, base.x_exp};
      try {
        CHECK(poch(base, n) * poch(shifted, -n) == RationalFunction::one());
        ++checked;
      } catch (const std::domain_error&) {
        // degenerate pure q-power base; skip
      }
    }
  }
  CHECK(checked > 300);

  // splitting law: (a;q)_{m+n} == (a;q)_m (q^m a;q)_n for -4 <= m,n <= 4
  int split_checked = 0;
  for (int iter = 0; iter < 40; ++iter) {
    const Monomial base{rng.nonzero_rat(), rng.range(-3, 3), rng.range(-2, 2)};
    for (std::int64_t mm = -4; mm <= 4; ++mm) {
      for (std::int64_t nn = -4; nn <= 4; ++nn) {
        const Monomial shifted{base.coeff, base.q_exp + mm, base.x_exp};
        try {
          CHECK(poch(base, mm + nn) == poch(base, mm) * poch(shifted, nn));
          ++split_checked;
        } catch (const std::domain_error&) {
        }
      }
    }
  }
  CHECK(split_checked > 1500);

  // the genuinely undefined case: (q;q)_{-1} has a vanishing reciprocal factor
  CHECK_THROWS_AS(poch(mono(Rat(1), 1, 0), -1), std::domain_error);
}

TEST_CASE("Gaussian binomials") {
  CHECK(qbinom(0, 0) == BivariateLaurent::one());
  for (std::int64_t m = 0; m <= 12; ++m) CHECK(qbinom(m, 0) == BivariateLaurent::one());
  CHECK(qbinom(2, 1) == BivariateLaurent::from_terms({{Rat(1), 0, 0}, {Rat(1), 1, 0}}));
  CHECK(qbinom(4, 2) == BivariateLaurent::from_terms({{Rat(1), 0, 0},
                                                      {Rat(1), 1, 0},
                                                      {Rat(2), 2, 0},
                                                      {Rat(1), 3, 0},
                                                      {Rat(1), 4, 0}}));
  CHECK(qbinom(3, -1).is_zero());
  CHECK(qbinom(3, 4).is_zero());
  CHECK_THROWS_AS(qbinom(-1, 0), std::invalid_argument);

  for (std::int64_t m = 0; m <= 12; ++m) {
    for (std::int64_t k = 0; k <= m; ++k) {
      const auto b = qbinom(m, k);
      // independent oracle via the mirrored recurrence
      CHECK(b == qbinom_oracle(m, k));
      // symmetry
      CHECK(b == qbinom(m, m - k));
      // both Pascal forms
      if (m >= 1) {
        auto up = qbinom(m - 1, k);
        up.mul_monomial(Rat(1), k, 0);
        CHECK(b == qbinom(m - 1, k - 1) + up);
        auto mirrored = qbinom(m - 1, k - 1);
        mirrored.mul_monomial(Rat(1), m - k, 0);
        CHECK(b == qbinom(m - 1, k) + mirrored);
      }
      // degree and q=1 specialization
      CHECK(b.max_q_exp() == k * (m - k));
      CHECK(b.min_q_exp() == 0);
      CHECK(b.max_x_exp() == 0);
      CHECK(b.eval(Rat(1), Rat(1)) == binom_int(m, k));
    }
  }
}

TEST_CASE("truncated infinite products") {
  // (q;q)_inf through q^7: the pentagonal pattern
  auto euler = poch_inf(mono(Rat(1), 1, 0), 1, 7);
  auto expected = BivariateLaurent::from_terms(
      {{Rat(1), 0, 0}, {Rat(-1), 1, 0}, {Rat(-1), 2, 0}, {Rat(1), 5, 0}, {Rat(1), 7, 0}});
  CHECK(euler.terms() == expected);

  // pentagonal number theorem as an independent oracle at higher order:
  // (q;q)_inf = sum_k (-1)^k q^{k(3k-1)/2}
  const std::int64_t T = 40;
  auto series = poch_inf(mono(Rat(1), 1, 0), 1, T);
  TruncatedSeries pentagonal(T);
  for (std::int64_t k = -10; k <= 10; ++k) {
    const std::int64_t e = k * (3 * k - 1) / 2;
    if (e >= 0 && e <= T) pentagonal.add_term((k % 2 == 0) ? Rat(1) : Rat(-1), e, 0);
  }
  CHECK(series == pentagonal);

  // (x;q)_inf at order 1: (1-x)(1-qx) = 1 - x - qx + qx^2
  auto xs = poch_inf(mono(Rat(1), 0, 1), 1, 1);
  CHECK(xs.terms() == BivariateLaurent::from_terms({{Rat(1), 0, 0},
                                                    {Rat(-1), 0, 1},
                                                    {Rat(-1), 1, 1},
                                                    {Rat(1), 1, 2}}));

  // (qx^2;q^2)_inf at order 2: only the j=0 factor fits
  auto modular = poch_inf(mono(Rat(1), 1, 2), 2, 2);
  CHECK(modular.terms() ==
        BivariateLaurent::one() - BivariateLaurent::monomial(Rat(1), 1, 2));

  // preconditions
  CHECK_THROWS_WITH_AS(poch_inf(mono(Rat(1), -1, 0), 1, 5),
                       doctest::Contains("q^-1"), std::domain_error);
  CHECK_THROWS_WITH_AS(poch_inf(mono(Rat(2), 0, 0), 1, 5), doctest::Contains("2"),
                       std::domain_error);
  CHECK_THROWS_AS(poch_inf(mono(Rat(1), 1, 0), 0, 5), std::invalid_argument);
}

TEST_CASE("truncation agrees with long finite products") {
  // poch_inf(base, d, T) == trunc_T(poch_mod(base, J, d)) once base.q_exp + d*J > T
  qtest::Rng rng(777);
  for (int iter = 0; iter < 60; ++iter) {
    Monomial base{rng.nonzero_rat(), rng.range(0, 3), rng.range(-2, 2)};
    if (base.q_exp == 0 && base.x_exp == 0) base.x_exp = 1;
    const std::int64_t d = rng.range(1, 3);
    const std::int64_t T = rng.range(0, 12);
    std::int64_t J = 0;
    while (base.q_exp + d * J <= T) ++J;
    CHECK(poch_inf(base, d, T) ==
          TruncatedSeries::truncate(poch_mod(base, J, d), T));
    CHECK(poch_inf(base, d, T) ==
          TruncatedSeries::truncate(poch_mod(base, J + 3, d), T));
  }
}

TEST_CASE("brackets") {
  const ProductSpec quint_a{{mono(Rat(1), 1, 0), mono(Rat(1), 0, 1), mono(Rat(1), 1, -1)},
                            1};
  auto b0 = bracket_inf(quint_a, 0);
  CHECK(b0.terms() == BivariateLaurent::one() - BivariateLaurent::monomial(Rat(1), 0, 1));

  // [q,x,q/x;q] at order 1: 1 - x + q(x^2 - x^-1)
  auto b1 = bracket_inf(quint_a, 1);
  CHECK(b1.terms() == BivariateLaurent::from_terms({{Rat(1), 0, 0},
                                                    {Rat(-1), 0, 1},
                                                    {Rat(-1), 1, -1},
                                                    {Rat(1), 1, 2}}));

  // single-entry bracket degenerates to poch_inf
  qtest::Rng rng(31337);
  for (int iter = 0; iter < 40; ++iter) {
    Monomial base{rng.nonzero_rat(), rng.range(0, 3), rng.range(-2, 2)};
    if (base.q_exp == 0 && base.x_exp == 0) base.q_exp = 1;
    const std::int64_t d = rng.range(1, 3);
    const std::int64_t T = rng.range(0, 10);
    CHECK(bracket_inf(ProductSpec{{base}, d}, T) == poch_inf(base, d, T));
  }

  // multi-entry bracket equals the ts product of its single-entry parts
  const ProductSpec quint_b{{mono(Rat(1), 1, 2), mono(Rat(1), 1, -2)}, 2};
  for (std::int64_t T : {0, 1, 5, 9}) {
    CHECK(bracket_inf(quint_b, T) ==
          poch_inf(mono(Rat(1), 1, 2), 2, T) * poch_inf(mono(Rat(1), 1, -2), 2, T));
    CHECK(bracket_inf(quint_a, T) == poch_inf(mono(Rat(1), 1, 0), 1, T) *
                                         poch_inf(mono(Rat(1), 0, 1), 1, T) *
                                         poch_inf(mono(Rat(1), 1, -1), 1, T));
  }

  CHECK_THROWS_AS(bracket_inf(ProductSpec{{}, 1}, 3), std::invalid_argument);
  CHECK_THROWS_AS(bracket_inf(ProductSpec{{mono(Rat(1), 1, 0)}, 0}, 3),
                  std::invalid_argument);
  CHECK(ProductSpec{{mono(Rat(1), 1, 0)}, 1} == ProductSpec{{mono(Rat(1), 1, 0)}, 1});
  CHECK(!(ProductSpec{{mono(Rat(1), 1, 0)}, 1} == ProductSpec{{mono(Rat(1), 1, 0)}, 2}));
}

TEST_CASE("numeric and symbolic pochhammers agree") {
  qtest::Rng rng(555);
  for (int iter = 0; iter < 80; ++iter) {
    const Monomial base{rng.nonzero_rat(), rng.range(-2, 2), rng.range(-2, 2)};
    const Rat q0 = rng.nonzero_rat();
    const Rat x0 = rng.nonzero_rat();
    const std::int64_t n = rng.range(0, 5);
    const Rat a0 = base.coeff * qident::rat_pow(q0, base.q_exp) *
                   qident::rat_pow(x0, base.x_exp);
    Rat expect(1);
    Rat qj(1);
    for (std::int64_t j = 0; j < n; ++j) {
      expect *= Rat(1) - a0 * qj;
      qj *= q0;
    }
    CHECK(poch(base, n).eval(q0, x0) == expect);
  }
}

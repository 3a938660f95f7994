// Verifiers for the identity family around the finite form of the quintuple
// product: each builds both sides exactly (rational functions or truncated
// series) and reports equality with a first-discrepancy witness.
#pragma once

#include "qident/hypergeometric.hpp"
#include "qident/qfactorial.hpp"
#include "qident/report.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>

namespace qident {

// Deliberate fault injections for negative-control testing. Each mutation is
// accepted only by the verifier whose formula it perturbs.
enum class Mutation {
  none,
  drop_one_plus_xq,        // finite sum: omit the (1 + x q^k) factor
  x_cubed_to_squared,      // bilateral sum: x^{3k} -> x^{2k}
  shrink_theta_exponent,   // series LHS: q^{3 C(k,2)} -> q^{2 C(k,2)}
  drop_euler_factor,       // product relation: omit the (q;q)_inf factor
};

std::string_view mutation_name(Mutation m);
std::optional<Mutation> mutation_from_name(std::string_view name);

// Parameter/configuration problems that are not verification failures
// (distinct exit path in the CLI).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- Finite form: 1 == sum_{k=0}^m (1+xq^k) [m over k]_q
//                        (x;q)_{m+1}/(q^k x^2;q)_{m+1} x^k q^{k^2} ----

// The raw k-th summand, exactly as displayed.
RationalFunction finite_quintuple_summand(std::int64_t m, std::int64_t k);
// The full sum over the common denominator (x^2;q)_{2m+1}; rf_eq-equal to
// the naive pairwise accumulation of the summands.
RationalFunction finite_quintuple_sum(std::int64_t m, Mutation mut = Mutation::none);
VerificationReport verify_finite_quintuple(std::int64_t m,
                                           Mutation mut = Mutation::none);

// ---- Bilateral restatement: sum over k in [-m, n] ----

RationalFunction bilateral_summand(std::int64_t m, std::int64_t n, std::int64_t k);
RationalFunction bilateral_sum(std::int64_t m, std::int64_t n,
                               Mutation mut = Mutation::none);
VerificationReport verify_bilateral(std::int64_t m, std::int64_t n,
                                    Mutation mut = Mutation::none);

// ---- The two-line factorial-fraction relation behind the restatement ----
// Requires m, n >= 0 and -m <= k <= n (std::invalid_argument otherwise).
VerificationReport verify_substitution_relation(std::int64_t m, std::int64_t n,
                                                std::int64_t k);

// ---- Quintuple product, both sides through q-order T ----

TruncatedSeries quintuple_lhs_series(std::int64_t order,
                                     Mutation mut = Mutation::none);
TruncatedSeries quintuple_rhs_series(std::int64_t order);
VerificationReport verify_quintuple(std::int64_t order, Mutation mut = Mutation::none);

// ---- Euler-factor bridge between the bilateral limit and the product ----

VerificationReport verify_product_relation(std::int64_t order,
                                           Mutation mut = Mutation::none);

// ---- Terminating q-Dixon sum, exact multipoint sampling ----

// The 4phi3 data with upper parameters x^2, -qx, q^{-m}, M, lower
// parameters -x, q^{1+m}x^2, qx^2/M, argument q^{1+m}x/M.
HyperSum qdixon_hyper(std::int64_t m);
// Closed form (qx^2;q)_m (qx/M;q)_m / ((qx;q)_m (qx^2/M;q)_m) at a point.
Rat qdixon_rhs_eval(std::int64_t m, const Rat& q0, const Rat& x0, const Rat& M0);
// Compares both sides at `trials` admissible pseudo-random points drawn
// deterministically from the seed; inadmissible points are resampled, and an
// exhausted retry budget raises ConfigError.
VerificationReport verify_qdixon_sampled(std::int64_t m, std::int64_t trials,
                                         std::int64_t seed);
// Same comparison with M pinned to the exact power q^{-N}.
VerificationReport verify_qdixon_inverse_power(std::int64_t m, std::int64_t N,
                                               std::int64_t points, std::int64_t seed);

// ---- The M -> infinity limit of q-Dixon ----

RationalFunction dixon_limit_summand(std::int64_t m, std::int64_t k);
RationalFunction dixon_limit_sum(std::int64_t m);
// pass iff dixon_limit_sum(m) == (qx^2;q)_m / (qx;q)_m
VerificationReport verify_dixon_limit(std::int64_t m);
// pass iff the k-th finite-form summand equals the k-th limiting summand
// times (qx;q)_m / (qx^2;q)_m; requires 0 <= k <= m.
VerificationReport verify_dixon_term_match(std::int64_t m, std::int64_t k);

// First coefficient mismatch between two canonical polynomials, walking the
// sorted term lists in (q_exp, x_exp) order; nullopt when equal.
std::optional<CoeffWitness> first_discrepancy(const BivariateLaurent& lhs,
                                              const BivariateLaurent& rhs);

}  // namespace qident

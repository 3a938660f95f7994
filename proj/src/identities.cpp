#include "qident/identities.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace qident {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Monomial mono(Rat c, std::int64_t qe, std::int64_t xe) {
  return Monomial{std::move(c), qe, xe};
}

using Params = std::vector<std::pair<std::string, ParamValue>>;

Metrics poly_metrics(const BivariateLaurent& l, const BivariateLaurent& r) {
  Metrics mx;
  mx.terms = static_cast<std::int64_t>(std::max(l.term_count(), r.term_count()));
  mx.max_q_deg = std::max(l.max_q_exp(), r.max_q_exp());
  mx.max_x_deg = std::max(l.max_x_exp(), r.max_x_exp());
  return mx;
}

VerificationReport poly_compare_report(IdentityId id, Params params,
                                       const BivariateLaurent& lhs,
                                       const BivariateLaurent& rhs,
                                       Clock::time_point t0) {
  VerificationReport rep;
  rep.identity = id;
  rep.params = std::move(params);
  auto w = first_discrepancy(lhs, rhs);
  rep.pass = !w.has_value();
  if (w) rep.witness = Witness(std::move(*w));
  rep.metrics = poly_metrics(lhs, rhs);
  rep.metrics.elapsed_ms = ms_since(t0);
  return rep;
}

void require_mutation(Mutation got, Mutation applicable, const char* who) {
  if (got != Mutation::none && got != applicable)
    throw std::invalid_argument(std::string(who) + ": mutation '" +
                                std::string(mutation_name(got)) +
                                "' does not apply here");
}

void append_mutation_param(Params& params, Mutation mut) {
  if (mut != Mutation::none)
    params.emplace_back("mutation", std::string(mutation_name(mut)));
}

Rat sign_pow(std::int64_t e) { return (e % 2 != 0) ? Rat(-1) : Rat(1); }

}  // namespace

std::string_view mutation_name(Mutation m) {
  switch (m) {
    case Mutation::none: return "none";
    case Mutation::drop_one_plus_xq: return "drop-one-plus-xq";
    case Mutation::x_cubed_to_squared: return "x-cubed-to-squared";
    case Mutation::shrink_theta_exponent: return "shrink-theta-exponent";
    case Mutation::drop_euler_factor: return "drop-euler-factor";
  }
  return "none";
}

std::optional<Mutation> mutation_from_name(std::string_view name) {
  for (Mutation m : {Mutation::none, Mutation::drop_one_plus_xq,
                     Mutation::x_cubed_to_squared, Mutation::shrink_theta_exponent,
                     Mutation::drop_euler_factor})
    if (mutation_name(m) == name) return m;
  return std::nullopt;
}

std::optional<CoeffWitness> first_discrepancy(const BivariateLaurent& lhs,
                                              const BivariateLaurent& rhs) {
  const auto& a = lhs.terms();
  const auto& b = rhs.terms();
  auto before = [](const Monomial& s, const Monomial& t) {
    return s.q_exp != t.q_exp ? s.q_exp < t.q_exp : s.x_exp < t.x_exp;
  };
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j >= b.size() || (i < a.size() && before(a[i], b[j])))
      return CoeffWitness{a[i].q_exp, a[i].x_exp, a[i].coeff, Rat(0)};
    if (i >= a.size() || before(b[j], a[i]))
      return CoeffWitness{b[j].q_exp, b[j].x_exp, Rat(0), b[j].coeff};
    if (a[i].coeff != b[j].coeff)
      return CoeffWitness{a[i].q_exp, a[i].x_exp, a[i].coeff, b[j].coeff};
    ++i;
    ++j;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- finite form

RationalFunction finite_quintuple_summand(std::int64_t m, std::int64_t k) {
  if (m < 0 || k < 0 || k > m)
    throw std::invalid_argument("finite_quintuple_summand: need 0 <= k <= m");
  BivariateLaurent num = qbinom(m, k);
  num.mul_binomial(Rat(1), k, 1);                       // (1 + x q^k)
  num *= poch_mod(mono(Rat(1), 0, 1), m + 1, 1);        // (x;q)_{m+1}
  num.mul_monomial(Rat(1), k * k, k);                   // x^k q^{k^2}
  BivariateLaurent den = poch_mod(mono(Rat(1), k, 2), m + 1, 1);  // (q^k x^2;q)_{m+1}
  return RationalFunction(std::move(num), std::move(den));
}

RationalFunction finite_quintuple_sum(std::int64_t m, Mutation mut) {
  if (m < 0) throw std::invalid_argument("finite_quintuple_sum: negative m");
  require_mutation(mut, Mutation::drop_one_plus_xq, "finite_quintuple_sum");
  // Every summand is brought over the common denominator (x^2;q)_{2m+1} via
  // (q^k x^2;q)_{m+1} = (x^2;q)_{2m+1} / ((x^2;q)_k (q^{m+k+1}x^2;q)_{m-k}),
  // and the k-independent (x;q)_{m+1} is applied once at the end.
  BivariateLaurent sum;
  for (std::int64_t k = 0; k <= m; ++k) {
    BivariateLaurent t = qbinom(m, k);
    if (mut != Mutation::drop_one_plus_xq) t.mul_binomial(Rat(1), k, 1);
    for (std::int64_t j = 0; j < k; ++j) t.mul_binomial(Rat(-1), j, 2);
    for (std::int64_t j = 0; j < m - k; ++j) t.mul_binomial(Rat(-1), m + k + 1 + j, 2);
    t.mul_monomial(Rat(1), k * k, k);
    sum += t;
  }
  for (std::int64_t j = 0; j <= m; ++j) sum.mul_binomial(Rat(-1), j, 1);
  BivariateLaurent den = poch_mod(mono(Rat(1), 0, 2), 2 * m + 1, 1);
  return RationalFunction(std::move(sum), std::move(den));
}

VerificationReport verify_finite_quintuple(std::int64_t m, Mutation mut) {
  const auto t0 = Clock::now();
  const RationalFunction rf = finite_quintuple_sum(m, mut);
  Params params{{"m", m}};
  append_mutation_param(params, mut);
  return poly_compare_report(IdentityId::finite_quintuple, std::move(params),
                             rf.num(), rf.den(), t0);
}

// ------------------------------------------------------------- bilateral form

namespace {

void check_bilateral_args(std::int64_t m, std::int64_t n) {
  if (m < 0 || n < 0) throw std::invalid_argument("bilateral: need m, n >= 0");
}

}  // namespace

RationalFunction bilateral_summand(std::int64_t m, std::int64_t n, std::int64_t k) {
  check_bilateral_args(m, n);
  if (k < -m || k > n)
    throw std::invalid_argument("bilateral_summand: need -m <= k <= n");
  BivariateLaurent num = qbinom(m + n, m + k);
  num.mul_binomial(Rat(-1), k, 1);                      // (1 - x q^k)
  num *= poch_mod(mono(Rat(-1), 0, 1), 1 + n, 1);       // (-x;q)_{1+n}
  num *= poch_mod(mono(Rat(-1), 1, -1), m, 1);          // (-q/x;q)_m
  num.mul_monomial(Rat(1), k * k + tri(k), 3 * k);      // x^{3k} q^{k^2+C(k,2)}
  RationalFunction rf{std::move(num)};
  rf = rf / poch(mono(Rat(1), 0, 2), 1 + n + k);        // (x^2;q)_{1+n+k}
  rf = rf / poch(mono(Rat(1), 1, -2), m - k);           // (q/x^2;q)_{m-k}
  return rf;
}

RationalFunction bilateral_sum(std::int64_t m, std::int64_t n, Mutation mut) {
  check_bilateral_args(m, n);
  require_mutation(mut, Mutation::x_cubed_to_squared, "bilateral_sum");
  const std::int64_t x_mult = (mut == Mutation::x_cubed_to_squared) ? 2 : 3;
  // Common denominator (x^2;q)_{1+2n} (q/x^2;q)_{2m}; the cofactors below
  // come from the splitting law, valid for the extended indices as well.
  BivariateLaurent sum;
  for (std::int64_t k = -m; k <= n; ++k) {
    BivariateLaurent t = qbinom(m + n, m + k);
    t.mul_binomial(Rat(-1), k, 1);
    for (std::int64_t j = 0; j < n - k; ++j)            // (q^{1+n+k} x^2;q)_{n-k}
      t.mul_binomial(Rat(-1), 1 + n + k + j, 2);
    for (std::int64_t j = 0; j < m + k; ++j)            // (q^{1+m-k} x^{-2};q)_{m+k}
      t.mul_binomial(Rat(-1), 1 + m - k + j, -2);
    t.mul_monomial(Rat(1), k * k + tri(k), x_mult * k);
    sum += t;
  }
  for (std::int64_t j = 0; j < 1 + n; ++j) sum.mul_binomial(Rat(1), j, 1);
  for (std::int64_t j = 0; j < m; ++j) sum.mul_binomial(Rat(1), 1 + j, -1);
  BivariateLaurent den = poch_mod(mono(Rat(1), 0, 2), 1 + 2 * n, 1);
  den *= poch_mod(mono(Rat(1), 1, -2), 2 * m, 1);
  return RationalFunction(std::move(sum), std::move(den));
}

VerificationReport verify_bilateral(std::int64_t m, std::int64_t n, Mutation mut) {
  const auto t0 = Clock::now();
  const RationalFunction rf = bilateral_sum(m, n, mut);
  Params params{{"m", m}, {"n", n}};
  if (m > n + 1 || n > m)  // some Pochhammer index in the display is negative
    params.emplace_back("extended_index", std::string("true"));
  append_mutation_param(params, mut);
  return poly_compare_report(IdentityId::bilateral, std::move(params), rf.num(),
                             rf.den(), t0);
}

// ------------------------------------------- factorial-fraction relation

VerificationReport verify_substitution_relation(std::int64_t m, std::int64_t n,
                                                std::int64_t k) {
  if (m < 0 || n < 0 || k < -m || k > n)
    throw std::invalid_argument(
        "verify_substitution_relation: need m, n >= 0 and -m <= k <= n");
  const auto t0 = Clock::now();
  const RationalFunction lhs = poch(mono(Rat(-1), -m, 1), m + n + 1) /
                               poch(mono(Rat(1), k - m, 2), m + n + 1);
  const RationalFunction line1 =
      poch(mono(Rat(-1), -m, 1), m) * poch(mono(Rat(-1), 0, 1), 1 + n) /
      (poch(mono(Rat(1), k - m, 2), m - k) * poch(mono(Rat(1), 0, 2), 1 + n + k));
  const RationalFunction line2 =
      RationalFunction(BivariateLaurent::monomial(sign_pow(m - k), tri(k) - m * k,
                                                  2 * k - m)) *
      poch(mono(Rat(-1), 1, -1), m) * poch(mono(Rat(-1), 0, 1), 1 + n) /
      (poch(mono(Rat(1), 1, -2), m - k) * poch(mono(Rat(1), 0, 2), 1 + n + k));

  const BivariateLaurent a1 = lhs.num() * line1.den();
  const BivariateLaurent b1 = line1.num() * lhs.den();
  const BivariateLaurent a2 = lhs.num() * line2.den();
  const BivariateLaurent b2 = line2.num() * lhs.den();

  VerificationReport rep;
  rep.identity = IdentityId::substitution_relation;
  rep.params = {{"m", m}, {"n", n}, {"k", k}};
  auto w = first_discrepancy(a1, b1);
  if (!w) w = first_discrepancy(a2, b2);
  rep.pass = !w.has_value();
  if (w) rep.witness = Witness(std::move(*w));
  const Metrics m1 = poly_metrics(a1, b1);
  const Metrics m2 = poly_metrics(a2, b2);
  rep.metrics.terms = std::max(m1.terms, m2.terms);
  rep.metrics.max_q_deg = std::max(m1.max_q_deg, m2.max_q_deg);
  rep.metrics.max_x_deg = std::max(m1.max_x_deg, m2.max_x_deg);
  rep.metrics.elapsed_ms = ms_since(t0);
  return rep;
}

// ----------------------------------------------------------- quintuple series

TruncatedSeries quintuple_lhs_series(std::int64_t order, Mutation mut) {
  require_mutation(mut, Mutation::shrink_theta_exponent, "quintuple_lhs_series");
  const std::int64_t c = (mut == Mutation::shrink_theta_exponent) ? 2 : 3;
  TruncatedSeries s(order);
  // term k of sum_k (1-xq^k) q^{c C(k,2)} (qx^3)^k, enumerated outward
  for (std::int64_t r = 0;; ++r) {
    bool any = false;
    const int copies = (r == 0) ? 1 : 2;
    for (int i = 0; i < copies; ++i) {
      const std::int64_t k = (i == 0) ? r : -r;
      const std::int64_t e1 = c * tri(k) + k;      // q-exponent of +x^{3k}
      const std::int64_t e2 = c * tri(k) + 2 * k;  // q-exponent of -x^{3k+1}
      if (e1 >= 0 && e1 <= order) {
        s.add_term(Rat(1), e1, 3 * k);
        any = true;
      }
      if (e2 >= 0 && e2 <= order) {
        s.add_term(Rat(-1), e2, 3 * k + 1);
        any = true;
      }
    }
    if (!any && r > 0) break;
  }
  return s;
}

TruncatedSeries quintuple_rhs_series(std::int64_t order) {
  const ProductSpec first{{mono(Rat(1), 1, 0), mono(Rat(1), 0, 1), mono(Rat(1), 1, -1)},
                          1};
  const ProductSpec second{{mono(Rat(1), 1, 2), mono(Rat(1), 1, -2)}, 2};
  return bracket_inf(first, order) * bracket_inf(second, order);
}

VerificationReport verify_quintuple(std::int64_t order, Mutation mut) {
  const auto t0 = Clock::now();
  const TruncatedSeries lhs = quintuple_lhs_series(order, mut);
  const TruncatedSeries rhs = quintuple_rhs_series(order);
  Params params{{"T", order}};
  append_mutation_param(params, mut);
  return poly_compare_report(IdentityId::quintuple_series, std::move(params),
                             lhs.terms(), rhs.terms(), t0);
}

// ---------------------------------------------------------- product relation

VerificationReport verify_product_relation(std::int64_t order, Mutation mut) {
  require_mutation(mut, Mutation::drop_euler_factor, "verify_product_relation");
  const auto t0 = Clock::now();
  TruncatedSeries lhs = mut == Mutation::drop_euler_factor
                            ? TruncatedSeries::one(order)
                            : poch_inf(mono(Rat(1), 1, 0), 1, order);  // (q;q)
  lhs *= poch_inf(mono(Rat(1), 0, 2), 1, order);                       // (x^2;q)
  lhs *= poch_inf(mono(Rat(1), 1, -2), 1, order);                      // (q/x^2;q)
  TruncatedSeries rhs = quintuple_rhs_series(order);
  rhs *= poch_inf(mono(Rat(-1), 0, 1), 1, order);                      // (-x;q)
  rhs *= poch_inf(mono(Rat(-1), 1, -1), 1, order);                     // (-q/x;q)
  Params params{{"T", order}};
  append_mutation_param(params, mut);
  return poly_compare_report(IdentityId::product_relation, std::move(params),
                             lhs.terms(), rhs.terms(), t0);
}

// ------------------------------------------------------------------- q-Dixon

HyperSum qdixon_hyper(std::int64_t m) {
  if (m < 0) throw std::invalid_argument("qdixon_hyper: negative m");
  HyperSum h;
  h.num_bases = {ParamMonomial{Rat(1), 0, 2, 0}, ParamMonomial{Rat(-1), 1, 1, 0},
                 ParamMonomial{Rat(1), -m, 0, 0}, ParamMonomial{Rat(1), 0, 0, 1}};
  h.den_bases = {ParamMonomial{Rat(-1), 0, 1, 0}, ParamMonomial{Rat(1), 1 + m, 2, 0},
                 ParamMonomial{Rat(1), 1, 2, -1}};
  h.argument = ParamMonomial{Rat(1), 1 + m, 1, -1};
  h.length = m;
  return h;
}

Rat qdixon_rhs_eval(std::int64_t m, const Rat& q0, const Rat& x0, const Rat& M0) {
  if (M0 == 0) throw std::domain_error("qdixon_rhs_eval: M must be nonzero");
  const Rat den = poch_eval(q0 * x0, q0, m) * poch_eval(q0 * x0 * x0 / M0, q0, m);
  if (den == 0) throw std::domain_error("qdixon_rhs_eval: denominator vanishes");
  return poch_eval(q0 * x0 * x0, q0, m) * poch_eval(q0 * x0 / M0, q0, m) / den;
}

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic point source. Draws use modulo reduction, which is stable
// across platforms, unlike std::uniform_int_distribution.
struct PointSampler {
  std::mt19937_64 eng;
  PointSampler(std::int64_t seed, std::uint64_t stream)
      : eng(mix64(mix64(static_cast<std::uint64_t>(seed)) + stream)) {}

  // numerator in [-9,9] \ {0}, denominator in [2,9]
  Rat draw() {
    std::int64_t num = 0;
    while (num == 0) num = static_cast<std::int64_t>(eng() % 19) - 9;
    const std::int64_t den = 2 + static_cast<std::int64_t>(eng() % 8);
    return make_rat(num, den);
  }
};

std::string render_point(const SamplePoint& p) {
  return "q=" + rat_to_string(p.q) + " x=" + rat_to_string(p.x) +
         " M=" + rat_to_string(p.M);
}

VerificationReport run_qdixon_sampling(std::int64_t m, std::int64_t trials,
                                       std::int64_t seed, std::int64_t inverse_N,
                                       Params params, std::uint64_t stream) {
  const auto t0 = Clock::now();
  const HyperSum h = qdixon_hyper(m);
  PointSampler sampler(seed, stream);
  VerificationReport rep;
  rep.identity = IdentityId::qdixon_sampled;
  rep.pass = true;
  std::string points;
  for (std::int64_t trial = 0; trial < trials; ++trial) {
    int budget = 100;
    for (;;) {
      if (budget-- == 0)
        throw ConfigError("qdixon sampling: resampling budget exhausted at trial " +
                          std::to_string(trial) + " (m=" + std::to_string(m) + ")");
      SamplePoint p;
      p.q = sampler.draw();
      if (p.q == 1 || p.q == -1) continue;
      p.x = sampler.draw();
      p.M = inverse_N > 0 ? rat_pow(p.q, -inverse_N) : sampler.draw();
      Rat lhs, rhs;
      try {
        lhs = qhyper_eval(h, p.q, p.x, p.M);
        rhs = qdixon_rhs_eval(m, p.q, p.x, p.M);
      } catch (const std::domain_error&) {
        continue;  // pole at this point: resample (PoleError included)
      }
      if (!points.empty()) points += "; ";
      points += render_point(p);
      if (lhs != rhs && rep.pass) {
        rep.pass = false;
        rep.witness = Witness(SampleWitness{p, lhs, rhs});
      }
      break;
    }
  }
  params.emplace_back("points", std::move(points));
  rep.params = std::move(params);
  rep.metrics.terms = trials;
  rep.metrics.elapsed_ms = ms_since(t0);
  return rep;
}

}  // namespace

VerificationReport verify_qdixon_sampled(std::int64_t m, std::int64_t trials,
                                         std::int64_t seed) {
  if (m < 0) throw std::invalid_argument("verify_qdixon_sampled: negative m");
  if (trials < 1) throw ConfigError("verify_qdixon_sampled: trials must be positive");
  Params params{{"m", m}, {"trials", trials}, {"seed", seed}};
  return run_qdixon_sampling(m, trials, seed, 0, std::move(params),
                             static_cast<std::uint64_t>(m));
}

VerificationReport verify_qdixon_inverse_power(std::int64_t m, std::int64_t N,
                                               std::int64_t points,
                                               std::int64_t seed) {
  if (m < 0) throw std::invalid_argument("verify_qdixon_inverse_power: negative m");
  if (N < 1) throw std::invalid_argument("verify_qdixon_inverse_power: need N >= 1");
  if (points < 1)
    throw ConfigError("verify_qdixon_inverse_power: points must be positive");
  Params params{{"m", m},
                {"N", N},
                {"trials", points},
                {"seed", seed},
                {"specialization", std::string("M=q^-N")}};
  const std::uint64_t stream =
      0x8000000000000000ULL + (static_cast<std::uint64_t>(m) << 8) +
      static_cast<std::uint64_t>(N);
  return run_qdixon_sampling(m, points, seed, N, std::move(params), stream);
}

// --------------------------------------------------------------- Dixon limit

RationalFunction dixon_limit_summand(std::int64_t m, std::int64_t k) {
  if (m < 0 || k < 0 || k > m)
    throw std::invalid_argument("dixon_limit_summand: need 0 <= k <= m");
  BivariateLaurent num = poch_mod(mono(Rat(1), 0, 2), k, 1);   // (x^2;q)_k
  num *= poch_mod(mono(Rat(-1), 1, 1), k, 1);                  // (-qx;q)_k
  num *= poch_mod(mono(Rat(1), -m, 0), k, 1);                  // (q^{-m};q)_k
  num.mul_monomial(sign_pow(k), tri(k) + (1 + m) * k, k);      // (-1)^k q^{C(k,2)} (q^{1+m}x)^k
  BivariateLaurent den = poch_mod(mono(Rat(1), 1, 0), k, 1);   // (q;q)_k
  den *= poch_mod(mono(Rat(-1), 0, 1), k, 1);                  // (-x;q)_k
  den *= poch_mod(mono(Rat(1), 1 + m, 2), k, 1);               // (q^{1+m}x^2;q)_k
  return RationalFunction(std::move(num), std::move(den));
}

RationalFunction dixon_limit_sum(std::int64_t m) {
  if (m < 0) throw std::invalid_argument("dixon_limit_sum: negative m");
  // common denominator (q;q)_m (-x;q)_m (q^{1+m}x^2;q)_m
  BivariateLaurent sum;
  for (std::int64_t k = 0; k <= m; ++k) {
    BivariateLaurent t = poch_mod(mono(Rat(1), 0, 2), k, 1);
    t *= poch_mod(mono(Rat(-1), 1, 1), k, 1);
    t *= poch_mod(mono(Rat(1), -m, 0), k, 1);
    for (std::int64_t j = k; j < m; ++j) {
      t.mul_binomial(Rat(-1), 1 + j, 0);      // rest of (q;q)_m
      t.mul_binomial(Rat(1), j, 1);           // rest of (-x;q)_m
      t.mul_binomial(Rat(-1), 1 + m + j, 2);  // rest of (q^{1+m}x^2;q)_m
    }
    t.mul_monomial(sign_pow(k), tri(k) + (1 + m) * k, k);
    sum += t;
  }
  BivariateLaurent den = poch_mod(mono(Rat(1), 1, 0), m, 1);
  den *= poch_mod(mono(Rat(-1), 0, 1), m, 1);
  den *= poch_mod(mono(Rat(1), 1 + m, 2), m, 1);
  return RationalFunction(std::move(sum), std::move(den));
}

VerificationReport verify_dixon_limit(std::int64_t m) {
  const auto t0 = Clock::now();
  const RationalFunction sum = dixon_limit_sum(m);
  const RationalFunction rhs{poch_mod(mono(Rat(1), 1, 2), m, 1),
                             poch_mod(mono(Rat(1), 1, 1), m, 1)};
  return poly_compare_report(IdentityId::dixon_limit, Params{{"m", m}},
                             sum.num() * rhs.den(), rhs.num() * sum.den(), t0);
}

VerificationReport verify_dixon_term_match(std::int64_t m, std::int64_t k) {
  if (m < 0 || k < 0 || k > m)
    throw std::invalid_argument("verify_dixon_term_match: need 0 <= k <= m");
  const auto t0 = Clock::now();
  const RationalFunction lhs = finite_quintuple_summand(m, k);
  const RationalFunction rhs =
      dixon_limit_summand(m, k) * RationalFunction{poch_mod(mono(Rat(1), 1, 1), m, 1),
                                                   poch_mod(mono(Rat(1), 1, 2), m, 1)};
  return poly_compare_report(IdentityId::dixon_term_match, Params{{"m", m}, {"k", k}},
                             lhs.num() * rhs.den(), rhs.num() * lhs.den(), t0);
}

}  // namespace qident

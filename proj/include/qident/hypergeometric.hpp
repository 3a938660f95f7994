// Terminating basic hypergeometric sums evaluated exactly at rational
// points. Parameters live in three symbols: q, x, and a free parameter M,
// so bases and the argument are monomials with an extra M-exponent.
#pragma once

#include "qident/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qident {

struct ParamMonomial {
  Rat coeff;
  std::int64_t q_exp = 0;
  std::int64_t x_exp = 0;
  std::int64_t M_exp = 0;
};

std::string param_monomial_to_string(const ParamMonomial& p);
Rat param_monomial_eval(const ParamMonomial& p, const Rat& q0, const Rat& x0,
                        const Rat& M0);

// Sum_{k=0}^{length} prod_i (a_i;q)_k / [(q;q)_k prod_j (b_j;q)_k] * z^k.
// The plain convention with no extra (-1)^k q^C(k,2) factor: exactly the
// balanced r = s+1 case.
struct HyperSum {
  std::vector<ParamMonomial> num_bases;
  std::vector<ParamMonomial> den_bases;
  ParamMonomial argument;
  std::int64_t length = 0;  // inclusive termination bound
};

// A specialized denominator factor 1 - b*q^k vanished; `k` is the q-power at
// which the linear factor hit zero and `factor` names the parameter.
struct PoleError : std::domain_error {
  PoleError(const std::string& factor_desc, std::int64_t at_k);
  std::string factor;
  std::int64_t k;
};

// (a; q)_n numerically, n >= 0 (std::invalid_argument otherwise).
Rat poch_eval(const Rat& a, const Rat& q, std::int64_t n);

// Exact value of the sum at (q0, x0, M0), term ratios computed
// incrementally. Throws PoleError when a denominator factor vanishes.
Rat qhyper_eval(const HyperSum& h, const Rat& q0, const Rat& x0, const Rat& M0);

}  // namespace qident

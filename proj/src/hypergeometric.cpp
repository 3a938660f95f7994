#include "qident/hypergeometric.hpp"

namespace qident {

std::string param_monomial_to_string(const ParamMonomial& p) {
  std::string out = rat_to_string(p.coeff);
  auto piece = [&out](const char* var, std::int64_t e) {
    if (e == 0) return;
    out += "*";
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
  };
  piece("q", p.q_exp);
  piece("x", p.x_exp);
  piece("M", p.M_exp);
  return out;
}

Rat param_monomial_eval(const ParamMonomial& p, const Rat& q0, const Rat& x0,
                        const Rat& M0) {
  return p.coeff * rat_pow(q0, p.q_exp) * rat_pow(x0, p.x_exp) * rat_pow(M0, p.M_exp);
}

PoleError::PoleError(const std::string& factor_desc, std::int64_t at_k)
    : std::domain_error("qhyper_eval: factor (1 - " + factor_desc +
                        "*q^k) vanishes at k=" + std::to_string(at_k)),
      factor(factor_desc),
      k(at_k) {}

Rat poch_eval(const Rat& a, const Rat& q, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("poch_eval: negative length");
  Rat out(1), qj(1);
  for (std::int64_t j = 0; j < n; ++j) {
    out *= Rat(1) - a * qj;
    qj *= q;
  }
  return out;
}

Rat qhyper_eval(const HyperSum& h, const Rat& q0, const Rat& x0, const Rat& M0) {
  if (h.length < 0) throw std::invalid_argument("qhyper_eval: negative length");
  std::vector<Rat> num_vals, den_vals;
  num_vals.reserve(h.num_bases.size());
  den_vals.reserve(h.den_bases.size());
  for (const auto& b : h.num_bases) num_vals.push_back(param_monomial_eval(b, q0, x0, M0));
  for (const auto& b : h.den_bases) den_vals.push_back(param_monomial_eval(b, q0, x0, M0));
  const Rat z = param_monomial_eval(h.argument, q0, x0, M0);

  Rat sum(1), term(1), qk(1);  // qk = q0^k
  for (std::int64_t k = 0; k < h.length; ++k) {
    for (const Rat& a : num_vals) term *= Rat(1) - a * qk;
    const Rat qfac = Rat(1) - q0 * qk;
    if (qfac == 0) throw PoleError("q", k);
    term /= qfac;
    for (std::size_t j = 0; j < den_vals.size(); ++j) {
      const Rat dfac = Rat(1) - den_vals[j] * qk;
      if (dfac == 0) throw PoleError(param_monomial_to_string(h.den_bases[j]), k);
      term /= dfac;
    }
    term *= z;
    sum += term;
    qk *= q0;
  }
  return sum;
}

}  // namespace qident

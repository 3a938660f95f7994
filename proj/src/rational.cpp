#include "qident/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace qident {

Rat make_rat(std::int64_t p, std::int64_t r) {
  if (r == 0) throw std::domain_error("make_rat: zero denominator");
  Rat v(static_cast<long>(p), static_cast<long>(r));
  v.canonicalize();
  return v;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_int(std::string_view s) {
  std::string_view body = s;
  bool neg = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    neg = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!all_digits(body))
    throw std::invalid_argument("rat_from_string: bad integer '" + std::string(s) + "'");
  mpz_class v(std::string(body), 10);
  return neg ? mpz_class(-v) : v;
}

}  // namespace

Rat rat_from_string(std::string_view s) {
  auto slash = s.find('/');
  mpz_class num, den;
  if (slash == std::string_view::npos) {
    num = parse_int(s);
    den = 1;
  } else {
    num = parse_int(s.substr(0, slash));
    den = parse_int(s.substr(slash + 1));
    if (den == 0)
      throw std::invalid_argument("rat_from_string: zero denominator in '" + std::string(s) + "'");
  }
  Rat v(num, den);
  v.canonicalize();
  return v;
}

std::string rat_to_string(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rat rat_pow(const Rat& base, std::int64_t e) {
  if (e == 0) return Rat(1);
  if (base == 0) {
    if (e < 0) throw std::domain_error("rat_pow: zero base with negative exponent");
    return Rat(0);
  }
  const auto n = static_cast<unsigned long>(e < 0 ? -e : e);
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), n);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), n);
  if (e < 0) {
    mpq_inv(r.get_mpq_t(), r.get_mpq_t());
  }
  return r;
}

}  // namespace qident

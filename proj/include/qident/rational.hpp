// Exact rational scalars. Thin helpers around GMP's mpq_class so the rest of
// the library never has to remember that mpq_class(p, r) does not reduce.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace qident {

using Rat = mpq_class;

// p/r in lowest terms with positive denominator. Throws std::domain_error
// when r == 0.
Rat make_rat(std::int64_t p, std::int64_t r = 1);

// Parses "p" or "p/r" (optional leading '-'). Throws std::invalid_argument on
// malformed input or a zero denominator.
Rat rat_from_string(std::string_view s);

// Canonical rendering: "p" when the denominator is 1, otherwise "p/r".
std::string rat_to_string(const Rat& v);

// Exact integer power. Throws std::domain_error for 0^e with e < 0.
Rat rat_pow(const Rat& base, std::int64_t e);

}  // namespace qident

// Structured verification results: which identity, at which parameters,
// pass/fail, a first-discrepancy witness on failure, and size metrics.
#pragma once

#include "qident/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace qident {

enum class IdentityId {
  finite_quintuple,
  bilateral,
  substitution_relation,
  quintuple_series,
  product_relation,
  qdixon_sampled,
  dixon_limit,
  dixon_term_match,
};

// Kebab-case name used in all serialized output.
std::string_view identity_name(IdentityId id);

// First coefficient mismatch, in sorted (q_exp, x_exp) order, of the two
// compared polynomials (cross-multiplied for rational-function checks).
struct CoeffWitness {
  std::int64_t q_exp = 0;
  std::int64_t x_exp = 0;
  Rat lhs;
  Rat rhs;
};

struct SamplePoint {
  Rat q, x, M;
};

struct SampleWitness {
  SamplePoint point;
  Rat lhs;
  Rat rhs;
};

using Witness = std::variant<CoeffWitness, SampleWitness>;

struct Metrics {
  std::int64_t terms = 0;      // compared polynomial terms, or sample count
  std::int64_t max_q_deg = 0;
  std::int64_t max_x_deg = 0;
  double elapsed_ms = 0.0;
};

using ParamValue = std::variant<std::int64_t, std::string>;

struct VerificationReport {
  IdentityId identity = IdentityId::finite_quintuple;
  // insertion-ordered; values fully determine the computation
  std::vector<std::pair<std::string, ParamValue>> params;
  bool pass = false;
  std::optional<Witness> witness;  // present whenever pass is false
  Metrics metrics;
};

}  // namespace qident

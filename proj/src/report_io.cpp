#include "qident/report_io.hpp"

#include <json.hpp>
#include <ostream>
#include <sstream>
#include <variant>

namespace qident {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string param_to_string(const ParamValue& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  return std::get<std::string>(v);
}

ordered_json witness_to_json(const Witness& w) {
  ordered_json j;
  if (const auto* c = std::get_if<CoeffWitness>(&w)) {
    j["q_exp"] = c->q_exp;
    j["x_exp"] = c->x_exp;
    j["lhs"] = rat_to_string(c->lhs);
    j["rhs"] = rat_to_string(c->rhs);
  } else {
    const auto& s = std::get<SampleWitness>(w);
    j["q"] = rat_to_string(s.point.q);
    j["x"] = rat_to_string(s.point.x);
    j["M"] = rat_to_string(s.point.M);
    j["lhs"] = rat_to_string(s.lhs);
    j["rhs"] = rat_to_string(s.rhs);
  }
  return j;
}

std::string witness_to_text(const Witness& w) {
  if (const auto* c = std::get_if<CoeffWitness>(&w)) {
    return "witness q^" + std::to_string(c->q_exp) + "*x^" + std::to_string(c->x_exp) +
           ": lhs=" + rat_to_string(c->lhs) + " rhs=" + rat_to_string(c->rhs);
  }
  const auto& s = std::get<SampleWitness>(w);
  return "witness q=" + rat_to_string(s.point.q) + " x=" + rat_to_string(s.point.x) +
         " M=" + rat_to_string(s.point.M) + ": lhs=" + rat_to_string(s.lhs) +
         " rhs=" + rat_to_string(s.rhs);
}

std::string format_ms(double ms) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(1);
  os << ms;
  return os.str();
}

}  // namespace

std::string_view identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::finite_quintuple: return "finite-quintuple";
    case IdentityId::bilateral: return "bilateral";
    case IdentityId::substitution_relation: return "substitution-relation";
    case IdentityId::quintuple_series: return "quintuple-series";
    case IdentityId::product_relation: return "product-relation";
    case IdentityId::qdixon_sampled: return "qdixon-sampled";
    case IdentityId::dixon_limit: return "dixon-limit";
    case IdentityId::dixon_term_match: return "dixon-term-match";
  }
  return "unknown";
}

bool output_format_from_name(std::string_view name, OutputFormat& out) {
  if (name == "text") out = OutputFormat::text;
  else if (name == "json") out = OutputFormat::json;
  else if (name == "csv") out = OutputFormat::csv;
  else return false;
  return true;
}

std::string report_to_json_line(const VerificationReport& rep, bool include_timing) {
  ordered_json j;
  j["identity"] = std::string(identity_name(rep.identity));
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : rep.params) {
    if (const auto* i = std::get_if<std::int64_t>(&v)) params[k] = *i;
    else params[k] = std::get<std::string>(v);
  }
  j["params"] = std::move(params);
  j["status"] = rep.pass ? "pass" : "fail";
  j["witness"] = rep.witness ? witness_to_json(*rep.witness) : ordered_json(nullptr);
  ordered_json metrics;
  metrics["terms"] = rep.metrics.terms;
  metrics["max_q_deg"] = rep.metrics.max_q_deg;
  metrics["max_x_deg"] = rep.metrics.max_x_deg;
  if (include_timing) metrics["elapsed_ms"] = rep.metrics.elapsed_ms;
  j["metrics"] = std::move(metrics);
  return j.dump();
}

std::string report_to_text(const VerificationReport& rep, bool include_timing) {
  std::string line = rep.pass ? "[PASS] " : "[FAIL] ";
  line += identity_name(rep.identity);
  for (const auto& [k, v] : rep.params) line += " " + k + "=" + param_to_string(v);
  line += " | terms=" + std::to_string(rep.metrics.terms) +
          " max_q_deg=" + std::to_string(rep.metrics.max_q_deg) +
          " max_x_deg=" + std::to_string(rep.metrics.max_x_deg);
  if (rep.witness) line += " | " + witness_to_text(*rep.witness);
  if (include_timing) line += " | " + format_ms(rep.metrics.elapsed_ms) + " ms";
  return line;
}

void write_report(std::ostream& os, const VerificationReport& rep, OutputFormat fmt,
                  bool include_timing) {
  if (fmt == OutputFormat::json) os << report_to_json_line(rep, include_timing) << '\n';
  else os << report_to_text(rep, include_timing) << '\n';
}

void write_expansion(std::ostream& os, const BivariateLaurent& poly, OutputFormat fmt) {
  if (fmt == OutputFormat::csv) os << "q_exp,x_exp,coeff\n";
  for (const auto& t : poly.terms()) {
    switch (fmt) {
      case OutputFormat::text:
        os << "q^" << t.q_exp << " x^" << t.x_exp << ": " << rat_to_string(t.coeff)
           << '\n';
        break;
      case OutputFormat::csv:
        os << t.q_exp << ',' << t.x_exp << ',' << rat_to_string(t.coeff) << '\n';
        break;
      case OutputFormat::json: {
        ordered_json j;
        j["q_exp"] = t.q_exp;
        j["x_exp"] = t.x_exp;
        j["coeff"] = rat_to_string(t.coeff);
        os << j.dump() << '\n';
        break;
      }
    }
  }
}

void write_coeff(std::ostream& os, std::int64_t q_exp, std::int64_t x_exp,
                 const Rat& coeff, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::text:
      os << rat_to_string(coeff) << '\n';
      break;
    case OutputFormat::csv:
      os << "q_exp,x_exp,coeff\n"
         << q_exp << ',' << x_exp << ',' << rat_to_string(coeff) << '\n';
      break;
    case OutputFormat::json: {
      ordered_json j;
      j["q_exp"] = q_exp;
      j["x_exp"] = x_exp;
      j["coeff"] = rat_to_string(coeff);
      os << j.dump() << '\n';
      break;
    }
  }
}

}  // namespace qident

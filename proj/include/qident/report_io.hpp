// Report serialization: one line per check, either human-readable text or a
// compact JSON object (newline-delimited when streamed). Also the coefficient
// emitters behind `expand` and `coeff`.
#pragma once

#include <iosfwd>
#include <string>

#include "qident/laurent.hpp"
#include "qident/report.hpp"

namespace qident {

enum class OutputFormat { text, json, csv };

// "text" | "json" | "csv"; returns false on anything else.
bool output_format_from_name(std::string_view name, OutputFormat& out);

// Compact single-line JSON object:
//   {"identity":...,"params":{...},"status":"pass"|"fail",
//    "witness":{...}|null,"metrics":{...}}
// Rationals are exact "p/r" strings (denominator 1 prints as plain "p").
// With include_timing false the metrics omit elapsed_ms.
std::string report_to_json_line(const VerificationReport& rep, bool include_timing);

// "[PASS] finite-quintuple m=3 | terms=92 max_q_deg=21 max_x_deg=14 | 0.4 ms"
std::string report_to_text(const VerificationReport& rep, bool include_timing);

void write_report(std::ostream& os, const VerificationReport& rep, OutputFormat fmt,
                  bool include_timing);

// One record per monomial in canonical (q_exp, x_exp) order. csv carries a
// "q_exp,x_exp,coeff" header; json emits one object per line.
void write_expansion(std::ostream& os, const BivariateLaurent& poly, OutputFormat fmt);

// Single-coefficient record in the same shapes.
void write_coeff(std::ostream& os, std::int64_t q_exp, std::int64_t x_exp,
                 const Rat& coeff, OutputFormat fmt);

}  // namespace qident

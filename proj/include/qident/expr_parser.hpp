// Parser and canonical printer for the bracket notation used on the command
// line, e.g. "[q,x,q/x;q] [q*x^2,q/x^2;q^2]". Grammar:
//
//   exprs    := bracket { ws bracket } ;
//   bracket  := "[" base { "," base } ";" "q" [ "^" posint ] "]" ;
//   base     := [ "-" ] factor { ("*" | "/") factor } ;
//   factor   := "q" [ "^" int ] | "x" [ "^" int ] | int [ "/" posint ] ;
//
// "/" between factors multiplies by the inverse monomial, so q/x = q*x^-1.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qident/qfactorial.hpp"

namespace qident {

// Syntax or range problem in an expression string; `column` is 1-based.
struct ParseError : std::runtime_error {
  ParseError(std::string what, std::size_t column_)
      : std::runtime_error(std::move(what)), column(column_) {}
  std::size_t column;
};

// Parses a whitespace-separated sequence of brackets. Rejects, with a
// ParseError carrying the offending column: malformed syntax, a zero
// modulus exponent, and a base whose coefficient is zero.
std::vector<ProductSpec> parse_product_expr(std::string_view src);

// Canonical printers; parse_product_expr(render(specs)) == specs whenever
// every base is nonzero. Bases print as '*'-joined factors with explicit
// exponents ("3/2*q^2*x^-1"), the modulus as ";q" or ";q^d".
std::string render(const ProductSpec& spec);
std::string render(const std::vector<ProductSpec>& specs);

}  // namespace qident

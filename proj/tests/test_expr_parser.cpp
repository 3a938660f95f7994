#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "qident/expr_parser.hpp"
#include "qident/truncated_series.hpp"
#include "test_util.hpp"

using namespace qident;

namespace {

Monomial mono(Rat c, std::int64_t qe, std::int64_t xe) {
  return Monomial{std::move(c), qe, xe};
}

std::size_t column_of(const char* src) {
  try {
    parse_product_expr(src);
  } catch (const ParseError& e) {
    return e.column;
  }
  FAIL("expected ParseError for ", src);
  return 0;
}

}  // namespace

TEST_CASE("single brackets parse to the expected specs") {
  auto specs = parse_product_expr("[q,x,q/x;q]");
  REQUIRE(specs.size() == 1);
  CHECK(specs[0] ==
        ProductSpec{{mono(Rat(1), 1, 0), mono(Rat(1), 0, 1), mono(Rat(1), 1, -1)}, 1});

  specs = parse_product_expr("[q*x^2,q/x^2;q^2]");
  REQUIRE(specs.size() == 1);
  CHECK(specs[0] == ProductSpec{{mono(Rat(1), 1, 2), mono(Rat(1), 1, -2)}, 2});

  specs = parse_product_expr("[-x;q]");
  CHECK(specs[0] == ProductSpec{{mono(Rat(-1), 0, 1)}, 1});

  specs = parse_product_expr("[3/2*q^-2;q^3]");
  CHECK(specs[0] == ProductSpec{{mono(make_rat(3, 2), -2, 0)}, 3});

  specs = parse_product_expr("[q^2/x/x,5;q]");
  CHECK(specs[0] == ProductSpec{{mono(Rat(1), 2, -2), mono(Rat(5), 0, 0)}, 1});
}

TEST_CASE("bracket sequences split on whitespace") {
  const auto specs = parse_product_expr("[q,x,q/x;q] \t [q*x^2,q/x^2;q^2]");
  REQUIRE(specs.size() == 2);
  CHECK(specs[0].bases.size() == 3);
  CHECK(specs[1].modulus == 2);
  CHECK(parse_product_expr("  [q;q]  ").size() == 1);
}

TEST_CASE("division binds as inverse monomial") {
  const auto specs = parse_product_expr("[q/x,1/2,q^3/x^-2;q]");
  REQUIRE(specs[0].bases.size() == 3);
  CHECK(specs[0].bases[0] == mono(Rat(1), 1, -1));
  CHECK(specs[0].bases[1] == mono(make_rat(1, 2), 0, 0));
  CHECK(specs[0].bases[2] == mono(Rat(1), 3, 2));
}

TEST_CASE("syntax errors carry 1-based columns") {
  CHECK(column_of("") == 1);
  CHECK(column_of("   ") == 4);
  CHECK(column_of("[x;q") == 5);       // unterminated bracket
  CHECK(column_of("x;q]") == 1);       // missing opening bracket
  CHECK(column_of("[;q]") == 2);       // missing base
  CHECK(column_of("[x q]") == 3);      // ws inside bracket
  CHECK(column_of("[x,;q]") == 4);     // dangling comma
  CHECK(column_of("[x;p]") == 4);      // base letter must be q
  CHECK(column_of("[x;q^0]") == 6);    // zero modulus
  CHECK(column_of("[x;q^-2]") == 6);   // negative modulus (posint required)
  CHECK(column_of("[0;q]") == 2);      // zero-coefficient base
  CHECK(column_of("[2*0*x;q]") == 2);  // zero product
  CHECK(column_of("[q/0;q]") == 3);    // inverse of zero
  CHECK(column_of("[x;q]extra") == 6); // trailing garbage
  CHECK(column_of("[x^;q]") == 4);     // ^ without digits
  CHECK(column_of("[99999999999999999999*x;q]") > 1);  // over the integer cap
}

TEST_CASE("renderer is canonical and parse o render is the identity") {
  const ProductSpec quint1{{mono(Rat(1), 1, 0), mono(Rat(1), 0, 1), mono(Rat(1), 1, -1)}, 1};
  const ProductSpec quint2{{mono(Rat(1), 1, 2), mono(Rat(1), 1, -2)}, 2};
  CHECK(render(quint1) == "[q,x,q*x^-1;q]");
  CHECK(render(quint2) == "[q*x^2,q*x^-2;q^2]");
  CHECK(render(std::vector<ProductSpec>{quint1, quint2}) ==
        "[q,x,q*x^-1;q] [q*x^2,q*x^-2;q^2]");
  CHECK(render(ProductSpec{{mono(make_rat(-3, 2), 0, 0)}, 5}) == "[-3/2;q^5]");
  CHECK(render(ProductSpec{{mono(Rat(-1), 2, 0)}, 1}) == "[-q^2;q]");

  qtest::Rng rng(4242);
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<ProductSpec> specs;
    const int n_specs = static_cast<int>(rng.range(1, 3));
    for (int s = 0; s < n_specs; ++s) {
      ProductSpec spec;
      spec.modulus = rng.range(1, 4);
      const int n_bases = static_cast<int>(rng.range(1, 4));
      for (int b = 0; b < n_bases; ++b)
        spec.bases.push_back(
            mono(rng.nonzero_rat(7, 5), rng.range(-6, 6), rng.range(-6, 6)));
      specs.push_back(std::move(spec));
    }
    CHECK(parse_product_expr(render(specs)) == specs);
  }
}

TEST_CASE("parsed specs drive the expansion engine") {
  // [q;q] to order 7 is the pentagonal pattern 1 - q - q^2 + q^5 + q^7
  const auto specs = parse_product_expr("[q;q]");
  const auto s = bracket_inf(specs[0], 7);
  CHECK(s.terms() == BivariateLaurent::from_terms({{make_rat(1), 0, 0},
                                                   {make_rat(-1), 1, 0},
                                                   {make_rat(-1), 2, 0},
                                                   {make_rat(1), 5, 0},
                                                   {make_rat(1), 7, 0}}));
}

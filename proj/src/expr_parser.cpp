#include "qident/expr_parser.hpp"

#include <cctype>
#include <utility>

namespace qident {

namespace {

constexpr std::int64_t kIntLimit = 1000000000000LL;  // generous cap, guards overflow

struct Cursor {
  std::string_view src;
  std::size_t pos = 0;

  bool done() const { return pos >= src.size(); }
  char peek() const { return done() ? '\0' : src[pos]; }
  char take() { return src[pos++]; }
  std::size_t column() const { return pos + 1; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at column " + std::to_string(column()), column());
  }

  void expect(char c) {
    if (peek() != c)
      fail(done() ? std::string("expected '") + c + "', found end of input"
                  : std::string("expected '") + c + "'");
    ++pos;
  }

  std::int64_t digits() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a digit");
    std::int64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (take() - '0');
      if (v > kIntLimit) fail("integer too large");
    }
    return v;
  }

  std::int64_t integer() {
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos;
    }
    const std::int64_t v = digits();
    return neg ? -v : v;
  }

  // exponent suffix: "^" int (defaults to 1 when absent)
  std::int64_t exponent() {
    if (peek() != '^') return 1;
    ++pos;
    return integer();
  }
};

// factor := "q" ["^" int] | "x" ["^" int] | int ["/" posint]
Monomial parse_factor(Cursor& c) {
  if (c.peek() == 'q') {
    ++c.pos;
    return Monomial{Rat(1), c.exponent(), 0};
  }
  if (c.peek() == 'x') {
    ++c.pos;
    return Monomial{Rat(1), 0, c.exponent()};
  }
  if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    const std::int64_t num = c.digits();
    std::int64_t den = 1;
    // only consume "/" when a denominator digit follows; otherwise it is the
    // base-level inverse operator
    if (c.peek() == '/' && c.pos + 1 < c.src.size() &&
        std::isdigit(static_cast<unsigned char>(c.src[c.pos + 1]))) {
      ++c.pos;
      den = c.digits();
      if (den == 0) c.fail("zero denominator");
    }
    return Monomial{make_rat(num, den), 0, 0};
  }
  c.fail("expected a factor (q, x, or an integer)");
}

Monomial inverse(const Monomial& m, std::size_t op_column) {
  if (m.coeff == 0)
    throw ParseError("division by a zero factor at column " + std::to_string(op_column),
                     op_column);
  return Monomial{1 / m.coeff, -m.q_exp, -m.x_exp};
}

// base := ["-"] factor { ("*" | "/") factor }
Monomial parse_base(Cursor& c) {
  const std::size_t start_col = c.column();
  bool neg = false;
  if (c.peek() == '-') {
    neg = true;
    ++c.pos;
  }
  Monomial acc = parse_factor(c);
  while (c.peek() == '*' || c.peek() == '/') {
    const char op = c.take();
    const std::size_t op_col = c.column() - 1;
    Monomial f = parse_factor(c);
    if (op == '/') f = inverse(f, op_col);
    acc.coeff *= f.coeff;
    acc.q_exp += f.q_exp;
    acc.x_exp += f.x_exp;
  }
  if (neg) acc.coeff = -acc.coeff;
  if (acc.coeff == 0)
    throw ParseError("base with zero coefficient at column " + std::to_string(start_col),
                     start_col);
  return acc;
}

// bracket := "[" base { "," base } ";" "q" ["^" posint] "]"
ProductSpec parse_bracket(Cursor& c) {
  c.expect('[');
  ProductSpec spec;
  spec.bases.push_back(parse_base(c));
  while (c.peek() == ',') {
    ++c.pos;
    spec.bases.push_back(parse_base(c));
  }
  c.expect(';');
  c.expect('q');
  if (c.peek() == '^') {
    ++c.pos;
    const std::size_t col = c.column();
    spec.modulus = c.digits();
    if (spec.modulus == 0)
      throw ParseError("zero modulus at column " + std::to_string(col), col);
  } else {
    spec.modulus = 1;
  }
  c.expect(']');
  return spec;
}

void rstrip_ws(Cursor& c) {
  while (!c.done() && std::isspace(static_cast<unsigned char>(c.peek()))) ++c.pos;
}

std::string render_exp(const char* var, std::int64_t e) {
  std::string s = var;
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

}  // namespace

std::vector<ProductSpec> parse_product_expr(std::string_view src) {
  Cursor c{src};
  rstrip_ws(c);
  if (c.done()) c.fail("empty expression, expected '['");
  std::vector<ProductSpec> specs;
  specs.push_back(parse_bracket(c));
  for (;;) {
    const std::size_t before = c.pos;
    rstrip_ws(c);
    if (c.done()) break;
    if (c.pos == before) c.fail("unexpected input after bracket");
    specs.push_back(parse_bracket(c));
  }
  return specs;
}

std::string render(const ProductSpec& spec) {
  std::string out = "[";
  bool first_base = true;
  for (const auto& b : spec.bases) {
    if (!first_base) out += ",";
    first_base = false;
    std::string body;
    if (b.q_exp != 0) body = render_exp("q", b.q_exp);
    if (b.x_exp != 0) {
      if (!body.empty()) body += "*";
      body += render_exp("x", b.x_exp);
    }
    const Rat mag = b.coeff < 0 ? Rat(-b.coeff) : b.coeff;
    std::string head;
    if (b.coeff < 0) head = "-";
    if (mag != 1 || body.empty()) {
      head += rat_to_string(mag);
      if (!body.empty()) head += "*";
    }
    out += head + body;
  }
  out += ";q";
  if (spec.modulus != 1) out += "^" + std::to_string(spec.modulus);
  out += "]";
  return out;
}

std::string render(const std::vector<ProductSpec>& specs) {
  std::string out;
  for (const auto& s : specs) {
    if (!out.empty()) out += " ";
    out += render(s);
  }
  return out;
}

}  // namespace qident

#include "amoeba/parse.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

namespace amoeba {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  LaurentPolynomial run() {
    LaurentPolynomial p = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    if (p.empty()) {
      throw Error(ErrorCode::EmptyPolynomial,
                  "polynomial is empty after combining like terms");
    }
    return p;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(pos_, "syntax error at position " + std::to_string(pos_) +
                                ": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!consume(c)) fail(std::string("expected '") + c + "' (" + what + ")");
  }

  LaurentPolynomial parse_expr() {
    LaurentPolynomial sum;
    bool negate = false;
    if (consume('-')) negate = true;
    else consume('+');
    LaurentPolynomial term = parse_term();
    sum = negate ? -term : term;
    for (;;) {
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        LaurentPolynomial next = parse_term();
        sum = (c == '+') ? sum + next : sum - next;
      } else {
        return sum;
      }
    }
  }

  LaurentPolynomial parse_term() {
    LaurentPolynomial prod = parse_factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        prod = prod * parse_factor();
      } else if (starts_primary(c)) {
        prod = prod * parse_factor();  // adjacency multiplies
      } else {
        return prod;
      }
    }
  }

  static bool starts_primary(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '(' ||
           c == 'x' || c == 'y' || c == 'i' || c == 'e';
  }

  LaurentPolynomial parse_factor() {
    LaurentPolynomial base = parse_primary();
    if (peek() == '^') {
      ++pos_;
      int n = parse_integer();
      return power(base, n);
    }
    return base;
  }

  LaurentPolynomial power(const LaurentPolynomial& base, int n) {
    if (n == 0) return LaurentPolynomial::constant(1.0);
    if (n < 0) {
      if (base.term_count() != 1) fail("negative power of a non-monomial");
      const auto& [e, c] = *base.terms().begin();
      MonomialExponent inv{-e.j, -e.k};
      return power(LaurentPolynomial::monomial(inv, 1.0 / c), -n);
    }
    LaurentPolynomial out = LaurentPolynomial::constant(1.0);
    LaurentPolynomial sq = base;
    int m = n;
    while (m > 0) {
      if (m & 1) out = out * sq;
      m >>= 1;
      if (m > 0) sq = sq * sq;
    }
    return out;
  }

  int parse_integer() {
    skip_ws();
    bool paren = consume('(');
    skip_ws();
    int sign = 1;
    if (consume('-')) sign = -1;
    else consume('+');
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected an integer exponent");
    int value = 0;
    std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (paren) expect(')', "closing exponent parenthesis");
    return sign * value;
  }

  LaurentPolynomial parse_primary() {
    char c = peek();
    if (c == '(') return parse_paren();
    if (c == 'x') {
      ++pos_;
      return LaurentPolynomial::monomial({1, 0}, 1.0);
    }
    if (c == 'y') {
      ++pos_;
      return LaurentPolynomial::monomial({0, 1}, 1.0);
    }
    if (c == 'i') {
      ++pos_;
      return LaurentPolynomial::constant(Complex(0.0, 1.0));
    }
    if (c == 'e') return parse_euler();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    fail("expected a term");
  }

  // '(' expr ')' as a group, or '(re,im)' as a complex literal.
  LaurentPolynomial parse_paren() {
    expect('(', "group");
    LaurentPolynomial first = parse_expr();
    if (consume(',')) {
      LaurentPolynomial second = parse_expr();
      expect(')', "complex literal");
      return LaurentPolynomial::constant(
          Complex(constant_value(first, "real part"), constant_value(second, "imaginary part")));
    }
    expect(')', "closing parenthesis");
    return first;
  }

  double constant_value(const LaurentPolynomial& p, const char* what) {
    if (p.empty()) return 0.0;
    if (p.term_count() != 1 || p.terms().begin()->first != MonomialExponent{0, 0} ||
        p.terms().begin()->second.imag() != 0.0) {
      fail(std::string(what) + " of a complex literal must be a real constant");
    }
    return p.terms().begin()->second.real();
  }

  // e^{i p pi}, p a decimal or a fraction a/b.
  LaurentPolynomial parse_euler() {
    expect('e', "euler form");
    expect('^', "euler form");
    expect('{', "euler form");
    expect('i', "euler form");
    skip_ws();
    double p = 1.0;
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '+') {
      p = scan_decimal(/*allow_scientific=*/false);
      if (consume('/')) {
        double q = scan_decimal(/*allow_scientific=*/false);
        if (q == 0.0) fail("zero denominator in phase fraction");
        p /= q;
      }
    }
    skip_ws();
    if (!(text_.substr(pos_).rfind("pi", 0) == 0)) fail("expected 'pi' in e^{i p pi}");
    pos_ += 2;
    expect('}', "euler form");
    return LaurentPolynomial::constant(unit_phase_pi(p));
  }

  // decimal, optionally scientific, optionally followed by 'i'.
  LaurentPolynomial parse_number() {
    double v = scan_decimal(/*allow_scientific=*/true);
    skip_ws();
    // <decimal>i form; do not swallow the 'e' of e^{...}.
    if (pos_ < text_.size() && text_[pos_] == 'i') {
      ++pos_;
      return LaurentPolynomial::constant(Complex(0.0, v));
    }
    return LaurentPolynomial::constant(v);
  }

  double scan_decimal(bool allow_scientific) {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    bool digits = false;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
      digits = digits || std::isdigit(static_cast<unsigned char>(text_[pos_]));
      ++pos_;
    }
    if (!digits) fail("expected a number");
    if (allow_scientific && pos_ < text_.size() &&
        (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      // Scientific exponent only when followed by digits (possibly signed);
      // otherwise the 'e' belongs to an e^{i p pi} factor.
      std::size_t probe = pos_ + 1;
      if (probe < text_.size() && (text_[probe] == '+' || text_[probe] == '-')) ++probe;
      if (probe < text_.size() && std::isdigit(static_cast<unsigned char>(text_[probe]))) {
        pos_ = probe;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
    }
    double value = 0.0;
    auto res = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (res.ec != std::errc()) fail("malformed number");
    return value;
  }
};

}  // namespace

LaurentPolynomial parse_polynomial(std::string_view text) {
  return Parser(text).run();
}

}  // namespace amoeba

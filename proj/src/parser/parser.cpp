#include "lnd/parser/parser.hpp"

#include <cctype>
#include <limits>

namespace lnd {

ParseError::ParseError(std::size_t position, std::string message, std::string fragment)
    : Error("parse error at offset " + std::to_string(position) + ": " + message +
            (fragment.empty() ? std::string() : " near '" + fragment + "'")),
      position_(position),
      message_(std::move(message)),
      fragment_(std::move(fragment)) {}

namespace {

// Parenthesized groups are expanded eagerly; these bounds keep hostile input
// from exhausting the stack or memory.
constexpr unsigned kMaxNesting = 64;
constexpr std::uint32_t kMaxGroupExponent = 64;

class Parser {
 public:
  Parser(std::string_view text, const VarSet& vars) : text_(text), vars_(vars) {}

  Polynomial run() {
    skip_ws();
    if (at_end()) fail("empty input");
    Polynomial p = poly();
    skip_ws();
    if (!at_end()) {
      if (peek() == ')') fail("unbalanced ')'");
      fail("expected '+' or '-'");
    }
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(std::string message) const { fail_at(pos_, std::move(message)); }

  [[noreturn]] void fail_at(std::size_t at, std::string message) const {
    const std::size_t p = std::min(at, text_.size());
    throw ParseError(p, std::move(message), std::string(text_.substr(p, 12)));
  }

  static bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
  static bool is_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

  std::string_view digits() {
    const std::size_t start = pos_;
    while (!at_end() && is_digit(peek())) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  std::uint32_t exponent() {
    // Caller consumed '^'.
    skip_ws();
    const std::size_t start = pos_;
    const std::string_view d = digits();
    if (d.empty()) fail("expected exponent after '^'");
    std::uint64_t value = 0;
    for (char c : d) {
      value = value * 10 + static_cast<std::uint64_t>(c - '0');
      if (value > std::numeric_limits<std::uint32_t>::max()) fail_at(start, "exponent too large");
    }
    return static_cast<std::uint32_t>(value);
  }

  Polynomial poly() {
    skip_ws();
    int sign = 1;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    Polynomial acc = term();
    if (sign < 0) acc = -acc;
    for (;;) {
      skip_ws();
      if (at_end() || (peek() != '+' && peek() != '-')) break;
      const bool minus = peek() == '-';
      ++pos_;
      Polynomial t = term();
      if (minus)
        acc -= t;
      else
        acc += t;
    }
    return acc;
  }

  Polynomial term() {
    skip_ws();
    if (at_end()) fail("expected term");
    Polynomial acc = Polynomial::constant(vars_, BigRational(1));
    bool any = false;
    if (is_digit(peek())) {
      const std::string_view num = digits();
      std::string_view den = "1";
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_ws();
        den = digits();
        if (den.empty()) fail("expected denominator after '/'");
        if (den.find_first_not_of('0') == std::string_view::npos)
          fail_at(pos_ - den.size(), "zero denominator");
      }
      acc = Polynomial::constant(
          vars_, BigRational(mpz_class(std::string(num), 10), mpz_class(std::string(den), 10)));
      any = true;
    }
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c == '*') {
        if (!any) fail("expected term before '*'");
        ++pos_;
        skip_ws();
        if (at_end() || !(is_letter(peek()) || peek() == '(')) fail("expected factor after '*'");
        c = peek();
      }
      if (is_letter(c) || c == '(') {
        acc = acc * factor();
        any = true;
        continue;
      }
      break;
    }
    if (!any) {
      if (!at_end() && peek() == ')') fail("expected term before ')'");
      fail(at_end() ? "expected term" : "unexpected character");
    }
    return acc;
  }

  Polynomial factor() {
    const std::size_t start = pos_;
    const char c = peek();
    if (c == '(') {
      if (++depth_ > kMaxNesting) fail("parentheses nested too deeply");
      ++pos_;
      Polynomial inner = poly();
      skip_ws();
      if (at_end() || peek() != ')') fail("expected ')'");
      ++pos_;
      --depth_;
      std::uint32_t e = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        const std::size_t epos = pos_;
        e = exponent();
        if (e > kMaxGroupExponent) fail_at(epos, "exponent of parenthesized group too large");
      }
      return poly_pow(inner, e);
    }
    ++pos_;
    const auto index = vars_.find(c);
    if (!index) throw UnknownVariable(std::string(1, c), start);
    Monomial m;
    m[*index] = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      m[*index] = exponent();
    }
    return Polynomial::monomial(vars_, m, BigRational(1));
  }

  std::string_view text_;
  const VarSet& vars_;
  std::size_t pos_ = 0;
  unsigned depth_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const VarSet& vars) {
  return Parser(text, vars).run();
}

}  // namespace lnd

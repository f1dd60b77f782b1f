#include "lnd/arith/big_rational.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace lnd {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

BigRational::BigRational(std::int64_t n) : value_(static_cast<long>(n)) {}

BigRational::BigRational(std::int64_t num, std::int64_t den)
    : BigRational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))) {}

BigRational::BigRational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("BigRational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

BigRational::BigRational(mpq_class q) : value_(std::move(q)) {
  if (value_.get_den() == 0) throw std::invalid_argument("BigRational: zero denominator");
  value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                               : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw std::invalid_argument("BigRational: malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("BigRational: zero denominator");
  if (negative) n = -n;
  return BigRational(n, d);
}

BigRational BigRational::abs() const { return BigRational(mpq_class(::abs(value_))); }

BigRational BigRational::reciprocal() const {
  if (is_zero()) throw std::domain_error("BigRational: reciprocal of zero");
  return BigRational(mpq_class(value_.get_den(), value_.get_num()));
}

std::string BigRational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BigRational& BigRational::operator+=(const BigRational& o) {
  value_ += o.value_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& o) {
  value_ -= o.value_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& o) {
  value_ *= o.value_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
  value_ /= o.value_;
  return *this;
}

BigRational BigRational::operator-() const { return BigRational(mpq_class(-value_)); }

BigRational rat_add(const BigRational& a, const BigRational& b) { return a + b; }

BigRational rat_mul(const BigRational& a, const BigRational& b) { return a * b; }

BigRational inv_factorial(unsigned i) {
  mpz_class f = 1;
  for (unsigned k = 2; k <= i; ++k) f *= k;
  return BigRational(mpz_class(1), f);
}

std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.to_string(); }

}  // namespace lnd

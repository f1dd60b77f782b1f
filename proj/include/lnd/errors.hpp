#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lnd {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands were built over different variable sets.
class VarSetMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownVariable : public Error {
 public:
  explicit UnknownVariable(std::string name, std::size_t position = npos)
      : Error("unknown variable '" + name + "'" +
              (position == npos ? std::string() : " at offset " + std::to_string(position))),
        name_(std::move(name)),
        position_(position) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  const std::string& name() const { return name_; }
  std::size_t position() const { return position_; }

 private:
  std::string name_;
  std::size_t position_;
};

/// Exact division by a variable power failed; `term` is the first offending
/// term in canonical order.
class NotDivisible : public Error {
 public:
  explicit NotDivisible(std::string term)
      : Error("not divisible: term '" + term + "'"), term_(std::move(term)) {}
  const std::string& term() const { return term_; }

 private:
  std::string term_;
};

class ExponentOverflow : public Error {
 public:
  using Error::Error;
};

}  // namespace lnd

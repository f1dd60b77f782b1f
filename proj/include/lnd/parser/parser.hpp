#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "lnd/errors.hpp"
#include "lnd/poly/polynomial.hpp"

namespace lnd {

/// Malformed polynomial text. `position` is a byte offset into the input
/// (equal to the input length for premature end of input).
class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string message, std::string fragment);

  std::size_t position() const { return position_; }
  const std::string& message() const { return message_; }
  const std::string& fragment() const { return fragment_; }

 private:
  std::size_t position_;
  std::string message_;
  std::string fragment_;
};

/// Parses the polynomial grammar
///
///   poly   := sign? term (('+'|'-') term)*
///   term   := coeff? factor* | factor+     (optional '*' between factors)
///   coeff  := int ('/' int)?
///   factor := var ('^' int)? | '(' poly ')' ('^' int)?
///
/// Whitespace may separate tokens. Juxtaposition is multiplication. Throws
/// ParseError on malformed input and UnknownVariable for letters outside
/// `vars`.
Polynomial parse_polynomial(std::string_view text, const VarSet& vars);

}  // namespace lnd

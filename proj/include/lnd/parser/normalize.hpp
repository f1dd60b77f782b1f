#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lnd {

/// One rewrite performed by normalize_appendix. `position` is the byte
/// offset of `original` in the text handed to the rule that fired.
struct NormalizationWarning {
  std::string rule;
  std::size_t position = 0;
  std::string original;
  std::string replacement;

  friend bool operator==(const NormalizationWarning&, const NormalizationWarning&) = default;
};

struct Normalized {
  std::string text;
  std::vector<NormalizationWarning> warnings;
};

/// Rewrites typeset polynomial text into the parser grammar:
///
///  - `\frac{A}{B}` / `\dfrac{A}{B}` with a single-term A become `c/B m`
///    (coefficient c of A over B, followed by A's monomial part);
///  - `^{digits}` loses its braces (an unterminated `^{digits` too);
///  - a letter immediately followed by digits (`u6`) becomes `u^6`;
///  - whitespace runs collapse to one space and the ends are trimmed.
///
/// Every rewrite except whitespace cleanup yields a warning. The function is
/// idempotent.
Normalized normalize_appendix(std::string_view text);

std::string to_string(const NormalizationWarning& w);

}  // namespace lnd

#pragma once

#include "lnd/poly/polynomial.hpp"

namespace lnd {

/// Element numerator / var^power of the localization at a single variable
/// (the variable t in the standard instance).
struct LocalizedAtT {
  Polynomial numerator;
  unsigned power = 0;
  char var = 't';

  /// Cross-multiplied equality: a/t^k == b/t^m iff a t^m == b t^k.
  friend bool operator==(const LocalizedAtT& a, const LocalizedAtT& b);
};

/// Cancels the common power of `var` so that power == 0 or var does not
/// divide the numerator.
LocalizedAtT localize_reduce(const Polynomial& numerator, unsigned power, char var = 't');

}  // namespace lnd

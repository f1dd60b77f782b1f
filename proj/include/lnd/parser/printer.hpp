#pragma once

#include <string>

#include "lnd/poly/polynomial.hpp"

namespace lnd {

/// Canonical text: grlex-descending terms, reduced fractions, `^` for
/// exponents, juxtaposition for products, no spaces. Zero prints as "0".
std::string print_polynomial(const Polynomial& p);

/// "t^2x^3", or "1" for the unit monomial.
std::string print_monomial(const VarSet& vars, const Monomial& m);

/// A single term in canonical form, e.g. "-4/3t^2x^3".
std::string print_term(const VarSet& vars, const Term& t);

}  // namespace lnd

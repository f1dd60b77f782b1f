#include "lnd/poly/localized.hpp"

#include <algorithm>
#include <limits>

namespace lnd {

LocalizedAtT localize_reduce(const Polynomial& numerator, unsigned power, char var) {
  const std::size_t i = numerator.varset().index(var);
  if (numerator.is_zero()) return LocalizedAtT{numerator, 0, var};
  std::uint32_t common = std::numeric_limits<std::uint32_t>::max();
  for (const Term& t : numerator.terms()) common = std::min(common, t.mono[i]);
  const unsigned cancel = std::min<unsigned>(common, power);
  return LocalizedAtT{divide_exact_by_var(numerator, var, cancel), power - cancel, var};
}

bool operator==(const LocalizedAtT& a, const LocalizedAtT& b) {
  if (a.var != b.var) return false;
  const VarSet& vars = a.numerator.varset();
  Monomial ta, tb;
  ta[vars.index(a.var)] = b.power;
  tb[vars.index(b.var)] = a.power;
  return a.numerator * Polynomial::monomial(vars, ta, BigRational(1)) ==
         b.numerator * Polynomial::monomial(b.numerator.varset(), tb, BigRational(1));
}

}  // namespace lnd

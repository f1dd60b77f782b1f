#include "lnd/parser/printer.hpp"

namespace lnd {

namespace {

void append_monomial(std::string& out, const VarSet& vars, const Monomial& m) {
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (m[i] == 0) continue;
    out += vars.name(i);
    if (m[i] > 1) {
      out += '^';
      out += std::to_string(m[i]);
    }
  }
}

// Appends |coeff| * mono without a sign.
void append_unsigned_term(std::string& out, const VarSet& vars, const Term& t) {
  const BigRational mag = t.coeff.abs();
  if (t.mono.is_one()) {
    out += mag.to_string();
    return;
  }
  if (!mag.is_one()) out += mag.to_string();
  append_monomial(out, vars, t.mono);
}

}  // namespace

std::string print_monomial(const VarSet& vars, const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  append_monomial(out, vars, m);
  return out;
}

std::string print_term(const VarSet& vars, const Term& t) {
  std::string out;
  if (t.coeff.sign() < 0) out += '-';
  append_unsigned_term(out, vars, t);
  return out;
}

std::string print_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : p.terms()) {
    if (t.coeff.sign() < 0)
      out += '-';
    else if (!first)
      out += '+';
    append_unsigned_term(out, p.varset(), t);
    first = false;
  }
  return out;
}

}  // namespace lnd

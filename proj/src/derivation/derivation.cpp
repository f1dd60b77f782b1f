#include "lnd/derivation/derivation.hpp"

#include <algorithm>

namespace lnd {

Derivation::Derivation(VarSet vars, const std::map<char, Polynomial>& images) : vars_(std::move(vars)) {
  images_.assign(vars_.size(), Polynomial(vars_));
  for (const auto& [name, image] : images) {
    require_same_varset(vars_, image.varset(), "Derivation");
    images_[vars_.index(name)] = image;
  }
}

Derivation Derivation::zero(VarSet vars) { return Derivation(std::move(vars), {}); }

bool Derivation::is_zero() const {
  return std::all_of(images_.begin(), images_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

Polynomial apply(const Derivation& d, const Polynomial& p) {
  require_same_varset(d.varset(), p.varset(), "apply");
  const std::size_t n = d.varset().size();
  TermAccumulator acc(d.varset());
  mpq_class c;
  for (const Term& t : p.terms()) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint32_t e = t.mono[i];
      if (e == 0 || d.image_at(i).is_zero()) continue;
      Monomial lowered = t.mono;
      lowered[i] = e - 1;
      c = t.coeff.raw() * e;
      acc.add_scaled(d.image_at(i), lowered, c);
    }
  }
  return std::move(acc).finish();
}

Polynomial iterate(const Derivation& d, const Polynomial& p, unsigned r) {
  require_same_varset(d.varset(), p.varset(), "iterate");
  Polynomial cur = p;
  for (unsigned i = 0; i < r && !cur.is_zero(); ++i) cur = apply(d, cur);
  return cur;
}

std::vector<Polynomial> nonzero_iterates(const Derivation& d, const Polynomial& p, unsigned cap) {
  require_same_varset(d.varset(), p.varset(), "nilpotency_index");
  std::vector<Polynomial> out;
  Polynomial cur = p;
  while (!cur.is_zero()) {
    if (out.size() >= cap) throw CapExceeded(cap);
    Polynomial next = apply(d, cur);
    out.push_back(std::move(cur));
    cur = std::move(next);
  }
  return out;
}

unsigned nilpotency_index(const Derivation& d, const Polynomial& p, unsigned cap) {
  return static_cast<unsigned>(nonzero_iterates(d, p, cap).size());
}

NilpotencyReport is_locally_nilpotent(const Derivation& d, unsigned cap) {
  NilpotencyReport report;
  report.nilpotent = true;
  const VarSet& vars = d.varset();
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const char v = vars.name(i);
    try {
      report.indices[v] = nilpotency_index(d, Polynomial::variable(vars, v), cap);
    } catch (const CapExceeded&) {
      report.nilpotent = false;
      if (!report.reason.empty()) report.reason += "; ";
      report.reason += std::string("D^r(") + v + ") != 0 for all r <= " + std::to_string(cap);
    }
  }
  return report;
}

}  // namespace lnd

#include "lnd/derivation/dixmier.hpp"

#include <stdexcept>

#include "lnd/parser/printer.hpp"

namespace lnd {

namespace {

// sum_i weight(i) * terms[i] * s^i by Horner's rule, so only products with
// the (small) slice are ever formed.
template <class Weight>
Polynomial horner(const std::vector<Polynomial>& terms, const Polynomial& s, Weight weight) {
  Polynomial acc(s.varset());
  for (std::size_t i = terms.size(); i-- > 0;) {
    acc = acc * s;
    acc += terms[i] * weight(static_cast<unsigned>(i));
  }
  return acc;
}

BigRational alternating_inv_factorial(unsigned i) {
  BigRational c = inv_factorial(i);
  return i % 2 == 0 ? c : -c;
}

}  // namespace

NotASlice::NotASlice(Polynomial actual)
    : Error("not a slice: D(s) = " + print_polynomial(actual)), actual_(std::move(actual)) {}

SliceCertificate verify_slice(const Derivation& d, const Polynomial& s, unsigned cap) {
  Polynomial ds = apply(d, s);
  if (ds != Polynomial::constant(d.varset(), BigRational(1))) throw NotASlice(std::move(ds));
  unsigned bound = 1;
  const VarSet& vars = d.varset();
  for (std::size_t i = 0; i < vars.size(); ++i)
    bound = std::max(bound, nilpotency_index(d, Polynomial::variable(vars, vars.name(i)), cap));
  return SliceCertificate(s, bound);
}

Polynomial dixmier(const Derivation& d, const SliceCertificate& cert, const Polynomial& p,
                   unsigned cap) {
  return horner(nonzero_iterates(d, p, cap), cert.slice(), alternating_inv_factorial);
}

Polynomial dixmier_closed_form(const Derivation& d, const Polynomial& p, const VarSet& extended,
                               char symbol, unsigned cap) {
  std::vector<Polynomial> iterates = nonzero_iterates(d, p, cap);
  for (Polynomial& q : iterates) q = change_varset(q, extended);
  return horner(iterates, Polynomial::variable(extended, symbol), alternating_inv_factorial);
}

KernelGenerators kernel_generators(const Derivation& d, const SliceCertificate& cert) {
  std::map<char, Polynomial> images;
  const VarSet& vars = d.varset();
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const char v = vars.name(i);
    Polynomial phi = dixmier(d, cert, Polynomial::variable(vars, v));
    if (!apply(d, phi).is_zero())
      throw std::logic_error(std::string("dixmier image of ") + v + " is not in the kernel");
    images.emplace(v, std::move(phi));
  }
  return KernelGenerators(std::move(images));
}

KernelGenerators kernel_generators(const Derivation& d) {
  if (!d.is_zero())
    throw std::invalid_argument("kernel_generators: a nonzero derivation needs a slice certificate");
  std::map<char, Polynomial> images;
  const VarSet& vars = d.varset();
  for (std::size_t i = 0; i < vars.size(); ++i)
    images.emplace(vars.name(i), Polynomial::variable(vars, vars.name(i)));
  return KernelGenerators(std::move(images));
}

Polynomial taylor_reconstruct(const Derivation& d, const SliceCertificate& cert, const Polynomial& p,
                              unsigned cap) {
  std::vector<Polynomial> iterates = nonzero_iterates(d, p, cap);
  for (Polynomial& q : iterates) q = dixmier(d, cert, q, cap);
  return horner(iterates, cert.slice(), [](unsigned i) { return inv_factorial(i); });
}

}  // namespace lnd

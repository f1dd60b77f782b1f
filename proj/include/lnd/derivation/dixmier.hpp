#pragma once

#include <map>

#include "lnd/derivation/derivation.hpp"

namespace lnd {

/// D(s) evaluated to something other than 1.
class NotASlice : public Error {
 public:
  explicit NotASlice(Polynomial actual);
  const Polynomial& actual() const { return actual_; }

 private:
  Polynomial actual_;
};

/// Proof that `slice()` satisfies D(slice) = 1 for a derivation that is
/// nilpotent on every variable. Only verify_slice creates one.
class SliceCertificate {
 public:
  const Polynomial& slice() const { return slice_; }
  /// Largest nilpotency index observed on the variables.
  unsigned bound() const { return bound_; }

 private:
  friend SliceCertificate verify_slice(const Derivation&, const Polynomial&, unsigned);
  SliceCertificate(Polynomial s, unsigned bound) : slice_(std::move(s)), bound_(bound) {}

  Polynomial slice_;
  unsigned bound_;
};

/// Checks D(s) = 1 (NotASlice otherwise) and bounds the nilpotency of D on
/// the variables (CapExceeded if some variable is not killed within `cap`).
SliceCertificate verify_slice(const Derivation& d, const Polynomial& s,
                              unsigned cap = kDefaultNilpotencyCap);

/// The Dixmier map phi(p) = sum_i (-1)^i / i! D^i(p) s^i, truncated at the
/// nilpotency index of p. The result lies in the kernel of D.
Polynomial dixmier(const Derivation& d, const SliceCertificate& cert, const Polynomial& p,
                   unsigned cap = kDefaultNilpotencyCap);

/// The same series with the slice kept as the formal variable `symbol` of
/// `extended` (a superset of D's variables). Useful for comparing against
/// closed forms written in terms of s.
Polynomial dixmier_closed_form(const Derivation& d, const Polynomial& p, const VarSet& extended,
                               char symbol, unsigned cap = kDefaultNilpotencyCap);

/// The Dixmier images of all variables; each is checked to be in ker D.
class KernelGenerators {
 public:
  const Polynomial& image(char var) const { return images_.at(var); }
  const std::map<char, Polynomial>& images() const { return images_; }

 private:
  friend KernelGenerators kernel_generators(const Derivation&, const SliceCertificate&);
  friend KernelGenerators kernel_generators(const Derivation&);
  explicit KernelGenerators(std::map<char, Polynomial> images) : images_(std::move(images)) {}

  std::map<char, Polynomial> images_;
};

KernelGenerators kernel_generators(const Derivation& d, const SliceCertificate& cert);

/// Zero-derivation convention: every element is in the kernel, so the
/// generators are the variables themselves. Throws std::invalid_argument for
/// a nonzero derivation (those need a slice certificate).
KernelGenerators kernel_generators(const Derivation& d);

/// sum_i (1/i!) phi(D^i(p)) s^i, which equals p whenever s is a slice.
Polynomial taylor_reconstruct(const Derivation& d, const SliceCertificate& cert, const Polynomial& p,
                              unsigned cap = kDefaultNilpotencyCap);

}  // namespace lnd

#pragma once

#include <map>
#include <string>
#include <vector>

#include "lnd/errors.hpp"
#include "lnd/poly/polynomial.hpp"

namespace lnd {

/// Default bound on nilpotency searches.
inline constexpr unsigned kDefaultNilpotencyCap = 64;

/// A derivation of the polynomial ring over `varset`, determined by the
/// image of each variable. Unlisted variables map to zero.
class Derivation {
 public:
  Derivation(VarSet vars, const std::map<char, Polynomial>& images);

  static Derivation zero(VarSet vars);

  const VarSet& varset() const { return vars_; }
  const Polynomial& image(char var) const { return images_[vars_.index(var)]; }
  const Polynomial& image_at(std::size_t i) const { return images_[i]; }
  bool is_zero() const;

 private:
  VarSet vars_;
  std::vector<Polynomial> images_;
};

/// No r <= cap with D^r(p) = 0.
class CapExceeded : public Error {
 public:
  explicit CapExceeded(unsigned cap)
      : Error("nilpotency index exceeds cap " + std::to_string(cap)), cap_(cap) {}
  unsigned cap() const { return cap_; }

 private:
  unsigned cap_;
};

/// D(p) = sum over variables v of D(v) * dp/dv.
Polynomial apply(const Derivation& d, const Polynomial& p);

/// D^r(p); iterate(d, p, 0) == p.
Polynomial iterate(const Derivation& d, const Polynomial& p, unsigned r);

/// Smallest r with D^r(p) = 0 (0 for p = 0). Throws CapExceeded.
unsigned nilpotency_index(const Derivation& d, const Polynomial& p,
                          unsigned cap = kDefaultNilpotencyCap);

/// p, D(p), ..., D^(k-1)(p) where k is the nilpotency index of p.
std::vector<Polynomial> nonzero_iterates(const Derivation& d, const Polynomial& p,
                                         unsigned cap = kDefaultNilpotencyCap);

struct NilpotencyReport {
  bool nilpotent = false;
  /// Index per variable; variables that exceeded the cap are absent.
  std::map<char, unsigned> indices;
  std::string reason;
};

/// Local nilpotency certified on the generators: on a polynomial ring it is
/// enough that every variable is killed by some power of D.
NilpotencyReport is_locally_nilpotent(const Derivation& d, unsigned cap = kDefaultNilpotencyCap);

}  // namespace lnd

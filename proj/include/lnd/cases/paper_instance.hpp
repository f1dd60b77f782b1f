#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lnd/derivation/dixmier.hpp"

namespace lnd {

/// An identity that must hold by construction did not; indicates an
/// arithmetic bug rather than a problem with the printed formulas.
class ConstructionFailure : public Error {
 public:
  using Error::Error;
};

/// Variables X, Y, Z of the left inverse F.
VarSet shastri_varset();

/// Raw ingredients of the instance. Defaults reproduce the trefoil
/// embedding; tests mutate them to check that the suite notices.
struct InstanceInputs {
  Polynomial f;  // over t,u,x,y,z (a polynomial in u)
  Polynomial g;
  Polynomial h;
  Polynomial F;  // over X,Y,Z
  /// Replaces f'(u)d/dx + g'(u)d/dy + h'(u)d/dz + t d/du when set.
  std::optional<Derivation> derivation;
  /// Replaces the slice computed from F when set.
  std::optional<Polynomial> slice;
};

InstanceInputs default_inputs();

struct PaperInstance {
  Polynomial f, g, h;
  Polynomial F;
  Polynomial vx, vy, vz;  // f(u) - xt, g(u) - yt, h(u) - zt
  Polynomial s;
  Derivation D;
  std::optional<SliceCertificate> cert;
  std::optional<KernelGenerators> phi;
  /// Why `cert`/`phi` are missing or how `s` had to be approximated.
  std::vector<std::string> notes;
};

/// Builds every object without insisting that the identities hold: when
/// u - F(v) is not divisible by t, s is the quotient of its t-divisible part;
/// when s is not a slice, `cert` and `phi` stay empty.
PaperInstance assemble_instance(const InstanceInputs& inputs);

/// The paper's instance, with F(f,g,h) = u, D(v) = 0, D(s) = 1 and
/// D(phi(v)) = 0 all checked. Throws ConstructionFailure.
PaperInstance build_paper_instance();

/// phi_t .. phi_z for the generators and "s" for the slice.
std::optional<Polynomial> computed_target(const PaperInstance& inst, const std::string& target);

}  // namespace lnd

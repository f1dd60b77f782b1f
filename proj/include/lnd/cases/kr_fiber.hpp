#pragma once

#include <map>
#include <vector>

#include "lnd/cases/report.hpp"
#include "lnd/poly/polynomial.hpp"

namespace lnd {

/// Value and gradient of a hypersurface equation at a rational point.
struct PointProbe {
  BigRational value;
  std::vector<BigRational> gradient;  // in the polynomial's variable order
  bool on_hypersurface = false;       // value == 0
  bool singular = false;              // on it, with vanishing gradient
};

/// Jacobian criterion at one point; every variable of `f` needs a value.
PointProbe probe_point(const Polynomial& f, const std::map<char, BigRational>& point);

/// The Koras-Russell threefold -x^2 z + y^2 + x + t^3 over t, x, y, z.
Polynomial kr_threefold();

/// Its fiber over x = 0, y^2 + t^3, as a polynomial in t, y, z.
Polynomial kr_special_fiber();

/// Exhibits the origin as a singular point of the special fiber.
CheckResult kr_fiber_singularity_check();

}  // namespace lnd

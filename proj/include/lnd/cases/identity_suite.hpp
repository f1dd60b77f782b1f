#pragma once

#include "lnd/cases/paper_instance.hpp"
#include "lnd/cases/report.hpp"

namespace lnd {

/// Runs the fixed list of exact identity checks on `inst`, in name order:
///
///   01 F(f,g,h) = u
///   02 D(t) = D(v_x) = D(v_y) = D(v_z) = 0
///   03 t s = u - F(v_x, v_y, v_z)
///   04 D(s) = 1
///   05 D(phi(v)) = 0 for every variable v
///   06 taylor_reconstruct recovers t, u, x, y, z
///   07 u = F(v) + t s and x = (f(u) - v_x) / t (likewise y, z) in A_t
///   08 phi(u) = u modulo t
///   09 nilpotency indices {t:1, u:2, x:4, y:5, z:6}
///
/// Failures become fail-status results; nothing throws.
VerificationReport run_identity_suite(const PaperInstance& inst);

/// Number of checks run_identity_suite produces.
inline constexpr std::size_t kIdentityCheckCount = 9;

}  // namespace lnd

#include "lnd/cases/kr_fiber.hpp"

#include <algorithm>

#include "lnd/parser/parser.hpp"
#include "lnd/parser/printer.hpp"

namespace lnd {

PointProbe probe_point(const Polynomial& f, const std::map<char, BigRational>& point) {
  PointProbe probe;
  probe.value = evaluate(f, point);
  const VarSet& vars = f.varset();
  for (std::size_t i = 0; i < vars.size(); ++i)
    probe.gradient.push_back(evaluate(partial_derivative(f, vars.name(i)), point));
  probe.on_hypersurface = probe.value.is_zero();
  probe.singular = probe.on_hypersurface &&
                   std::all_of(probe.gradient.begin(), probe.gradient.end(),
                               [](const BigRational& g) { return g.is_zero(); });
  return probe;
}

Polynomial kr_threefold() { return parse_polynomial("-x^2z+y^2+x+t^3", VarSet("txyz")); }

Polynomial kr_special_fiber() {
  return change_varset(set_var_zero(kr_threefold(), 'x'), VarSet("tyz"));
}

CheckResult kr_fiber_singularity_check() {
  const auto start = std::chrono::steady_clock::now();
  const Polynomial fiber = kr_special_fiber();
  const PointProbe p = probe_point(fiber, {{'t', 0}, {'y', 0}, {'z', 0}});
  std::string grad;
  for (const BigRational& g : p.gradient) grad += (grad.empty() ? "" : ", ") + g.to_string();
  CheckResult r;
  r.name = "kr_fiber_singular_point";
  r.status = p.singular ? CheckStatus::pass : CheckStatus::fail;
  r.detail = print_polynomial(fiber) + " at t=y=z=0: value " + p.value.to_string() + ", gradient (" +
             grad + ")" + (p.singular ? ", singular" : ", not singular");
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

}  // namespace lnd

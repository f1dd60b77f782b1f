#include "lnd/cases/paper_instance.hpp"

#include "lnd/parser/parser.hpp"
#include "lnd/parser/printer.hpp"

namespace lnd {

namespace {

Polynomial standard_poly(std::string_view text) { return parse_polynomial(text, VarSet::standard()); }

Polynomial var(char v) { return Polynomial::variable(VarSet::standard(), v); }

}  // namespace

VarSet shastri_varset() {
  static const VarSet kXYZ("XYZ");
  return kXYZ;
}

InstanceInputs default_inputs() {
  return InstanceInputs{
      .f = standard_poly("u^3-3u"),
      .g = standard_poly("u^4-4u^2"),
      .h = standard_poly("u^5-10u"),
      .F = parse_polynomial("YZ-X^3-5XY+2Z-7X", shastri_varset()),
      .derivation = std::nullopt,
      .slice = std::nullopt,
  };
}

PaperInstance assemble_instance(const InstanceInputs& in) {
  const Polynomial t = var('t');
  const Polynomial u = var('u');
  Polynomial vx = in.f - var('x') * t;
  Polynomial vy = in.g - var('y') * t;
  Polynomial vz = in.h - var('z') * t;

  Derivation D = in.derivation ? *in.derivation
                               : Derivation(VarSet::standard(), {{'x', partial_derivative(in.f, 'u')},
                                                              {'y', partial_derivative(in.g, 'u')},
                                                              {'z', partial_derivative(in.h, 'u')},
                                                              {'u', t}});
  std::vector<std::string> notes;

  Polynomial s(VarSet::standard());
  if (in.slice) {
    s = *in.slice;
  } else {
    const Polynomial numerator = u - substitute(in.F, {{'X', vx}, {'Y', vy}, {'Z', vz}});
    try {
      s = divide_exact_by_var(numerator, 't', 1);
    } catch (const NotDivisible& e) {
      notes.push_back("u - F(v) is not divisible by t (" + e.term() +
                      "); s is the quotient of its t-divisible part");
      s = divide_exact_by_var(numerator - set_var_zero(numerator, 't'), 't', 1);
    }
  }

  std::optional<SliceCertificate> cert;
  std::optional<KernelGenerators> phi;
  try {
    cert = verify_slice(D, s);
    phi = kernel_generators(D, *cert);
  } catch (const NotASlice& e) {
    notes.push_back(e.what());
  } catch (const CapExceeded& e) {
    notes.push_back(e.what());
  }

  return PaperInstance{
      .f = in.f,
      .g = in.g,
      .h = in.h,
      .F = in.F,
      .vx = std::move(vx),
      .vy = std::move(vy),
      .vz = std::move(vz),
      .s = std::move(s),
      .D = std::move(D),
      .cert = std::move(cert),
      .phi = std::move(phi),
      .notes = std::move(notes),
  };
}

PaperInstance build_paper_instance() {
  PaperInstance inst = assemble_instance(default_inputs());
  const Polynomial u = var('u');
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw ConstructionFailure("instance: " + what);
  };
  const Polynomial composed = substitute(inst.F, {{'X', inst.f}, {'Y', inst.g}, {'Z', inst.h}});
  require(composed == u, "F(f,g,h) = " + print_polynomial(composed) + ", expected u");
  for (const auto* v : {&inst.vx, &inst.vy, &inst.vz})
    require(apply(inst.D, *v).is_zero(), "D(" + print_polynomial(*v) + ") != 0");
  require(inst.cert.has_value(), inst.notes.empty() ? "no slice" : inst.notes.front());
  require(inst.phi.has_value(), "no kernel generators");
  for (const auto& [name, image] : inst.phi->images())
    require(apply(inst.D, image).is_zero(), std::string("D(phi(") + name + ")) != 0");
  return inst;
}

std::optional<Polynomial> computed_target(const PaperInstance& inst, const std::string& target) {
  if (target == "s") return inst.s;
  if (target.size() == 5 && target.starts_with("phi_") && inst.phi) {
    const auto& images = inst.phi->images();
    if (auto it = images.find(target[4]); it != images.end()) return it->second;
  }
  return std::nullopt;
}

}  // namespace lnd

#pragma once

#include <string>
#include <vector>

#include "lnd/cases/paper_instance.hpp"
#include "lnd/parser/parser.hpp"

namespace lnd::testing {

struct Mutation {
  std::string label;
  InstanceInputs inputs;
};

// Ten single-coefficient perturbations of f, g, h and F.
inline std::vector<Mutation> coefficient_mutations() {
  const VarSet P = VarSet::standard();
  auto with = [&](std::string label, auto edit) {
    InstanceInputs in = default_inputs();
    edit(in);
    return Mutation{std::move(label), std::move(in)};
  };
  auto F = [](std::string_view text) { return parse_polynomial(text, shastri_varset()); };
  return {
      with("f: u^3 -> 2u^3", [&](InstanceInputs& in) { in.f = parse_polynomial("2u^3-3u", P); }),
      with("f: -3u -> -2u", [&](InstanceInputs& in) { in.f = parse_polynomial("u^3-2u", P); }),
      with("g: u^4 -> 2u^4", [&](InstanceInputs& in) { in.g = parse_polynomial("2u^4-4u^2", P); }),
      with("g: -4u^2 -> -3u^2", [&](InstanceInputs& in) { in.g = parse_polynomial("u^4-3u^2", P); }),
      with("h: u^5 -> 2u^5", [&](InstanceInputs& in) { in.h = parse_polynomial("2u^5-10u", P); }),
      with("h: -10u -> -9u", [&](InstanceInputs& in) { in.h = parse_polynomial("u^5-9u", P); }),
      with("F: YZ -> 2YZ", [&](InstanceInputs& in) { in.F = F("2YZ-X^3-5XY+2Z-7X"); }),
      with("F: -X^3 -> -2X^3", [&](InstanceInputs& in) { in.F = F("YZ-2X^3-5XY+2Z-7X"); }),
      with("F: -5XY -> -4XY", [&](InstanceInputs& in) { in.F = F("YZ-X^3-4XY+2Z-7X"); }),
      with("F: -7X -> -6X", [&](InstanceInputs& in) { in.F = F("YZ-X^3-5XY+2Z-6X"); }),
  };
}

}  // namespace lnd::testing

#include "lnd/cases/identity_suite.hpp"

#include <algorithm>
#include <functional>

#include "lnd/parser/printer.hpp"
#include "lnd/poly/localized.hpp"

namespace lnd {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::errata:
      return "errata";
  }
  return "unknown";
}

ReportSummary VerificationReport::summary() const {
  ReportSummary s;
  for (const CheckResult& c : checks) {
    switch (c.status) {
      case CheckStatus::pass:
        ++s.pass;
        break;
      case CheckStatus::fail:
        ++s.fail;
        break;
      case CheckStatus::errata:
        ++s.errata;
        break;
    }
  }
  s.errata += errata.size();
  return s;
}

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

using Check = std::function<Outcome()>;

Polynomial var(char v) { return Polynomial::variable(VarSet::standard(), v); }

std::string show(const Polynomial& p) {
  std::string s = print_polynomial(p);
  if (s.size() > 160) s = s.substr(0, 157) + "...";
  return s;
}

Outcome expect_equal(const Polynomial& got, const Polynomial& want, const std::string& what) {
  if (got == want) return {true, what};
  return {false, what + ": got " + show(got) + ", expected " + show(want)};
}

Outcome no_slice(const PaperInstance& inst) {
  std::string why = "no slice certificate";
  if (!inst.notes.empty()) why += " (" + inst.notes.back() + ")";
  return {false, why};
}

Outcome check_inverse(const PaperInstance& inst) {
  return expect_equal(substitute(inst.F, {{'X', inst.f}, {'Y', inst.g}, {'Z', inst.h}}), var('u'),
                      "F(f(u), g(u), h(u)) = u");
}

Outcome check_kernel_membership(const PaperInstance& inst) {
  const std::pair<const char*, const Polynomial*> items[] = {
      {"t", nullptr}, {"v_x", &inst.vx}, {"v_y", &inst.vy}, {"v_z", &inst.vz}};
  const Polynomial t = var('t');
  for (const auto& [name, p] : items) {
    const Polynomial image = apply(inst.D, p ? *p : t);
    if (!image.is_zero()) return {false, std::string("D(") + name + ") = " + show(image)};
  }
  return {true, "D(t) = D(v_x) = D(v_y) = D(v_z) = 0"};
}

Outcome check_slice_definition(const PaperInstance& inst) {
  const Polynomial rhs = var('u') - substitute(inst.F, {{'X', inst.vx}, {'Y', inst.vy}, {'Z', inst.vz}});
  return expect_equal(var('t') * inst.s, rhs, "t s = u - F(v_x, v_y, v_z)");
}

Outcome check_slice(const PaperInstance& inst) {
  return expect_equal(apply(inst.D, inst.s), Polynomial::constant(VarSet::standard(), 1), "D(s) = 1");
}

Outcome check_kernel_annihilation(const PaperInstance& inst) {
  if (!inst.phi) return no_slice(inst);
  for (const auto& [name, image] : inst.phi->images()) {
    const Polynomial d = apply(inst.D, image);
    if (!d.is_zero()) return {false, std::string("D(phi(") + name + ")) = " + show(d)};
  }
  return {true, "D(phi(v)) = 0 for v in t, u, x, y, z"};
}

Outcome check_reconstruction(const PaperInstance& inst) {
  if (!inst.cert) return no_slice(inst);
  for (char v : VarSet::standard().names()) {
    const Polynomial back = taylor_reconstruct(inst.D, *inst.cert, var(v));
    if (back != var(v))
      return {false, std::string("reconstruction of ") + v + " gave " + show(back)};
  }
  return {true, "sum_i phi(D^i(v)) s^i / i! = v for v in t, u, x, y, z"};
}

Outcome check_localization(const PaperInstance& inst) {
  const Polynomial t = var('t');
  const Polynomial Fv = substitute(inst.F, {{'X', inst.vx}, {'Y', inst.vy}, {'Z', inst.vz}});
  struct Witness {
    std::string label;
    LocalizedAtT lhs;
    LocalizedAtT rhs;
  };
  const Witness witnesses[] = {
      {"u = F(v) + t s", localize_reduce(var('u'), 0), localize_reduce(Fv + t * inst.s, 0)},
      {"x = (f(u) - v_x)/t", localize_reduce(var('x'), 0), localize_reduce(inst.f - inst.vx, 1)},
      {"y = (g(u) - v_y)/t", localize_reduce(var('y'), 0), localize_reduce(inst.g - inst.vy, 1)},
      {"z = (h(u) - v_z)/t", localize_reduce(var('z'), 0), localize_reduce(inst.h - inst.vz, 1)},
  };
  for (const Witness& w : witnesses) {
    if (!(w.lhs == w.rhs))
      return {false, w.label + " fails in A_t: " + show(w.rhs.numerator) + " / t^" +
                         std::to_string(w.rhs.power)};
  }
  return {true, "u = F(v) + t s, x = (f(u) - v_x)/t, y = (g(u) - v_y)/t, z = (h(u) - v_z)/t"};
}

Outcome check_mod_t(const PaperInstance& inst) {
  if (!inst.phi) return no_slice(inst);
  return expect_equal(set_var_zero(inst.phi->image('u'), 't'), var('u'), "phi(u) = u mod t");
}

Outcome check_nilpotency(const PaperInstance& inst) {
  const std::pair<char, unsigned> expected[] = {{'t', 1}, {'u', 2}, {'x', 4}, {'y', 5}, {'z', 6}};
  std::string seen;
  bool ok = true;
  for (const auto& [v, want] : expected) {
    unsigned got = 0;
    try {
      got = nilpotency_index(inst.D, var(v));
    } catch (const CapExceeded&) {
      return {false, std::string("index of ") + v + " exceeds cap"};
    }
    if (!seen.empty()) seen += ", ";
    seen += std::string(1, v) + ":" + std::to_string(got);
    ok = ok && got == want;
  }
  return {ok, "indices {" + seen + "}" + (ok ? "" : ", expected {t:1, u:2, x:4, y:5, z:6}")};
}

}  // namespace

VerificationReport run_identity_suite(const PaperInstance& inst) {
  const std::pair<const char*, Outcome (*)(const PaperInstance&)> checks[] = {
      {"01_inverse_identity", check_inverse},
      {"02_kernel_membership", check_kernel_membership},
      {"03_slice_definition", check_slice_definition},
      {"04_slice", check_slice},
      {"05_kernel_annihilation", check_kernel_annihilation},
      {"06_reconstruction", check_reconstruction},
      {"07_localization_witnesses", check_localization},
      {"08_mod_t_witness", check_mod_t},
      {"09_nilpotency_indices", check_nilpotency},
  };
  VerificationReport report;
  for (const auto& [name, fn] : checks) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r{name, CheckStatus::fail, "", {}};
    try {
      Outcome o = fn(inst);
      r.status = o.ok ? CheckStatus::pass : CheckStatus::fail;
      r.detail = std::move(o.detail);
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.elapsed = std::chrono::steady_clock::now() - start;
    report.checks.push_back(std::move(r));
  }
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return report;
}

}  // namespace lnd

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "lnd/cases/identity_suite.hpp"
#include "lnd/cases/kr_fiber.hpp"
#include "lnd/cases/paper_instance.hpp"
#include "lnd/cases/printed_forms.hpp"
#include "lnd/parser/parser.hpp"
#include "lnd/parser/printer.hpp"
#include "lnd/parser/source_form.hpp"
#include "support/mutations.hpp"

namespace {

using namespace lnd;

const VarSet P = VarSet::standard();

Polynomial p(std::string_view text) { return parse_polynomial(text, P); }

const PaperInstance& instance() {
  static const PaperInstance inst = build_paper_instance();
  return inst;
}

const CheckResult& check(const VerificationReport& r, const std::string& name) {
  auto it = std::find_if(r.checks.begin(), r.checks.end(),
                         [&](const CheckResult& c) { return c.name == name; });
  if (it == r.checks.end()) throw std::out_of_range("no check " + name);
  return *it;
}

std::vector<ErrataEntry> diff(const std::string& raw, const std::string& target) {
  return compare_printed_forms(instance(), {make_source_form(raw, "scratch", target)});
}

SourceForm bundled(const std::string& relative) {
  return load_source_file(std::filesystem::path(LND_TEST_DATA_DIR) / relative);
}

TEST(PaperInstanceTest, Construction) {
  const PaperInstance& inst = instance();
  Monomial x;
  x[P.index('x')] = 1;
  EXPECT_EQ(inst.s.coefficient(x), BigRational(-7));
  EXPECT_EQ(evaluate(inst.f, {{'u', 2}}), BigRational(2));
  EXPECT_EQ(apply(inst.D, inst.s), p("1"));
  EXPECT_EQ(inst.s, p("-7x-7u^2x+13u^4x-3u^6x-9tux^2+3tu^3x^2-t^2x^3+5uy-5u^3y+u^5y+5txy+2z-4u^2z+u^4z-tyz"));
  EXPECT_EQ(inst.vx, p("u^3-3u-xt"));
  EXPECT_TRUE(inst.notes.empty());
}

TEST(PaperInstanceTest, Deterministic) {
  const PaperInstance a = build_paper_instance();
  const PaperInstance b = build_paper_instance();
  for (auto field : {&PaperInstance::f, &PaperInstance::g, &PaperInstance::h, &PaperInstance::vx,
                     &PaperInstance::vy, &PaperInstance::vz, &PaperInstance::s})
    EXPECT_EQ(print_polynomial(a.*field), print_polynomial(b.*field));
  for (char v : {'t', 'u', 'x', 'y', 'z'})
    EXPECT_EQ(print_polynomial(a.phi->image(v)), print_polynomial(b.phi->image(v)));
}

TEST(PaperInstanceTest, ComputedTargets) {
  EXPECT_EQ(computed_target(instance(), "s"), instance().s);
  EXPECT_EQ(computed_target(instance(), "phi_t"), p("t"));
  EXPECT_FALSE(computed_target(instance(), "phi_w").has_value());
  EXPECT_FALSE(computed_target(instance(), "psi").has_value());
}

TEST(IdentitySuite, AllChecksPass) {
  const VerificationReport r = run_identity_suite(instance());
  ASSERT_EQ(r.checks.size(), kIdentityCheckCount);
  for (const CheckResult& c : r.checks) EXPECT_EQ(c.status, CheckStatus::pass) << c.name << ": " << c.detail;
  EXPECT_TRUE(std::is_sorted(r.checks.begin(), r.checks.end(),
                             [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; }));
  EXPECT_EQ(r.summary().pass, 9u);
  EXPECT_EQ(r.summary().fail, 0u);
  EXPECT_TRUE(r.all_passed());
}

TEST(IdentitySuite, PerturbedDerivationBreaksKernelMembership) {
  InstanceInputs in = default_inputs();
  in.derivation = Derivation(P, {{'x', p("3u^2-3")}, {'y', p("4u^3-8u")}, {'z', p("5u^4-10")}, {'u', p("t+1")}});
  const VerificationReport r = run_identity_suite(assemble_instance(in));
  EXPECT_EQ(check(r, "02_kernel_membership").status, CheckStatus::fail);
  EXPECT_FALSE(r.all_passed());
}

TEST(IdentitySuite, ShiftedSliceBreaksOnlyTheDefinition) {
  InstanceInputs in = default_inputs();
  in.slice = instance().s + p("1");
  const VerificationReport r = run_identity_suite(assemble_instance(in));
  EXPECT_EQ(check(r, "04_slice").status, CheckStatus::pass);
  EXPECT_EQ(check(r, "03_slice_definition").status, CheckStatus::fail);
}

TEST(IdentitySuite, NonSliceIsReportedNotThrown) {
  InstanceInputs in = default_inputs();
  in.slice = p("u");
  const PaperInstance inst = assemble_instance(in);
  EXPECT_FALSE(inst.cert.has_value());
  const VerificationReport r = run_identity_suite(inst);
  EXPECT_EQ(r.checks.size(), kIdentityCheckCount);
  EXPECT_EQ(check(r, "04_slice").status, CheckStatus::fail);
}

TEST(IdentitySuite, EveryCoefficientMutationIsDetected) {
  const auto mutations = lnd::testing::coefficient_mutations();
  ASSERT_EQ(mutations.size(), 10u);
  for (const auto& m : mutations) {
    const VerificationReport r = run_identity_suite(assemble_instance(m.inputs));
    EXPECT_GE(r.summary().fail, 1u) << m.label;
    EXPECT_EQ(r.checks.size(), kIdentityCheckCount) << m.label;
  }
}

TEST(PrintedForms, ExactMatches) {
  EXPECT_TRUE(diff("t", "phi_t").empty());
  EXPECT_TRUE(diff("x + 3(1-u^2)s + 3tus^2 - t^2s^3", "phi_x").empty());
  EXPECT_TRUE(diff("u - st", "phi_u").empty());
  EXPECT_TRUE(compare_printed_forms(instance(), {bundled("appendix/phi_x.txt")}).empty());
  EXPECT_TRUE(compare_printed_forms(instance(), {bundled("appendix/phi_u.txt")}).empty());
  EXPECT_TRUE(compare_printed_forms(instance(), {bundled("appendix/s.txt")}).empty());
}

TEST(PrintedForms, SectionOneSliceMatchesAfterExponentRepair) {
  const SourceForm s1 = bundled("appendix/s_section1.txt");
  EXPECT_NE(s1.raw.find("3u6x"), std::string::npos);
  const bool flagged = std::any_of(s1.warnings.begin(), s1.warnings.end(), [](const auto& w) {
    return w.original.find("bare-exponent") != std::string::npos;
  });
  EXPECT_TRUE(flagged);
  EXPECT_TRUE(compare_printed_forms(instance(), {s1}).empty());
  // Read literally, u6x would be a different monomial.
  EXPECT_FALSE(diff("-7x-7u^2x+13u^4x-3u^1x-9tux^2+3tu^3x^2-t^2x^3+5uy-5u^3y+u^5y+5txy+2z-4u^2z+u^4z-tyz", "s").empty());
}

TEST(PrintedForms, SignErrorInPhiU) {
  const auto e = diff("u+ts", "phi_u");
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0].printed, "ts");
  EXPECT_EQ(e[0].computed, "-ts");
  EXPECT_EQ(e[0].location, "scratch");
}

TEST(PrintedForms, LemmaPhiYCoefficients) {
  const auto e = compare_printed_forms(instance(), {bundled("closed_forms/phi_y.txt")});
  std::vector<std::string> notes;
  for (const auto& entry : e) notes.push_back(entry.note);
  EXPECT_NE(std::find(notes.begin(), notes.end(), "coefficient of s^2 differs"), notes.end());
  EXPECT_NE(std::find(notes.begin(), notes.end(), "coefficient of s^3 differs"), notes.end());
  EXPECT_NE(std::find(notes.begin(), notes.end(), "coefficient of s^4 differs"), notes.end());
  EXPECT_EQ(std::find(notes.begin(), notes.end(), "coefficient of s^1 differs"), notes.end());
}

TEST(PrintedForms, LemmaPhiZQuarticCoefficient) {
  const auto e = compare_printed_forms(instance(), {bundled("closed_forms/phi_z.txt")});
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0].printed, "10t^3us^4");
  EXPECT_EQ(e[0].computed, "5t^3us^4");
}

TEST(PrintedForms, UnparseableSourceIsOneEntry) {
  const auto e = compare_printed_forms(instance(), {bundled("appendix/phi_y.txt")});
  ASSERT_EQ(e.size(), 1u);
  EXPECT_NE(e[0].note.find("unparseable source"), std::string::npos);
  EXPECT_EQ(e[0].computed, "(not compared)");
}

TEST(PrintedForms, TermLevelDiffOfExpansions) {
  const auto e = diff("u+7tx+5", "phi_u");
  ASSERT_FALSE(e.empty());
  bool absent = false;
  for (const auto& entry : e) absent |= entry.printed == "5" && entry.computed == "0";
  EXPECT_TRUE(absent);
}

TEST(PrintedForms, DeterministicAndSorted) {
  const auto sources = load_source_dir(LND_TEST_DATA_DIR);
  EXPECT_EQ(sources.size(), 16u);
  const auto a = compare_printed_forms(instance(), sources);
  const auto b = compare_printed_forms(instance(), sources);
  EXPECT_EQ(a, b);
  EXPECT_TRUE(std::is_sorted(a.begin(), a.end(), [](const ErrataEntry& x, const ErrataEntry& y) {
    return x.location < y.location;
  }));
  for (const auto& entry : a) EXPECT_NE(entry.printed, entry.computed);
}

TEST(KrFiber, OriginIsSingular) {
  EXPECT_EQ(kr_special_fiber(), parse_polynomial("y^2+t^3", VarSet("tyz")));
  const CheckResult r = kr_fiber_singularity_check();
  EXPECT_EQ(r.status, CheckStatus::pass);
  const PointProbe origin = probe_point(kr_special_fiber(), {{'t', 0}, {'y', 0}, {'z', 0}});
  EXPECT_TRUE(origin.value.is_zero());
  for (const auto& g : origin.gradient) EXPECT_TRUE(g.is_zero());
}

TEST(KrFiber, SmoothControls) {
  const VarSet ty("ty");
  const PointProbe c1 = probe_point(parse_polynomial("y^2+t", ty), {{'t', 0}, {'y', 0}});
  EXPECT_TRUE(c1.on_hypersurface);
  EXPECT_FALSE(c1.singular);
  EXPECT_EQ(c1.gradient, (std::vector<BigRational>{1, 0}));

  const PointProbe c2 = probe_point(parse_polynomial("y^2+t^3", ty), {{'t', -1}, {'y', 1}});
  EXPECT_TRUE(c2.on_hypersurface);
  EXPECT_FALSE(c2.singular);
  EXPECT_EQ(c2.gradient, (std::vector<BigRational>{3, 2}));
}

}  // namespace

#include <gtest/gtest.h>

#include "lnd/cases/paper_instance.hpp"
#include "lnd/errors.hpp"
#include "lnd/parser/parser.hpp"
#include "lnd/parser/printer.hpp"
#include "lnd/poly/localized.hpp"
#include "lnd/poly/polynomial.hpp"
#include "support/generators.hpp"

namespace {

using namespace lnd;

const VarSet P = VarSet::standard();

Polynomial p(std::string_view text) { return parse_polynomial(text, P); }

// Schoolbook product through the generic accumulator, kept apart from the
// packed fast path of operator*.
Polynomial reference_product(const Polynomial& a, const Polynomial& b) {
  TermAccumulator acc(a.varset());
  for (const Term& t : a.terms()) acc.add_scaled(b, t.mono, t.coeff.raw());
  return std::move(acc).finish();
}

TEST(VarSetTest, RejectsBadNames) {
  EXPECT_THROW(VarSet("tt"), std::invalid_argument);
  EXPECT_THROW(VarSet("t1"), std::invalid_argument);
  EXPECT_THROW(VarSet("abcdefghi"), std::invalid_argument);
  EXPECT_THROW(P.index('w'), UnknownVariable);
  EXPECT_EQ(P.index('x'), 2u);
}

TEST(PolynomialTest, Addition) {
  EXPECT_EQ(poly_add(p("u^3-3u"), p("3u")), p("u^3"));
  const Polynomial q = p("t^2x-5/3yz+7");
  EXPECT_EQ(poly_add(q, Polynomial(P)), q);
  EXPECT_TRUE(poly_add(p("u^2"), p("-u^2")).is_zero());
}

TEST(PolynomialTest, Multiplication) {
  EXPECT_EQ(poly_mul(p("1+u"), p("1-u")), p("1-u^2"));
  const Polynomial q = p("t^2x-5/3yz+7");
  EXPECT_EQ(poly_mul(q, p("1")), q);
  EXPECT_TRUE(poly_mul(q, Polynomial(P)).is_zero());
  EXPECT_THROW(poly_mul(q, parse_polynomial("X", VarSet("XYZ"))), VarSetMismatch);
}

TEST(PolynomialTest, SliceTimesTEqualsNumerator) {
  const PaperInstance inst = build_paper_instance();
  const Polynomial rhs = p("u") - substitute(inst.F, {{'X', inst.vx}, {'Y', inst.vy}, {'Z', inst.vz}});
  EXPECT_EQ(poly_mul(p("t"), inst.s), rhs);
}

TEST(PolynomialTest, Powers) {
  EXPECT_EQ(poly_pow(p("u+1"), 2), p("u^2+2u+1"));
  EXPECT_EQ(poly_pow(p("t-1/2x"), 0), p("1"));
  EXPECT_EQ(poly_pow(Polynomial(P), 0), p("1"));
  EXPECT_EQ(poly_pow(p("u+1"), 5), p("u^5+5u^4+10u^3+10u^2+5u+1"));
  const PaperInstance inst = build_paper_instance();
  Monomial x2;
  x2[P.index('x')] = 2;
  EXPECT_EQ(poly_pow(inst.s, 2).coefficient(x2), BigRational(49));
}

TEST(PolynomialTest, PartialDerivatives) {
  EXPECT_EQ(partial_derivative(p("u^3-3u"), 'u'), p("3u^2-3"));
  EXPECT_TRUE(partial_derivative(p("u^3-3u"), 'x').is_zero());
  EXPECT_EQ(partial_derivative(p("u^5-10u"), 'u'), p("5u^4-10"));
  EXPECT_THROW(partial_derivative(p("u"), 'w'), UnknownVariable);
}

TEST(PolynomialTest, Substitution) {
  const VarSet xyz("XYZ");
  const Polynomial F = parse_polynomial("YZ-X^3-5XY+2Z-7X", xyz);
  EXPECT_EQ(substitute(F, {{'X', p("u^3-3u")}, {'Y', p("u^4-4u^2")}, {'Z', p("u^5-10u")}}), p("u"));
  const Polynomial q = p("t^2x-5/3yz+7u");
  EXPECT_EQ(substitute(q, {}), q);
  EXPECT_EQ(substitute(q, {{'t', p("t")}, {'u', p("u")}, {'x', p("x")}, {'y', p("y")}, {'z', p("z")}}), q);
  EXPECT_EQ(substitute(p("u^3-3u-xt"), {{'t', p("0")}}), p("u^3-3u"));
  EXPECT_THROW(substitute(F, {{'W', p("u")}}), UnknownVariable);
  EXPECT_THROW(substitute(F, {{'X', p("u")}, {'Y', parse_polynomial("X", xyz)}}), VarSetMismatch);
}

TEST(PolynomialTest, SetVariableToZero) {
  const VarSet ext("tuxyzs");
  EXPECT_EQ(set_var_zero(parse_polynomial("u-ts", ext), 't'), parse_polynomial("u", ext));
  EXPECT_TRUE(set_var_zero(p("t") * p("u^2+xz-3"), 't').is_zero());
  EXPECT_EQ(set_var_zero(p("u^2+1"), 't'), p("u^2+1"));
}

TEST(PolynomialTest, ExactDivision) {
  const PaperInstance inst = build_paper_instance();
  const Polynomial numerator =
      p("u") - substitute(inst.F, {{'X', inst.vx}, {'Y', inst.vy}, {'Z', inst.vz}});
  EXPECT_EQ(divide_exact_by_var(numerator, 't', 1), inst.s);
  EXPECT_EQ(divide_exact_by_var(p("tx"), 't', 1), p("x"));
  EXPECT_THROW(divide_exact_by_var(p("u"), 't', 1), NotDivisible);
  try {
    divide_exact_by_var(p("t^2x+tu"), 't', 2);
    FAIL();
  } catch (const NotDivisible& e) {
    EXPECT_EQ(e.term(), "tu");
  }
}

TEST(PolynomialTest, Localization) {
  const LocalizedAtT a = localize_reduce(p("t^2x"), 1);
  EXPECT_EQ(a.numerator, p("tx"));
  EXPECT_EQ(a.power, 0u);
  const LocalizedAtT b = localize_reduce(p("u"), 0);
  EXPECT_EQ(b.numerator, p("u"));
  EXPECT_EQ(b.power, 0u);
  const PaperInstance inst = build_paper_instance();
  const LocalizedAtT c = localize_reduce(p("t") * inst.s, 1);
  EXPECT_EQ(c.numerator, inst.s);
  EXPECT_EQ(c.power, 0u);
  EXPECT_EQ((LocalizedAtT{p("t^3u"), 2}), (LocalizedAtT{p("tu"), 0}));
  EXPECT_FALSE((LocalizedAtT{p("u"), 1}) == (LocalizedAtT{p("u"), 0}));
}

TEST(PolynomialTest, Evaluation) {
  const PaperInstance inst = build_paper_instance();
  EXPECT_EQ(evaluate(inst.f, {{'u', 2}}), BigRational(2));
  EXPECT_EQ(evaluate(p("1/2x+y^2"), {{'x', BigRational(1, 3)}, {'y', -2}}), BigRational(25, 6));
}

TEST(PolynomialTest, Queries) {
  const Polynomial q = p("t^2x-5/3yz^4+7");
  EXPECT_EQ(q.degree(), 5);
  EXPECT_EQ(q.degree_in('z'), 4);
  EXPECT_EQ(Polynomial(P).degree(), -1);
  EXPECT_TRUE(p("7/2").is_constant());
  EXPECT_FALSE(q.is_constant());
}

TEST(PolynomialTest, ProductFallbacksAgreeWithReference) {
  // Exponents beyond the packed range and coefficients beyond 64 bits.
  const Polynomial wide = p("u^200+t^100x-3") * p("u^100-1/7y^300");
  EXPECT_EQ(wide, reference_product(p("u^200+t^100x-3"), p("u^100-1/7y^300")));
  const Polynomial big = p("123456789012345678901234567890u-987654321098765432109876543210/7x");
  EXPECT_EQ(big * big, reference_product(big, big));
  EXPECT_THROW(p("u^4294967295") * p("u"), ExponentOverflow);
}

class PolyProperty : public ::testing::Test {
 protected:
  lnd::testing::Generator gen{0xc0ffee};
  lnd::testing::PolyShape shape{6, 4, 9, false};
  Polynomial draw() { return gen.polynomial(P, shape); }
};

TEST_F(PolyProperty, RingAxioms) {
  for (int i = 0; i < 250; ++i) {
    const Polynomial a = draw(), b = draw(), c = draw();
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a * b, reference_product(a, b));
  }
}

TEST_F(PolyProperty, RationalCoefficientProducts) {
  shape.fractions = true;
  for (int i = 0; i < 200; ++i) {
    const Polynomial a = draw(), b = draw();
    EXPECT_EQ(a * b, reference_product(a, b));
  }
}

TEST_F(PolyProperty, LeibnizRule) {
  for (int i = 0; i < 150; ++i) {
    const Polynomial a = draw(), b = draw();
    for (char v : {'t', 'u', 'x', 'y', 'z'})
      EXPECT_EQ(partial_derivative(a * b, v),
                a * partial_derivative(b, v) + b * partial_derivative(a, v));
  }
}

TEST_F(PolyProperty, SubstitutionIsHomomorphism) {
  shape.max_degree = 3;
  for (int i = 0; i < 100; ++i) {
    const Polynomial a = draw(), b = draw();
    const std::map<char, Polynomial> sub{{'u', draw()}, {'x', draw()}, {'z', draw()}};
    EXPECT_EQ(substitute(a + b, sub), substitute(a, sub) + substitute(b, sub));
    EXPECT_EQ(substitute(a * b, sub), substitute(a, sub) * substitute(b, sub));
  }
}

TEST_F(PolyProperty, SetVarZeroIsHomomorphism) {
  for (int i = 0; i < 150; ++i) {
    const Polynomial a = draw(), b = draw();
    EXPECT_EQ(set_var_zero(poly_mul(a, b), 't'), poly_mul(set_var_zero(a, 't'), set_var_zero(b, 't')));
    EXPECT_EQ(set_var_zero(a, 't'), substitute(a, {{'t', Polynomial(P)}}));
  }
}

TEST_F(PolyProperty, DivisionUndoesMultiplicationByT) {
  for (int i = 0; i < 150; ++i) {
    const Polynomial a = draw();
    const unsigned k = static_cast<unsigned>(gen.integer(0, 3));
    EXPECT_EQ(divide_exact_by_var(poly_mul(a, poly_pow(p("t"), k)), 't', k), a);
  }
}

}  // namespace

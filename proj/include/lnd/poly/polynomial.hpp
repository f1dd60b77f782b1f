#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <unordered_map>
#include <vector>

#include "lnd/arith/big_rational.hpp"
#include "lnd/poly/monomial.hpp"
#include "lnd/poly/varset.hpp"

namespace lnd {

struct Term {
  Monomial mono;
  BigRational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are kept sorted in descending grlex order with no zero
/// coefficients, so the representation of a value is unique and equality is
/// term-list equality.
class Polynomial {
 public:
  explicit Polynomial(VarSet vars) : vars_(std::move(vars)) {}

  static Polynomial constant(VarSet vars, const BigRational& c);
  static Polynomial variable(VarSet vars, char name);
  static Polynomial monomial(VarSet vars, const Monomial& m, const BigRational& c);
  /// Combines like terms, drops zeros and sorts.
  static Polynomial from_terms(VarSet vars, std::vector<Term> terms);

  const VarSet& varset() const { return vars_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Total degree; -1 for the zero polynomial.
  std::int64_t degree() const;
  /// Highest exponent of variable `name`; -1 for zero.
  std::int64_t degree_in(char name) const;
  BigRational coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const BigRational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const BigRational& c) { return a *= c; }
  friend Polynomial operator*(const BigRational& c, Polynomial a) { return a *= c; }

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  friend class TermAccumulator;
  VarSet vars_;
  std::vector<Term> terms_;
};

/// Hash-keyed sum of terms. Products, derivatives and substitutions all
/// funnel through this before the final sort.
class TermAccumulator {
 public:
  explicit TermAccumulator(VarSet vars) : vars_(std::move(vars)) {}

  void add(const Monomial& m, const mpq_class& c);
  /// += c * shift * p
  void add_scaled(const Polynomial& p, const Monomial& shift, const mpq_class& c);
  void reserve(std::size_t n) { map_.reserve(n); }

  Polynomial finish() &&;

 private:
  VarSet vars_;
  std::unordered_map<Monomial, mpq_class, MonomialHash> map_;
};

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
Polynomial poly_pow(const Polynomial& p, unsigned k);

/// Formal partial derivative with respect to `var`.
Polynomial partial_derivative(const Polynomial& p, char var);

/// Simultaneous substitution. Variables of `p` missing from `assignment` map
/// to the same-named variable of the images' VarSet (or of p's own VarSet
/// when `assignment` is empty).
Polynomial substitute(const Polynomial& p, const std::map<char, Polynomial>& assignment);

/// Image under `var -> 0`.
Polynomial set_var_zero(const Polynomial& p, char var);

/// p / var^k; throws NotDivisible naming the first term not divisible.
Polynomial divide_exact_by_var(const Polynomial& p, char var, unsigned k);

/// Reinterprets p over `target`, matching variables by name. Throws
/// UnknownVariable if p uses a variable that `target` lacks.
Polynomial change_varset(const Polynomial& p, const VarSet& target);

/// Value at a point; variables absent from `point` must not occur in `p`.
BigRational evaluate(const Polynomial& p, const std::map<char, BigRational>& point);

}  // namespace lnd

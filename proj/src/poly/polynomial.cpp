#include "lnd/poly/polynomial.hpp"

#include <algorithm>
#include <utility>
#include <unordered_map>

#include "lnd/errors.hpp"
#include "lnd/parser/printer.hpp"

namespace lnd {

void TermAccumulator::add(const Monomial& m, const mpq_class& c) {
  auto [it, inserted] = map_.try_emplace(m, c);
  if (!inserted) it->second += c;
}

void TermAccumulator::add_scaled(const Polynomial& p, const Monomial& shift, const mpq_class& c) {
  mpq_class prod;
  for (const Term& t : p.terms_) {
    prod = c * t.coeff.raw();
    add(t.mono * shift, prod);
  }
}

Polynomial TermAccumulator::finish() && {
  Polynomial out(vars_);
  out.terms_.reserve(map_.size());
  for (auto& [m, c] : map_) {
    if (sgn(c) == 0) continue;
    out.terms_.push_back(Term{m, BigRational(std::move(c))});
  }
  map_.clear();
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const Term& a, const Term& b) { return GrlexDescending{}(a.mono, b.mono); });
  return out;
}

Polynomial Polynomial::constant(VarSet vars, const BigRational& c) {
  return monomial(std::move(vars), Monomial{}, c);
}

Polynomial Polynomial::variable(VarSet vars, char name) {
  Monomial m;
  m[vars.index(name)] = 1;
  return monomial(std::move(vars), m, BigRational(1));
}

Polynomial Polynomial::monomial(VarSet vars, const Monomial& m, const BigRational& c) {
  Polynomial p(std::move(vars));
  if (!c.is_zero()) p.terms_.push_back(Term{m, c});
  return p;
}

Polynomial Polynomial::from_terms(VarSet vars, std::vector<Term> terms) {
  TermAccumulator acc(std::move(vars));
  acc.reserve(terms.size());
  for (const Term& t : terms) acc.add(t.mono, t.coeff.raw());
  return std::move(acc).finish();
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

std::int64_t Polynomial::degree() const {
  if (terms_.empty()) return -1;
  // Leading term has the highest total degree under grlex.
  return static_cast<std::int64_t>(terms_.front().mono.total_degree());
}

std::int64_t Polynomial::degree_in(char name) const {
  const std::size_t i = vars_.index(name);
  if (terms_.empty()) return -1;
  std::int64_t d = 0;
  for (const Term& t : terms_) d = std::max<std::int64_t>(d, t.mono[i]);
  return d;
}

BigRational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& x) {
    return GrlexDescending{}(t.mono, x);
  });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return BigRational(0);
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (Term& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

// Merges two sorted term lists; `sign` is +1 or -1 for the second operand.
std::vector<Term> merge_terms(std::span<const Term> a, std::span<const Term> b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && GrlexDescending{}(a[i].mono, b[j].mono))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || GrlexDescending{}(b[j].mono, a[i].mono)) {
      out.push_back(Term{b[j].mono, sign > 0 ? b[j].coeff : -b[j].coeff});
      ++j;
    } else {
      BigRational c = sign > 0 ? a[i].coeff + b[j].coeff : a[i].coeff - b[j].coeff;
      if (!c.is_zero()) out.push_back(Term{a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_varset(vars_, o.vars_, "poly_add");
  terms_ = merge_terms(terms_, o.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_varset(vars_, o.vars_, "poly_sub");
  terms_ = merge_terms(terms_, o.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const BigRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (Term& t : terms_) t.coeff *= c;
  return *this;
}

namespace {

// Fast product path: exponents packed 8 bits per slot into one word and
// coefficients scaled to integers, so the inner loop does no gcd work.
constexpr unsigned kPackBits = 8;
constexpr std::uint32_t kPackMax = (1u << kPackBits) - 1;

std::uint64_t pack(const Monomial& m) {
  std::uint64_t w = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) w |= std::uint64_t{m.exps[i]} << (kPackBits * i);
  return w;
}

Monomial unpack(std::uint64_t w) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.exps[i] = (w >> (kPackBits * i)) & kPackMax;
  return m;
}

// Integer numerators over a common denominator.
struct Scaled {
  std::vector<std::uint64_t> keys;
  std::vector<mpz_class> nums;
  mpz_class den = 1;
  std::size_t max_bits = 0;
};

Scaled scale(std::span<const Term> terms) {
  Scaled s;
  for (const Term& t : terms) mpz_lcm(s.den.get_mpz_t(), s.den.get_mpz_t(), t.coeff.raw().get_den_mpz_t());
  s.keys.reserve(terms.size());
  s.nums.reserve(terms.size());
  for (const Term& t : terms) {
    s.keys.push_back(pack(t.mono));
    s.nums.push_back(t.coeff.raw().get_num() * (s.den / t.coeff.raw().get_den()));
    s.max_bits = std::max(s.max_bits, mpz_sizeinbase(s.nums.back().get_mpz_t(), 2));
  }
  return s;
}

std::array<std::uint32_t, kMaxVars> max_exponents(std::span<const Term> terms) {
  std::array<std::uint32_t, kMaxVars> m{};
  for (const Term& t : terms)
    for (std::size_t i = 0; i < kMaxVars; ++i) m[i] = std::max(m[i], t.mono.exps[i]);
  return m;
}

bool packable(std::span<const Term> a, std::span<const Term> b) {
  const auto ma = max_exponents(a);
  const auto mb = max_exponents(b);
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (std::uint64_t{ma[i]} + mb[i] > kPackMax) return false;
  return true;
}

std::size_t bit_width_of(std::size_t n) {
  std::size_t b = 0;
  while (n) {
    ++b;
    n >>= 1;
  }
  return b;
}

template <class Acc, class Mul>
std::vector<std::pair<std::uint64_t, Acc>> packed_product(const Scaled& small, const Scaled& large,
                                                          Mul mul) {
  std::unordered_map<std::uint64_t, Acc> map;
  map.reserve(large.keys.size() * std::min<std::size_t>(small.keys.size(), 8));
  for (std::size_t i = 0; i < small.keys.size(); ++i)
    for (std::size_t j = 0; j < large.keys.size(); ++j)
      mul(map[small.keys[i] + large.keys[j]], i, j);
  return {map.begin(), map.end()};
}

}  // namespace

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_varset(a.vars_, b.vars_, "poly_mul");
  if (a.is_zero() || b.is_zero()) return Polynomial(a.vars_);
  // Iterate over the shorter operand so each pass shifts the longer one.
  const Polynomial& small = a.size() <= b.size() ? a : b;
  const Polynomial& large = a.size() <= b.size() ? b : a;
  if (!packable(small.terms_, large.terms_)) {
    TermAccumulator acc(a.vars_);
    acc.reserve(large.size() * std::min<std::size_t>(small.size(), 8));
    for (const Term& t : small.terms_) acc.add_scaled(large, t.mono, t.coeff.raw());
    return std::move(acc).finish();
  }

  const Scaled ss = scale(small.terms_);
  const Scaled ls = scale(large.terms_);
  const mpz_class den = ss.den * ls.den;
  Polynomial out(a.vars_);
  auto emit = [&](std::uint64_t key, const mpz_class& num) {
    if (sgn(num) == 0) return;
    mpq_class c(num, den);
    c.canonicalize();
    out.terms_.push_back(Term{unpack(key), BigRational(std::move(c))});
  };

  // Each product fits in 126 bits and the sum of min(|small|, |large|) of them
  // stays below 2^127 when this holds.
  const bool narrow = ss.max_bits <= 62 && ls.max_bits <= 62 &&
                      ss.max_bits + ls.max_bits + bit_width_of(small.size()) <= 126;
  if (narrow) {
    std::vector<__int128> sn, ln;
    for (const auto& n : ss.nums) sn.push_back(n.get_si());
    for (const auto& n : ls.nums) ln.push_back(n.get_si());
    auto entries = packed_product<__int128>(
        ss, ls, [&](__int128& acc, std::size_t i, std::size_t j) { acc += sn[i] * ln[j]; });
    out.terms_.reserve(entries.size());
    for (const auto& [key, v] : entries) {
      if (v == 0) continue;
      const bool neg = v < 0;
      unsigned __int128 m = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
      mpz_class num(static_cast<unsigned long>(m >> 64));
      num <<= 64;
      num += static_cast<unsigned long>(m & ~std::uint64_t{0});
      if (neg) num = -num;
      emit(key, num);
    }
  } else {
    auto entries = packed_product<mpz_class>(ss, ls, [&](mpz_class& acc, std::size_t i, std::size_t j) {
      mpz_addmul(acc.get_mpz_t(), ss.nums[i].get_mpz_t(), ls.nums[j].get_mpz_t());
    });
    out.terms_.reserve(entries.size());
    for (const auto& [key, v] : entries) emit(key, v);
  }
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const Term& x, const Term& y) { return GrlexDescending{}(x.mono, y.mono); });
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }

Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial poly_pow(const Polynomial& p, unsigned k) {
  Polynomial result = Polynomial::constant(p.varset(), BigRational(1));
  for (unsigned i = 0; i < k; ++i) result = result * p;
  return result;
}

Polynomial partial_derivative(const Polynomial& p, char var) {
  const std::size_t i = p.varset().index(var);
  std::vector<Term> out;
  for (const Term& t : p.terms()) {
    if (t.mono[i] == 0) continue;
    Term d{t.mono, t.coeff * BigRational(static_cast<std::int64_t>(t.mono[i]))};
    d.mono[i] -= 1;
    out.push_back(std::move(d));
  }
  return Polynomial::from_terms(p.varset(), std::move(out));
}

Polynomial substitute(const Polynomial& p, const std::map<char, Polynomial>& assignment) {
  const VarSet& source = p.varset();
  for (const auto& [name, image] : assignment) {
    if (!source.contains(name)) throw UnknownVariable(std::string(1, name));
  }
  VarSet target = assignment.empty() ? source : assignment.begin()->second.varset();
  for (const auto& [name, image] : assignment)
    require_same_varset(target, image.varset(), "substitute");

  // powers[i][e] = image_i^e, filled on demand.
  std::vector<std::vector<Polynomial>> powers(source.size());
  auto power = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) {
      const char name = source.name(i);
      auto it = assignment.find(name);
      cache.push_back(Polynomial::constant(target, BigRational(1)));
      cache.push_back(it != assignment.end() ? it->second : Polynomial::variable(target, name));
    }
    while (cache.size() <= e) cache.push_back(cache.back() * cache[1]);
    return cache[e];
  };

  TermAccumulator acc(target);
  for (const Term& t : p.terms()) {
    Polynomial prod = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < source.size(); ++i)
      if (t.mono[i] > 0) prod = prod * power(i, t.mono[i]);
    for (const Term& r : prod.terms()) acc.add(r.mono, r.coeff.raw());
  }
  return std::move(acc).finish();
}

Polynomial set_var_zero(const Polynomial& p, char var) {
  const std::size_t i = p.varset().index(var);
  std::vector<Term> kept;
  for (const Term& t : p.terms())
    if (t.mono[i] == 0) kept.push_back(t);
  return Polynomial::from_terms(p.varset(), std::move(kept));
}

Polynomial divide_exact_by_var(const Polynomial& p, char var, unsigned k) {
  const std::size_t i = p.varset().index(var);
  std::vector<Term> out;
  out.reserve(p.size());
  for (const Term& t : p.terms()) {
    if (t.mono[i] < k) throw NotDivisible(print_term(p.varset(), t));
    Term q = t;
    q.mono[i] -= k;
    out.push_back(std::move(q));
  }
  return Polynomial::from_terms(p.varset(), std::move(out));
}

Polynomial change_varset(const Polynomial& p, const VarSet& target) {
  const VarSet& source = p.varset();
  if (source == target) return p;
  std::vector<std::size_t> where(source.size());
  std::vector<bool> used(source.size(), false);
  for (const Term& t : p.terms())
    for (std::size_t i = 0; i < source.size(); ++i)
      if (t.mono[i] > 0) used[i] = true;
  for (std::size_t i = 0; i < source.size(); ++i)
    if (used[i]) where[i] = target.index(source.name(i));
  std::vector<Term> out;
  out.reserve(p.size());
  for (const Term& t : p.terms()) {
    Term moved{Monomial{}, t.coeff};
    for (std::size_t i = 0; i < source.size(); ++i)
      if (t.mono[i] > 0) moved.mono[where[i]] = t.mono[i];
    out.push_back(std::move(moved));
  }
  return Polynomial::from_terms(target, std::move(out));
}

BigRational evaluate(const Polynomial& p, const std::map<char, BigRational>& point) {
  const VarSet& vars = p.varset();
  std::vector<const BigRational*> values(vars.size(), nullptr);
  for (const auto& [name, value] : point) values[vars.index(name)] = &value;
  mpq_class sum = 0;
  for (const Term& t : p.terms()) {
    mpq_class prod = t.coeff.raw();
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (values[i] == nullptr) throw UnknownVariable(std::string(1, vars.name(i)));
      mpz_class num, den;
      mpz_pow_ui(num.get_mpz_t(), values[i]->raw().get_num_mpz_t(), t.mono[i]);
      mpz_pow_ui(den.get_mpz_t(), values[i]->raw().get_den_mpz_t(), t.mono[i]);
      prod *= mpq_class(num, den);
    }
    sum += prod;
  }
  return BigRational(sum);
}

}  // namespace lnd

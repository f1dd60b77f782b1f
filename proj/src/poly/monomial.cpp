#include "lnd/poly/monomial.hpp"

#include <cassert>
#include <limits>

#include "lnd/errors.hpp"

namespace lnd {

std::uint64_t Monomial::total_degree() const {
  std::uint64_t d = 0;
  for (auto e : exps) d += e;
  return d;
}

bool Monomial::is_one() const {
  for (auto e : exps)
    if (e != 0) return false;
  return true;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exps[i] > other.exps[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const std::uint64_t e = std::uint64_t{a.exps[i]} + b.exps[i];
    if (e > std::numeric_limits<std::uint32_t>::max())
      throw ExponentOverflow("monomial exponent overflow");
    r.exps[i] = static_cast<std::uint32_t>(e);
  }
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  assert(b.divides(a));
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exps[i] = a.exps[i] - b.exps[i];
  return r;
}

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (auto c = a.exps[i] <=> b.exps[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  // FNV-1a over the exponent words.
  std::uint64_t h = 1469598103934665603ULL;
  for (auto e : m.exps) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

}  // namespace lnd

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>

#include "lnd/poly/varset.hpp"

namespace lnd {

/// Exponent vector. Slots beyond the owning VarSet's size stay zero, so
/// comparisons and hashing may look at all kMaxVars slots.
struct Monomial {
  std::array<std::uint32_t, kMaxVars> exps{};

  std::uint32_t& operator[](std::size_t i) { return exps[i]; }
  std::uint32_t operator[](std::size_t i) const { return exps[i]; }

  std::uint64_t total_degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;

  /// Exponent-wise sum; throws ExponentOverflow.
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exponent-wise difference; requires `b.divides(a)`.
  friend Monomial operator/(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order: total degree first, then exponents compared
/// in variable order. `greater` means "printed earlier".
std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b);

struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grlex_compare(a, b) == std::strong_ordering::greater;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace lnd

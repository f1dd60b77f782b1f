#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace lnd {

/// Upper bound on the number of variables of any VarSet; monomials store
/// their exponents inline.
inline constexpr std::size_t kMaxVars = 8;

/// Ordered set of single-letter variable names. Position in the set is the
/// variable's precedence in the term order (earlier = higher).
class VarSet {
 public:
  /// Each character of `names` is one variable. Throws std::invalid_argument
  /// on duplicates, non-letters, or more than kMaxVars names.
  explicit VarSet(std::string_view names);

  /// t, u, x, y, z in that order.
  static VarSet standard();

  std::size_t size() const { return names_->size(); }
  char name(std::size_t i) const { return (*names_)[i]; }
  const std::string& names() const { return *names_; }

  std::optional<std::size_t> find(char name) const;
  /// Throws UnknownVariable when `name` is not in the set.
  std::size_t index(char name) const;
  bool contains(char name) const { return find(name).has_value(); }

  friend bool operator==(const VarSet& a, const VarSet& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::string> names_;
};

/// Throws VarSetMismatch unless `a == b`.
void require_same_varset(const VarSet& a, const VarSet& b, std::string_view op);

}  // namespace lnd

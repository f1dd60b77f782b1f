#include "lnd/poly/varset.hpp"

#include <cctype>
#include <stdexcept>

#include "lnd/errors.hpp"

namespace lnd {

VarSet::VarSet(std::string_view names) {
  if (names.size() > kMaxVars)
    throw std::invalid_argument("VarSet: at most " + std::to_string(kMaxVars) + " variables");
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!std::isalpha(static_cast<unsigned char>(names[i])))
      throw std::invalid_argument("VarSet: variable names must be single letters");
    if (names.find(names[i], i + 1) != std::string_view::npos)
      throw std::invalid_argument(std::string("VarSet: duplicate variable '") + names[i] + "'");
  }
  names_ = std::make_shared<const std::string>(names);
}

VarSet VarSet::standard() {
  static const VarSet kStandard("tuxyz");
  return kStandard;
}

std::optional<std::size_t> VarSet::find(char name) const {
  const auto pos = names_->find(name);
  if (pos == std::string::npos) return std::nullopt;
  return pos;
}

std::size_t VarSet::index(char name) const {
  if (auto i = find(name)) return *i;
  throw UnknownVariable(std::string(1, name));
}

void require_same_varset(const VarSet& a, const VarSet& b, std::string_view op) {
  if (!(a == b))
    throw VarSetMismatch(std::string(op) + ": variable sets {" + a.names() + "} and {" +
                         b.names() + "} differ");
}

}  // namespace lnd

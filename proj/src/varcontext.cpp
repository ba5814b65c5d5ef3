#include "melnik/varcontext.hpp"

#include <stdexcept>

namespace melnik {

VarContext::VarContext(std::vector<std::string> names)
    : names_(std::move(names)) {
  for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
    if (names_[i].empty())
      throw std::invalid_argument("VarContext: empty variable name");
    if (!byName_.emplace(names_[i], i).second)
      throw std::invalid_argument("VarContext: duplicate variable '" +
                                  names_[i] + "'");
  }
}

int VarContext::index(const std::string& n) const {
  auto it = byName_.find(n);
  if (it == byName_.end())
    throw std::invalid_argument("VarContext: unknown variable '" + n + "'");
  return it->second;
}

}  // namespace melnik

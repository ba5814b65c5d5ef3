#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace melnik {

// Ordered list of variable names. The order is fixed for the context's
// lifetime; monomial comparisons and the canonical text form depend on it.
class VarContext {
 public:
  explicit VarContext(std::vector<std::string> names);

  static std::shared_ptr<const VarContext> make(
      std::vector<std::string> names) {
    return std::make_shared<const VarContext>(std::move(names));
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  bool has(const std::string& n) const { return byName_.count(n) != 0; }
  // Throws std::invalid_argument for unknown names.
  int index(const std::string& n) const;
  int find(const std::string& n) const {  // -1 if absent
    auto it = byName_.find(n);
    return it == byName_.end() ? -1 : it->second;
  }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> byName_;
};

using Ctx = std::shared_ptr<const VarContext>;

inline bool same_context(const Ctx& a, const Ctx& b) {
  return a == b || (a && b && a->names() == b->names());
}

}  // namespace melnik

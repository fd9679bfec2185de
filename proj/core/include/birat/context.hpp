#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <unordered_set>
#include <vector>

#include "birat/rational.hpp"

namespace birat {

/// Ordered list of distinct variable names. The order is fixed at creation
/// and anchors every monomial order built on top of it.
class VarContext {
 public:
  explicit VarContext(std::vector<std::string> names) : names_(std::move(names)) {
    std::unordered_set<std::string> seen;
    for (const auto& n : names_) {
      if (n.empty()) throw Error("empty variable name");
      if (!seen.insert(n).second) throw Error("duplicate variable name: " + n);
    }
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  int index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<int>(i);
    return -1;
  }

  bool operator==(const VarContext& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const VarContext>;

inline ContextPtr make_context(std::vector<std::string> names) {
  return std::make_shared<const VarContext>(std::move(names));
}

inline bool same_context(const ContextPtr& a, const ContextPtr& b) {
  return a == b || (a && b && *a == *b);
}

/// Picks a fresh variable name not present in `ctx`, starting from `stem`.
inline std::string fresh_var_name(const VarContext& ctx, const std::string& stem) {
  if (ctx.index_of(stem) < 0) return stem;
  for (int k = 2;; ++k) {
    std::string cand = stem + std::to_string(k);
    if (ctx.index_of(cand) < 0) return cand;
  }
}

}  // namespace birat

#pragma once

#include <algorithm>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace vfilt {

/// Ordered list of distinct variable names. Every monomial and ideal refers
/// to one; operations require operands to share it.
class RingContext {
public:
  explicit RingContext(std::vector<std::string> variables)
      : vars_(std::move(variables)) {
    std::set<std::string> seen;
    for (const auto& v : vars_) {
      if (v.empty()) throw domain_error("ring variable names must be nonempty");
      if (!seen.insert(v).second)
        throw domain_error("duplicate ring variable name: " + v);
    }
  }

  std::size_t size() const noexcept { return vars_.size(); }
  const std::string& name(std::size_t i) const { return vars_.at(i); }
  const std::vector<std::string>& names() const noexcept { return vars_; }

  bool has(const std::string& name) const noexcept {
    return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
  }

  std::size_t index_of(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw domain_error("unknown variable: " + name);
    return static_cast<std::size_t>(it - vars_.begin());
  }

  friend bool operator==(const RingContext& a, const RingContext& b) {
    return a.vars_ == b.vars_;
  }
  friend bool operator!=(const RingContext& a, const RingContext& b) {
    return !(a == b);
  }

private:
  std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const RingContext>;

inline RingPtr make_ring(std::vector<std::string> variables) {
  return std::make_shared<RingContext>(std::move(variables));
}

/// Ring x1..xm, the default ambient for generated families.
inline RingPtr make_ring_x(std::size_t m) {
  std::vector<std::string> names;
  names.reserve(m);
  for (std::size_t i = 1; i <= m; ++i) names.push_back("x" + std::to_string(i));
  return make_ring(std::move(names));
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  return a && b && *a == *b;
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b,
                              const char* op) {
  if (!same_ring(a, b))
    throw ring_mismatch_error(std::string(op) +
                              ": operands live in different rings");
}

}  // namespace vfilt

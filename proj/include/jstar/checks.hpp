#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace jstar {

/// One verified identity. `detail` carries the offending basis indices and
/// the nonzero residual when `passed` is false.
struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct CheckList {
  std::vector<Check> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }
  void add(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok, std::move(detail)});
  }
  void append(const CheckList& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
  const Check* find(const std::string& name) const {
    auto it = std::find_if(checks.begin(), checks.end(), [&](const Check& c) { return c.name == name; });
    return it == checks.end() ? nullptr : &*it;
  }
};

} // namespace jstar

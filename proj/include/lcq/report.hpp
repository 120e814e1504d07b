#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace lcq {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Ordered list of named pass/fail checks.
class Report {
public:
  Report &add(std::string name, bool passed, std::string detail = {}) {
    checks_.push_back({std::move(name), passed, std::move(detail)});
    return *this;
  }
  void append(const Report &other) {
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  }

  const std::vector<Check> &checks() const noexcept { return checks_; }

  bool passed() const {
    return std::all_of(checks_.begin(), checks_.end(),
                       [](const Check &c) { return c.passed; });
  }

  const Check *find(const std::string &name) const {
    for (const auto &c : checks_)
      if (c.name == name)
        return &c;
    return nullptr;
  }

  friend std::ostream &operator<<(std::ostream &os, const Report &r) {
    for (const auto &c : r.checks_) {
      os << (c.passed ? "[pass] " : "[FAIL] ") << c.name;
      if (!c.detail.empty())
        os << ": " << c.detail;
      os << '\n';
    }
    return os;
  }

private:
  std::vector<Check> checks_;
};

} // namespace lcq

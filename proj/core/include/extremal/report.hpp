#pragma once

#include <string>
#include <vector>

namespace extremal {

/// One verified count or property: the expected value always carries the
/// closed-form it was computed from, the observed value always comes from
/// the computation being checked.
struct Check {
  std::string name;
  std::string formula;
  long long expected = 0;
  long long observed = 0;
  bool pass = false;
};

struct Report {
  std::vector<Check> checks;

  void add(std::string name, std::string formula, long long expected, long long observed) {
    checks.push_back({std::move(name), std::move(formula), expected, observed,
                      expected == observed});
  }
  void add_bool(std::string name, std::string formula, bool ok) {
    checks.push_back({std::move(name), std::move(formula), 1, ok ? 1 : 0, ok});
  }
  bool pass() const {
    for (const Check& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const Check* find(const std::string& name) const {
    for (const Check& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

}  // namespace extremal

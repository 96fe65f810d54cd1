#pragma once

#include <map>
#include <string>
#include <vector>

namespace kdual {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::vector<std::string> witnesses;

  void fail(std::string witness) {
    passed = false;
    witnesses.push_back(std::move(witness));
  }
};

// Outcome of an axiom check; every failed clause lists its witnesses.
struct Certificate {
  std::vector<CheckResult> checks;
  std::map<std::string, bool> flags;

  CheckResult& add(std::string name) {
    checks.push_back({std::move(name), true, {}});
    return checks.back();
  }
  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

}  // namespace kdual

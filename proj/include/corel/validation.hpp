#pragma once

#include <string>
#include <utility>
#include <vector>

namespace corel {

struct CheckResult {
  std::string check;
  bool ok = false;
  std::string detail;  // empty when the check passed or has nothing to add
};

/// Outcome of an axiom validator: one entry per identity checked, in a
/// fixed order so reports are reproducible.
struct ValidationReport {
  std::vector<CheckResult> checks;

  bool valid() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }

  void add(std::string check, bool ok, std::string detail = {}) {
    checks.push_back({std::move(check), ok, std::move(detail)});
  }

  /// Merges another report in, prefixing its check names.
  void absorb(const std::string& prefix, const ValidationReport& other) {
    for (const auto& c : other.checks) checks.push_back({prefix + c.check, c.ok, c.detail});
  }

  std::string first_failure() const {
    for (const auto& c : checks)
      if (!c.ok) return c.detail.empty() ? c.check : c.check + ": " + c.detail;
    return {};
  }
};

}  // namespace corel

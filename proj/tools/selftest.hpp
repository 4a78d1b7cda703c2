#pragma once

#include <string>
#include <vector>

struct SelftestCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct SelftestReport {
  std::vector<SelftestCheck> checks;
  bool passed() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
};

// Invariance suite over the bundled corpus. Reads nothing, writes nothing.
SelftestReport run_selftest();

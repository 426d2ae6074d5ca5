#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mudom {

struct SelftestCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct SelftestReport {
  bool passed = false;
  std::vector<SelftestCheck> checks;
};

// Property sweep over every module, scaled by `samples` (draw counts for the
// cheap checks; expensive ones run at a fraction of it).
SelftestReport run_selftest(int samples, std::uint64_t seed);

}  // namespace mudom

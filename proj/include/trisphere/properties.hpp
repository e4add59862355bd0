#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace trisphere {

struct PropertyResult {
  std::string name;
  int trials = 0;
  double worst = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Randomized invariant checks driven by a seeded mt19937_64.
std::vector<PropertyResult> run_property_checks(std::uint64_t seed, int trials);

}  // namespace trisphere

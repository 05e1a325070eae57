#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sl2 {

struct CheckResult {
  std::string name;
  uint64_t instances = 0;
  uint64_t violations = 0;
  std::vector<std::string> details;  // first few violation descriptions
};

struct VerifyReport {
  uint64_t seed = 0;
  uint64_t instances_per_check = 0;
  std::vector<uint32_t> qs;
  std::vector<CheckResult> checks;
  bool ok() const {
    for (const CheckResult& c : checks)
      if (c.violations) return false;
    return true;
  }
};

/// Runs the whole property suite (every operation of the field, group,
/// growth, cayley, and escape modules) at q in {2,3,5,7} plus any extra
/// prime fields requested. Deterministic for a fixed seed.
VerifyReport verify_all(uint64_t seed, uint64_t instances = 100,
                        const std::vector<uint32_t>& extra_primes = {});

}  // namespace sl2

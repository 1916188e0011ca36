#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "champ/arith.hpp"

namespace champ {

struct CheckResult {
  std::string name;
  bool ok;
  std::string detail;
};

// The property suite behind `champ verify`: worked examples, kernel
// equivalence, closed-form counters against the streaming oracle, the
// discrepancy formulas against endpoint enumeration, and the telescoping
// identity. Sampled checks draw from `seed`; `quick` shrinks the sample
// sizes.
std::vector<CheckResult> run_self_checks(std::uint64_t seed, bool quick);

namespace oracle {

// Independent discrepancy references: enumerate every one-sided limit at
// every candidate endpoint pair instead of using the sorted-points formulas.
// Quadratic, exact, and deliberately ignorant of the production code path.
Rat star_discrepancy_enumerated(std::span<const Rat> points);
Rat extreme_discrepancy_enumerated(std::span<const Rat> points);

}  // namespace oracle

}  // namespace champ

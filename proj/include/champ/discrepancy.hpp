#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "champ/arith.hpp"
#include "champ/base.hpp"
#include "champ/counting.hpp"

namespace champ {

// One element of the shift sequence, truncated to `precision` digits: an
// exact rational with denominator b^precision within b^-precision of the
// true value.
struct ShiftPoint {
  std::uint64_t index;  // 1-based n
  Rat value;
  int precision;
};

// An exact discrepancy value for the truncated points together with a
// certified radius covering the truncation: the true discrepancy lies in
// [value - radius, value + radius].
struct DiscrepancyEstimate {
  Rat value;
  Rat radius;
};

// Half-open interval [lower, upper) whose endpoints terminate within `depth`
// base-b digits, so membership of a shift point is decided by `depth` digits.
class IntervalSpec {
 public:
  IntervalSpec(Base base, Rat lower, Rat upper, int depth);

  Base base() const { return base_; }
  const Rat& lower() const { return lower_; }
  const Rat& upper() const { return upper_; }
  int depth() const { return depth_; }
  Int scaled_lower() const;  // lower * b^depth
  Int scaled_upper() const;

 private:
  Base base_;
  Rat lower_;
  Rat upper_;
  int depth_;
};

// The certified constants attached to a witness pair of length k:
// occurrence_constant b^-(k+1) drives the gap growth, and a third of it
// lower-bounds the discrepancy. 1/10^3 and 1/3000 for k = 2, base 10.
struct WitnessConstants {
  Rat occurrence_constant;
  Rat discrepancy_constant;

  static WitnessConstants for_length(Base base, int length);
};

std::vector<ShiftPoint> shift_points(Base base, std::uint64_t count, int precision);

// sup over prefixes [0, t) of |empirical - t|, by the sorted-points formula:
// max_i max(i/N - y_(i), y_(i) - (i-1)/N). Exact; rejects values outside [0,1).
Rat star_discrepancy(std::span<const Rat> points);

// sup over all [a, b): 1/N + max_i(i/N - y_(i)) - min_i(i/N - y_(i)).
// Satisfies star <= extreme <= 2 star.
Rat extreme_discrepancy(std::span<const Rat> points);

// Smallest admissible truncation depth for discrepancy_of_c.
int min_shift_precision(Base base, std::uint64_t count);

// Extreme discrepancy of the first `count` shift points truncated to
// `precision` digits, radius 2 b^-precision. Requires
// precision >= min_shift_precision(base, count).
DiscrepancyEstimate discrepancy_of_c(Base base, std::uint64_t count, int precision);

// Signed deviation (#{n <= N : x_n in [lower, upper)}) / N - (upper - lower),
// exact; membership is read off `depth` digits of the expansion.
Rat interval_count(Base base, const IntervalSpec& interval, std::uint64_t count);

// Left and right side of the telescoping identity that splits [0, gamma)
// into base-b refinement intervals, each side evaluated independently.
// gamma must terminate within `depth` digits. Equal components on success.
std::pair<Rat, Rat> decomposition_check(Base base, const Rat& gamma, int depth,
                                        std::uint64_t count);

// Certified lower bound for the discrepancy of `count` points:
// |witness gap at count + k - 1| / (2 count).
Rat witness_lower_bound(Base base, const WitnessPair& pair, const Int& count);

struct DiscrepancyRow {
  Int prefix_len;
  DiscrepancyEstimate estimate;
  Rat lower_bound;
  Int gap;
};

// One row per grid point: discrepancy at the default truncation depth, the
// witness lower bound, and the raw gap.
std::vector<DiscrepancyRow> discrepancy_table(Base base, std::span<const std::uint64_t> grid,
                                              int witness_length);

}  // namespace champ

#pragma once

#include "champ/arith.hpp"

namespace champ {

struct RatBounds {
  Rat lower;
  Rat upper;
};

// Certified rational enclosure of log10(n) for integer n >= 2, from
// directed-rounding evaluations. lower <= log10(n) <= upper; the enclosure
// width shrinks with `bits`. Lets tests compare exact rationals against
// thresholds of the form K / log10(N) without trusting floating point.
RatBounds log10_bounds(const Int& n, int bits = 128);

// A single deterministic high-precision value (round to nearest), as an
// exact dyadic rational; used only for rendering, never for assertions.
Rat log10_approx(const Int& n, int bits = 192);

}  // namespace champ

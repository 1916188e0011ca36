#pragma once

#include <cstdint>

#include "champ/arith.hpp"
#include "champ/base.hpp"
#include "champ/core.hpp"

namespace champ {

// Exact occurrence counts for one block over a prefix of the concatenation.
// An occurrence is "crossing" (overlapping) when its window spans a term
// boundary, "within" (non-overlapping) when it sits inside a single term.
struct OccurrenceReport {
  Int total;
  Int non_overlapping;
  Int overlapping;
};

// Count of terms <= v carrying the block at digit offsets j+1 .. j+k.
struct PositionCount {
  int position;  // j
  Int count;
};

// A pair of equal-length blocks whose occurrence counts provably diverge:
// `excess` starts with two equal nonzero digits and does not end in b-1;
// `deficit` is the all-zero block.
class WitnessPair {
 public:
  WitnessPair(Block excess, Block deficit);

  // (d d 0 ... 0) against (0 ... 0) with d = 1; needs base >= 3 so the last
  // digit of the length-2 excess block is not b-1.
  static WitnessPair minimal(Base base, int length);

  const Block& excess() const { return excess_; }
  const Block& deficit() const { return deficit_; }
  int length() const { return excess_.length(); }

 private:
  Block excess_;
  Block deficit_;
};

// Streaming counters (oracle path). Both materialize the prefix and are
// subject to kMaterializeLimit. Windows are counted only when they fit
// entirely inside the first `prefix_len` digits; a prefix shorter than the
// block yields zero.
Int occ_brute(Base base, const Block& block, const Int& prefix_len);
OccurrenceReport occ_split_brute(Base base, const Block& block, const Int& prefix_len);

// Closed-form counters.

// Non-overlapping occurrences inside segment s_len, counted as (term,
// position) pairs: 0 when len < k, otherwise
// (len-k)(b-1)b^(len-k-1) + [leading digit nonzero] b^(len-k).
Int occ_no_segment(const Block& block, const SegmentId& segment);

// Terms of width n equal to that of `term`, value <= term, carrying the block
// at offset j (0-based from the most significant digit). The j = 0 case
// compares the block against the term's leading digits; j >= 1 splits into
// prefixes strictly below the term's own prefix plus the boundary count.
PositionCount occ_no_position(const Block& block, const Int& term, int position, Base base);

// The boundary count: terms agreeing with `term` on the first j digits and
// carrying the block right after. Decided by comparing the block against the
// term's digits j+1 .. j+k.
Int boundary_count(const Block& block, const Int& term, int position, Base base);

// Sum of occ_no_position over all positions; 0 when the block is wider than
// the term.
Int occ_no_up_to(const Block& block, const Int& term, Base base);

// Occurrences straddling the boundary between consecutive terms x, x+1 of
// width `term_width`, for x in [first_lo, first_hi]. For each split the
// constraint on x is a congruence (its required suffix) intersected with an
// interval (the required prefix of x+1); the interval is placed on x+1
// directly, so digit carries from x to x+1 need no special casing.
Int occ_o_straddles(const Block& block, const Int& first_lo, const Int& first_hi,
                    int term_width, Base base);

// Exact two-term straddle count over one segment. Requires k >= 2.
Int occ_o_segment_exact(const Block& block, const SegmentId& segment);

// (k-1) b^(len-k), an upper bound for occ_o_segment_exact. Requires k >= 2
// and len >= k.
Int occ_o_segment_bound(const Block& block, const SegmentId& segment);

// Exact split report for the first `prefix_len` digits, assembled from the
// closed forms: full segments, the current segment cut at the located term,
// and brute force over the few materialized digits at segment seams and the
// partially consumed term. Falls back to the streaming counter when terms
// are no wider than the block (small prefixes).
OccurrenceReport occ_exact(Base base, const Block& block, const Int& prefix_len);

// (occ_exact.total - N/b^k) / b^(n-k) as an exact rational, n the width of
// the term holding position N. Bounded uniformly over blocks of one length.
Rat normalized_residual(Base base, const Block& block, const Int& prefix_len);

// occ_exact(excess).total - occ_exact(deficit).total. Requires the term
// width at prefix_len to be at least the pair's length.
Int witness_gap(Base base, const WitnessPair& pair, const Int& prefix_len);

}  // namespace champ

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "champ/arith.hpp"
#include "champ/base.hpp"

namespace champ {

// Location of digit position N inside the concatenation: the term holding it,
// that term's width in digits, and the 1-based offset of the digit within the
// term. Satisfies T(term - 1) < N <= T(term) and T(term - 1) + offset = N.
struct TermLocator {
  Int term;
  int width;
  int offset;
};

// L: digits contributed by all segments before the current one.
// M: digits contributed by the current segment up to and including the term.
// L <= N <= L + M always.
struct PrefixBreakdown {
  Int before_segment;  // L
  Int within_segment;  // M
};

// T(v): total digits of the concatenation 1 2 3 ... v. Rejects v < 1.
Int term_digit_count(const Int& term, Base base);

// Digits contributed by segments s_1 .. s_{length-1}.
Int digits_before_segment(int length, Base base);

// Unique locator for position N >= 1. Solves for the segment by scanning
// widths 1, 2, ... (at most ~log_b N steps), then divides within the segment;
// no floating point near the boundaries.
TermLocator locate(const Int& position, Base base);

// The digit at position N, via random access (agrees with DigitStream).
int digit_at(const Int& position, Base base);

PrefixBreakdown prefix_breakdown(const Int& position, Base base);

// Base-b digits of a term, most significant first.
std::vector<std::uint8_t> digits_of_term(const Int& term, Base base);

// Streaming digits of the concatenation constant, constant memory per term.
class DigitStream {
 public:
  explicit DigitStream(Base base);
  std::uint8_t next();

 private:
  int radix_;
  std::vector<std::uint8_t> term_;  // current term, most significant first
  std::size_t pos_;
};

struct DigitBuffer {
  std::vector<std::uint8_t> digits;
  std::vector<std::uint8_t> term_starts;  // 1 where a new term begins
};

// Materialization guard for brute-force paths.
inline constexpr std::size_t kMaterializeLimit = std::size_t{1} << 28;

std::vector<std::uint8_t> first_digits(Base base, std::size_t count);
DigitBuffer first_digits_with_starts(Base base, std::size_t count);

// All digits of segment s_len with term-start flags.
DigitBuffer segment_digits(const SegmentId& segment);

}  // namespace champ

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

// Byte kernels behind the streaming counters: given a digit buffer, count the
// windows equal to a fixed pattern, optionally classified by whether the
// window straddles a term boundary. Scalar reference implementations are
// always built; AVX2/NEON variants are selected at runtime and are
// equivalence-tested against the scalar ones.

namespace champ::kernels {

struct SplitCounts {
  std::uint64_t within = 0;    // no term start strictly inside the window
  std::uint64_t crossing = 0;  // at least one term start at offsets 1..k-1
};

enum class Isa { scalar, avx2, neon };

const char* isa_name(Isa isa);

// The variant the dispatched entry points will use on this machine.
Isa active_isa();

// Count windows text[i .. i+k) equal to pattern, 0 <= i <= |text| - k.
std::uint64_t match_count(std::span<const std::uint8_t> text,
                          std::span<const std::uint8_t> pattern);

// As match_count, classifying each hit: the window crosses a boundary iff
// term_starts[i+j] != 0 for some j in [1, k-1]. term_starts must be at least
// as long as text.
SplitCounts match_count_split(std::span<const std::uint8_t> text,
                              std::span<const std::uint8_t> term_starts,
                              std::span<const std::uint8_t> pattern);

// Reference kernels.
std::uint64_t match_count_scalar(std::span<const std::uint8_t> text,
                                 std::span<const std::uint8_t> pattern);
SplitCounts match_count_split_scalar(std::span<const std::uint8_t> text,
                                     std::span<const std::uint8_t> term_starts,
                                     std::span<const std::uint8_t> pattern);

#if defined(__x86_64__) || defined(__i386__) || defined(_M_X64)
bool avx2_supported();
std::uint64_t match_count_avx2(std::span<const std::uint8_t> text,
                               std::span<const std::uint8_t> pattern);
SplitCounts match_count_split_avx2(std::span<const std::uint8_t> text,
                                   std::span<const std::uint8_t> term_starts,
                                   std::span<const std::uint8_t> pattern);
#endif

#if defined(__aarch64__)
std::uint64_t match_count_neon(std::span<const std::uint8_t> text,
                               std::span<const std::uint8_t> pattern);
SplitCounts match_count_split_neon(std::span<const std::uint8_t> text,
                                   std::span<const std::uint8_t> term_starts,
                                   std::span<const std::uint8_t> pattern);
#endif

}  // namespace champ::kernels

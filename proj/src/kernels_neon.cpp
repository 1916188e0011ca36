#include "champ/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include <cstring>

namespace champ::kernels {

// 16 window positions per iteration; matched lanes are 0xff, reduced with a
// horizontal add of the top bit.
std::uint64_t match_count_neon(std::span<const std::uint8_t> text,
                               std::span<const std::uint8_t> pattern) {
  const std::size_t k = pattern.size();
  if (k == 0 || text.size() < k) return 0;
  const std::size_t positions = text.size() - k + 1;
  const std::uint8_t* t = text.data();
  std::uint64_t count = 0;

  std::size_t i = 0;
  for (; i + 16 <= positions; i += 16) {
    uint8x16_t m = vceqq_u8(vld1q_u8(t + i), vdupq_n_u8(pattern[0]));
    for (std::size_t j = 1; j < k; ++j)
      m = vandq_u8(m, vceqq_u8(vld1q_u8(t + i + j), vdupq_n_u8(pattern[j])));
    count += vaddvq_u8(vshrq_n_u8(m, 7));
  }
  for (; i < positions; ++i) {
    if (t[i] == pattern[0] &&
        (k == 1 || std::memcmp(t + i + 1, pattern.data() + 1, k - 1) == 0))
      ++count;
  }
  return count;
}

SplitCounts match_count_split_neon(std::span<const std::uint8_t> text,
                                   std::span<const std::uint8_t> term_starts,
                                   std::span<const std::uint8_t> pattern) {
  const std::size_t k = pattern.size();
  SplitCounts out;
  if (k == 0 || text.size() < k) return out;
  const std::size_t positions = text.size() - k + 1;
  const std::uint8_t* t = text.data();
  const std::uint8_t* s = term_starts.data();

  std::size_t i = 0;
  for (; i + 16 <= positions; i += 16) {
    uint8x16_t m = vceqq_u8(vld1q_u8(t + i), vdupq_n_u8(pattern[0]));
    uint8x16_t starts = vdupq_n_u8(0);
    for (std::size_t j = 1; j < k; ++j) {
      m = vandq_u8(m, vceqq_u8(vld1q_u8(t + i + j), vdupq_n_u8(pattern[j])));
      starts = vorrq_u8(starts, vld1q_u8(s + i + j));
    }
    const uint8x16_t inside = vceqq_u8(starts, vdupq_n_u8(0));
    const std::uint64_t matched = vaddvq_u8(vshrq_n_u8(m, 7));
    const std::uint64_t within = vaddvq_u8(vshrq_n_u8(vandq_u8(m, inside), 7));
    out.within += within;
    out.crossing += matched - within;
  }
  for (; i < positions; ++i) {
    if (t[i] != pattern[0]) continue;
    if (k > 1 && std::memcmp(t + i + 1, pattern.data() + 1, k - 1) != 0) continue;
    bool crossing = false;
    for (std::size_t j = 1; j < k; ++j) crossing |= s[i + j] != 0;
    if (crossing)
      ++out.crossing;
    else
      ++out.within;
  }
  return out;
}

}  // namespace champ::kernels

#endif

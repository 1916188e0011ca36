#include "champ/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__) || defined(_M_X64)

#include <immintrin.h>

#include <cstring>

namespace champ::kernels {

bool avx2_supported() {
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok;
}

// 32 window positions per iteration. Loads at t + i + j stay in bounds:
// i + 31 <= positions - 1 and j <= k - 1, so i + 31 + j <= |text| - 1.
std::uint64_t match_count_avx2(std::span<const std::uint8_t> text,
                               std::span<const std::uint8_t> pattern) {
  const std::size_t k = pattern.size();
  if (k == 0 || text.size() < k) return 0;
  const std::size_t positions = text.size() - k + 1;
  const std::uint8_t* t = text.data();
  std::uint64_t count = 0;

  std::size_t i = 0;
  for (; i + 32 <= positions; i += 32) {
    __m256i m = _mm256_cmpeq_epi8(
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(t + i)),
        _mm256_set1_epi8(static_cast<char>(pattern[0])));
    for (std::size_t j = 1; j < k; ++j) {
      if (_mm256_testz_si256(m, m)) break;
      m = _mm256_and_si256(
          m, _mm256_cmpeq_epi8(
                 _mm256_loadu_si256(reinterpret_cast<const __m256i*>(t + i + j)),
                 _mm256_set1_epi8(static_cast<char>(pattern[j]))));
    }
    count += static_cast<unsigned>(
        __builtin_popcount(static_cast<unsigned>(_mm256_movemask_epi8(m))));
  }
  for (; i < positions; ++i) {
    if (t[i] == pattern[0] &&
        (k == 1 || std::memcmp(t + i + 1, pattern.data() + 1, k - 1) == 0))
      ++count;
  }
  return count;
}

SplitCounts match_count_split_avx2(std::span<const std::uint8_t> text,
                                   std::span<const std::uint8_t> term_starts,
                                   std::span<const std::uint8_t> pattern) {
  const std::size_t k = pattern.size();
  SplitCounts out;
  if (k == 0 || text.size() < k) return out;
  const std::size_t positions = text.size() - k + 1;
  const std::uint8_t* t = text.data();
  const std::uint8_t* s = term_starts.data();

  std::size_t i = 0;
  for (; i + 32 <= positions; i += 32) {
    __m256i m = _mm256_cmpeq_epi8(
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(t + i)),
        _mm256_set1_epi8(static_cast<char>(pattern[0])));
    __m256i starts = _mm256_setzero_si256();
    for (std::size_t j = 1; j < k; ++j) {
      m = _mm256_and_si256(
          m, _mm256_cmpeq_epi8(
                 _mm256_loadu_si256(reinterpret_cast<const __m256i*>(t + i + j)),
                 _mm256_set1_epi8(static_cast<char>(pattern[j]))));
      starts = _mm256_or_si256(
          starts, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(s + i + j)));
    }
    const unsigned match_bits =
        static_cast<unsigned>(_mm256_movemask_epi8(m));
    const unsigned inside_bits = static_cast<unsigned>(_mm256_movemask_epi8(
        _mm256_cmpeq_epi8(starts, _mm256_setzero_si256())));
    out.within += static_cast<unsigned>(__builtin_popcount(match_bits & inside_bits));
    out.crossing += static_cast<unsigned>(__builtin_popcount(match_bits & ~inside_bits));
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

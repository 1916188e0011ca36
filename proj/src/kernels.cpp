#include "champ/kernels.hpp"

#include <cstring>

namespace champ::kernels {

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
    default: return "scalar";
  }
}

Isa active_isa() {
#if defined(__x86_64__) || defined(__i386__) || defined(_M_X64)
  if (avx2_supported()) return Isa::avx2;
#elif defined(__aarch64__)
  return Isa::neon;
#endif
  return Isa::scalar;
}

std::uint64_t match_count_scalar(std::span<const std::uint8_t> text,
                                 std::span<const std::uint8_t> pattern) {
  const std::size_t k = pattern.size();
  if (k == 0 || text.size() < k) return 0;
  const std::size_t positions = text.size() - k + 1;
  const std::uint8_t* t = text.data();
  const std::uint8_t first = pattern[0];
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < positions; ++i) {
    if (t[i] != first) continue;
    if (k == 1 || std::memcmp(t + i + 1, pattern.data() + 1, k - 1) == 0) ++count;
  }
  return count;
}

SplitCounts match_count_split_scalar(std::span<const std::uint8_t> text,
                                     std::span<const std::uint8_t> term_starts,
                                     std::span<const std::uint8_t> pattern) {
  const std::size_t k = pattern.size();
  SplitCounts out;
  if (k == 0 || text.size() < k) return out;
  const std::size_t positions = text.size() - k + 1;
  const std::uint8_t* t = text.data();
  const std::uint8_t* s = term_starts.data();
  const std::uint8_t first = pattern[0];
  for (std::size_t i = 0; i < positions; ++i) {
    if (t[i] != first) continue;
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

std::uint64_t match_count(std::span<const std::uint8_t> text,
                          std::span<const std::uint8_t> pattern) {
  switch (active_isa()) {
#if defined(__x86_64__) || defined(__i386__) || defined(_M_X64)
    case Isa::avx2: return match_count_avx2(text, pattern);
#endif
#if defined(__aarch64__)
    case Isa::neon: return match_count_neon(text, pattern);
#endif
    default: return match_count_scalar(text, pattern);
  }
}

SplitCounts match_count_split(std::span<const std::uint8_t> text,
                              std::span<const std::uint8_t> term_starts,
                              std::span<const std::uint8_t> pattern) {
  switch (active_isa()) {
#if defined(__x86_64__) || defined(__i386__) || defined(_M_X64)
    case Isa::avx2: return match_count_split_avx2(text, term_starts, pattern);
#endif
#if defined(__aarch64__)
    case Isa::neon: return match_count_split_neon(text, term_starts, pattern);
#endif
    default: return match_count_split_scalar(text, term_starts, pattern);
  }
}

}  // namespace champ::kernels

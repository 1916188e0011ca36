#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "champ/arith.hpp"
#include "champ/base.hpp"
#include "champ/core.hpp"
#include "champ/kernels.hpp"

namespace champ::testing {

inline Block make_block(Base base, std::initializer_list<int> digits) {
  std::vector<std::uint8_t> d;
  for (int x : digits) d.push_back(static_cast<std::uint8_t>(x));
  return Block(base, std::move(d));
}

inline Block random_block(Rng& rng, Base base, int length) {
  std::vector<std::uint8_t> d;
  for (int i = 0; i < length; ++i)
    d.push_back(static_cast<std::uint8_t>(rng.below(static_cast<std::uint64_t>(base.value()))));
  return Block(base, std::move(d));
}

// Streaming reference for T(v): walk terms 1..v and count digits one by one.
inline Int streamed_term_digit_count(const Int& term, Base base) {
  Int total = 0;
  for (Int t = 1; t <= term; ++t)
    total += digit_length(t, base.value());
  return total;
}

// Naive window matcher, the reference under the kernel reference.
inline std::uint64_t naive_match_count(const std::vector<std::uint8_t>& text,
                                       const std::vector<std::uint8_t>& pattern) {
  if (pattern.empty() || text.size() < pattern.size()) return 0;
  std::uint64_t count = 0;
  for (std::size_t i = 0; i + pattern.size() <= text.size(); ++i) {
    bool match = true;
    for (std::size_t j = 0; j < pattern.size() && match; ++j)
      match = text[i + j] == pattern[j];
    if (match) ++count;
  }
  return count;
}

inline std::vector<Rat> random_points(Rng& rng, std::size_t count,
                                      std::uint64_t max_den = 1000000) {
  std::vector<Rat> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t den = 1 + rng.below(max_den);
    out.push_back(make_rat(static_cast<unsigned long>(rng.below(den)),
                           static_cast<unsigned long>(den)));
  }
  return out;
}

}  // namespace champ::testing

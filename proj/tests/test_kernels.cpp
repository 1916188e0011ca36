#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "champ/kernels.hpp"
#include "support/helpers.hpp"

using namespace champ;
using kernels::match_count;
using kernels::match_count_scalar;
using kernels::match_count_split;
using kernels::match_count_split_scalar;

namespace {

struct Case {
  std::vector<std::uint8_t> text;
  std::vector<std::uint8_t> starts;
  std::vector<std::uint8_t> pattern;
};

Case random_case(Rng& rng, std::size_t max_len, int max_k) {
  Case c;
  const std::size_t len = rng.below(max_len + 1);
  const int radix = 2 + static_cast<int>(rng.below(9));
  const int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_k)));
  c.text.resize(len);
  c.starts.resize(len);
  for (auto& d : c.text) d = static_cast<std::uint8_t>(rng.below(radix));
  for (auto& s : c.starts) s = rng.below(4) == 0 ? 1 : 0;
  for (int i = 0; i < k; ++i)
    c.pattern.push_back(static_cast<std::uint8_t>(rng.below(radix)));
  return c;
}

}  // namespace

TEST_CASE("scalar kernel equals the naive matcher") {
  Rng rng(101);
  for (int i = 0; i < 400; ++i) {
    const auto c = random_case(rng, 500, 8);
    CHECK(match_count_scalar(c.text, c.pattern) ==
          testing::naive_match_count(c.text, c.pattern));
  }
}

TEST_CASE("dispatched kernels equal the scalar reference") {
  INFO("active isa: " << kernels::isa_name(kernels::active_isa()));
  Rng rng(202);
  // lengths straddling the vector width on purpose
  for (std::size_t len : {std::size_t{0}, std::size_t{1}, std::size_t{31}, std::size_t{32},
                          std::size_t{33}, std::size_t{63}, std::size_t{64}, std::size_t{65}}) {
    for (int k = 1; k <= 6; ++k) {
      Case c;
      c.text.resize(len);
      c.starts.resize(len);
      for (auto& d : c.text) d = static_cast<std::uint8_t>(rng.below(3));
      for (auto& s : c.starts) s = rng.below(3) == 0 ? 1 : 0;
      for (int i = 0; i < k; ++i)
        c.pattern.push_back(static_cast<std::uint8_t>(rng.below(3)));
      CHECK(match_count(c.text, c.pattern) == match_count_scalar(c.text, c.pattern));
      const auto split = match_count_split(c.text, c.starts, c.pattern);
      const auto ref = match_count_split_scalar(c.text, c.starts, c.pattern);
      CHECK(split.within == ref.within);
      CHECK(split.crossing == ref.crossing);
    }
  }
  for (int i = 0; i < 300; ++i) {
    const auto c = random_case(rng, 4000, 8);
    CHECK(match_count(c.text, c.pattern) == match_count_scalar(c.text, c.pattern));
    const auto split = match_count_split(c.text, c.starts, c.pattern);
    const auto ref = match_count_split_scalar(c.text, c.starts, c.pattern);
    CHECK(split.within == ref.within);
    CHECK(split.crossing == ref.crossing);
  }
}

#if defined(__x86_64__) || defined(__i386__) || defined(_M_X64)
TEST_CASE("avx2 variant equals scalar when supported") {
  if (!kernels::avx2_supported()) return;
  Rng rng(303);
  for (int i = 0; i < 300; ++i) {
    const auto c = random_case(rng, 3000, 8);
    CHECK(kernels::match_count_avx2(c.text, c.pattern) ==
          match_count_scalar(c.text, c.pattern));
    const auto split = kernels::match_count_split_avx2(c.text, c.starts, c.pattern);
    const auto ref = match_count_split_scalar(c.text, c.starts, c.pattern);
    CHECK(split.within == ref.within);
    CHECK(split.crossing == ref.crossing);
  }
}
#endif

TEST_CASE("split counts always sum to the plain count") {
  Rng rng(404);
  for (int i = 0; i < 200; ++i) {
    const auto c = random_case(rng, 2000, 6);
    const auto split = match_count_split(c.text, c.starts, c.pattern);
    CHECK(split.within + split.crossing == match_count(c.text, c.pattern));
  }
}

TEST_CASE("single-byte patterns never cross") {
  Rng rng(505);
  const auto c = random_case(rng, 2000, 1);
  const auto split = match_count_split(c.text, c.starts, c.pattern);
  CHECK(split.crossing == 0);
}

TEST_CASE("degenerate inputs") {
  const std::vector<std::uint8_t> text{1, 2, 3};
  const std::vector<std::uint8_t> empty;
  CHECK(match_count(text, empty) == 0);
  CHECK(match_count(empty, text) == 0);
  CHECK(match_count(text, std::vector<std::uint8_t>{1, 2, 3, 4}) == 0);
  CHECK(match_count(text, text) == 1);
}

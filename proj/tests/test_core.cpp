#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "champ/core.hpp"
#include "support/helpers.hpp"

using namespace champ;
using testing::streamed_term_digit_count;

TEST_CASE("term digit count matches worked values") {
  const Base b10(10);
  CHECK(term_digit_count(11, b10) == 13);
  CHECK(term_digit_count(9, b10) == 9);
  // derived: stream the digits of 1..2658 and count
  CHECK(streamed_term_digit_count(2658, b10) == 9525);
  CHECK(term_digit_count(2658, b10) == 9525);
  CHECK_THROWS_AS(term_digit_count(0, b10), std::invalid_argument);
  CHECK_THROWS_AS(term_digit_count(-3, b10), std::invalid_argument);
}

TEST_CASE("consecutive term counts differ by the term's width") {
  Rng rng(7);
  for (int base_value : {2, 3, 10}) {
    const Base base(base_value);
    for (int i = 0; i < 200; ++i) {
      const Int v = Int(static_cast<unsigned long>(rng.below(1000000))) + 2;
      CHECK(term_digit_count(v, base) - term_digit_count(v - 1, base) ==
            digit_length(v, base_value));
    }
  }
}

TEST_CASE("locate reproduces the worked examples") {
  const Base b10(10);
  const auto a = locate(14, b10);
  CHECK(a.term == 12);
  CHECK(a.width == 2);
  CHECK(a.offset == 1);
  const auto b = locate(9523, b10);
  CHECK(b.term == 2658);
  CHECK(b.width == 4);
  CHECK(b.offset == 2);
  const auto c = locate(1, b10);
  CHECK(c.term == 1);
  CHECK(c.width == 1);
  CHECK(c.offset == 1);
  CHECK_THROWS_AS(locate(0, b10), std::invalid_argument);
}

TEST_CASE("locate satisfies its bracketing invariants") {
  Rng rng(11);
  for (int base_value : {2, 3, 10}) {
    const Base base(base_value);
    for (int i = 0; i < 300; ++i) {
      const Int n = Int(static_cast<unsigned long>(rng.below(1000000000000ull))) + 1;
      const auto loc = locate(n, base);
      CHECK(term_digit_count(loc.term, base) >= n);
      if (loc.term > 1) CHECK(term_digit_count(loc.term - 1, base) < n);
      CHECK(loc.width == digit_length(loc.term, base_value));
      CHECK(loc.offset >= 1);
      CHECK(loc.offset <= loc.width);
      CHECK(term_digit_count(loc.term, base) - loc.width + loc.offset == n);
    }
  }
}

TEST_CASE("locate handles huge positions without materialization") {
  const Base b10(10);
  const Int huge = Int("1000000000000000000");  // 10^18
  const auto loc = locate(huge, b10);
  CHECK(term_digit_count(loc.term, b10) >= huge);
  CHECK(term_digit_count(loc.term - 1, b10) < huge);
  CHECK(loc.width == 17);
}

TEST_CASE("digit_at agrees with the stream and the worked digits") {
  const Base b10(10);
  CHECK(digit_at(11, b10) == 0);
  CHECK(digit_at(1, b10) == 1);
  CHECK(digit_at(14, b10) == 1);
  CHECK(digit_at(9523, b10) == 6);

  for (int base_value : {2, 3, 10}) {
    const Base base(base_value);
    DigitStream stream(base);
    for (int n = 1; n <= 20000; ++n)
      REQUIRE(digit_at(n, base) == int(stream.next()));
  }
}

TEST_CASE("digit stream prefixes") {
  DigitStream ten(Base(10));
  const int expect10[] = {1, 2, 3, 4, 5, 6, 7, 8, 9, 1, 0, 1};
  for (int d : expect10) CHECK(int(ten.next()) == d);

  DigitStream two(Base(2));
  const int expect2[] = {1, 1, 0, 1, 1, 1, 0, 0};
  for (int d : expect2) CHECK(int(two.next()) == d);
}

TEST_CASE("prefix breakdown matches the worked splits") {
  const Base b10(10);
  const auto a = prefix_breakdown(14, b10);
  CHECK(a.before_segment == 9);
  CHECK(a.within_segment == 6);
  const auto b = prefix_breakdown(9523, b10);
  CHECK(b.before_segment == 2889);
  CHECK(b.within_segment == 6636);

  // first term of a segment: M equals the term width
  const auto c = prefix_breakdown(10, b10);
  CHECK(locate(10, b10).term == 10);
  CHECK(c.within_segment == 2);
  const auto d = prefix_breakdown(190, b10);
  CHECK(locate(190, b10).term == 100);
  CHECK(d.within_segment == 3);

  Rng rng(3);
  for (int base_value : {2, 10}) {
    const Base base(base_value);
    for (int i = 0; i < 200; ++i) {
      const Int n = Int(static_cast<unsigned long>(rng.below(100000000))) + 1;
      const auto loc = locate(n, base);
      const auto parts = prefix_breakdown(n, base);
      CHECK(parts.before_segment <= n);
      CHECK(n <= parts.before_segment + parts.within_segment);
      // at the end of a segment, L + M is the total digit count through it
      if (loc.term == SegmentId(base, loc.width).last_term()) {
        Int full = 0;
        Int power = 1;
        for (int j = 1; j <= loc.width; ++j) {
          full += Int(j) * (base_value - 1) * power;
          power *= base_value;
        }
        CHECK(parts.before_segment + parts.within_segment == full);
      }
    }
  }
}

TEST_CASE("materialized buffers agree with the stream and flag term starts") {
  for (int base_value : {2, 10}) {
    const Base base(base_value);
    const std::size_t count = 5000;
    const auto plain = first_digits(base, count);
    const auto buffer = first_digits_with_starts(base, count);
    DigitStream stream(base);
    REQUIRE(plain.size() == count);
    REQUIRE(buffer.digits.size() == count);
    for (std::size_t i = 0; i < count; ++i) {
      const auto d = stream.next();
      REQUIRE(plain[i] == d);
      REQUIRE(buffer.digits[i] == d);
    }
    Int next_start = 0;  // 0-based position where the next term begins
    Int v = 1;
    for (std::size_t i = 0; i < count; ++i) {
      const bool is_start = next_start == static_cast<unsigned long>(i);
      CHECK(bool(buffer.term_starts[i]) == is_start);
      if (is_start) {
        next_start += digit_length(v, base_value);
        v += 1;
      }
    }
  }
}

TEST_CASE("segment digits cover exactly the segment's terms") {
  const SegmentId s3(Base(10), 3);
  const auto buffer = segment_digits(s3);
  REQUIRE(buffer.digits.size() == 2700);
  CHECK(buffer.digits[0] == 1);
  CHECK(buffer.digits[1] == 0);
  CHECK(buffer.digits[2] == 0);
  CHECK(buffer.term_starts[0] == 1);
  CHECK(buffer.term_starts[1] == 0);
  CHECK(buffer.term_starts[3] == 1);
  CHECK(buffer.digits[2697] == 9);
  CHECK(buffer.digits[2698] == 9);
  CHECK(buffer.digits[2699] == 9);
  CHECK(SegmentId(Base(10), 3).first_term() == 100);
  CHECK(SegmentId(Base(10), 3).last_term() == 999);
  CHECK_THROWS_AS(SegmentId(Base(10), 0), std::invalid_argument);
}

TEST_CASE("digit materialization respects the guard") {
  CHECK_THROWS_AS(first_digits(Base(10), kMaterializeLimit + 1), infeasible_error);
}

TEST_CASE("base and block validation") {
  CHECK_THROWS_AS(Base(1), std::invalid_argument);
  CHECK_THROWS_AS(Base(-2), std::invalid_argument);
  CHECK_THROWS_AS(Block(Base(10), {}), std::invalid_argument);
  CHECK_THROWS_AS(Block(Base(2), {2}), std::invalid_argument);
  CHECK(Block::parse(Base(10), "407").digits() == std::vector<std::uint8_t>{4, 0, 7});
  CHECK(Block::parse(Base(16), "15,0,11").digits() == std::vector<std::uint8_t>{15, 0, 11});
  CHECK_THROWS_AS(Block::parse(Base(16), "15"), std::invalid_argument);
  CHECK_THROWS_AS(Block::parse(Base(10), "1x"), std::invalid_argument);
}

TEST_CASE("decimal rendering is exact and deterministic") {
  CHECK(decimal_string(make_rat(1, 3), 6) == "0.333333");
  CHECK(decimal_string(make_rat(2, 3), 6) == "0.666667");
  CHECK(decimal_string(make_rat(-1, 8), 3) == "-0.125");
  CHECK(decimal_string(Rat(5), 2) == "5.00");
  CHECK(decimal_string(make_rat(1, 2), 0) == "1");  // half away from zero
}

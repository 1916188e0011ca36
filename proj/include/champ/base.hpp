#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "champ/arith.hpp"

namespace champ {

// Radix b >= 2 of the positional system whose concatenation constant is studied.
class Base {
 public:
  explicit Base(int radix);
  int value() const { return radix_; }

  friend bool operator==(Base a, Base b) { return a.radix_ == b.radix_; }

 private:
  int radix_;
};

// A fixed digit pattern (b1 ... bk), each digit in [0, b-1], k >= 1.
class Block {
 public:
  Block(Base base, std::vector<std::uint8_t> digits);

  Base base() const { return base_; }
  const std::vector<std::uint8_t>& digits() const { return digits_; }
  int length() const { return static_cast<int>(digits_.size()); }
  std::uint8_t leading() const { return digits_.front(); }

  // Digits [from, from+len) read as a base-b integer.
  Int value_of_range(int from, int len) const;
  Int value() const { return value_of_range(0, length()); }

  // "12" for b <= 10, "1,2" otherwise.
  std::string to_string() const;

  // Accepts the compact form ("407") for b <= 10 and the comma form
  // ("4,0,7") for any base.
  static Block parse(Base base, const std::string& text);

  friend bool operator==(const Block& a, const Block& b) {
    return a.base_ == b.base_ && a.digits_ == b.digits_;
  }

 private:
  Base base_;
  std::vector<std::uint8_t> digits_;
};

// Segment s_len: the terms with exactly `len` digits, b^(len-1) .. b^len - 1.
class SegmentId {
 public:
  SegmentId(Base base, int length);

  Base base() const { return base_; }
  int length() const { return length_; }
  Int first_term() const;
  Int last_term() const;
  Int term_count() const;
  Int digit_count() const { return term_count() * length_; }

 private:
  Base base_;
  int length_;
};

}  // namespace champ

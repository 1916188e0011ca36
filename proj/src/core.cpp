#include "champ/core.hpp"

#include <stdexcept>

namespace champ {

namespace {

void check_position(const Int& position) {
  if (position < 1) throw std::invalid_argument("position must be >= 1");
}

std::size_t checked_count(std::size_t count) {
  if (count > kMaterializeLimit)
    throw infeasible_error("digit materialization over limit");
  return count;
}

// Fixed-width odometer step for terms inside one segment.
// Returns false on wrap (term was all b-1 digits).
bool increment_fixed(std::vector<std::uint8_t>& digits, int radix) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] != radix - 1) {
      ++digits[i];
      return true;
    }
    digits[i] = 0;
  }
  return false;
}

}  // namespace

Int digits_before_segment(int length, Base base) {
  if (length < 1) throw std::invalid_argument("segment length must be >= 1");
  const int b = base.value();
  Int total = 0;
  Int power = 1;  // b^(j-1)
  for (int j = 1; j < length; ++j) {
    total += Int(j) * (b - 1) * power;
    power *= b;
  }
  return total;
}

Int term_digit_count(const Int& term, Base base) {
  if (term < 1) throw std::invalid_argument("term must be >= 1");
  const int n = digit_length(term, base.value());
  const Int first = int_pow(static_cast<unsigned long>(base.value()),
                            static_cast<unsigned long>(n - 1));
  return digits_before_segment(n, base) + Int(n) * (term - first + 1);
}

TermLocator locate(const Int& position, Base base) {
  check_position(position);
  const int b = base.value();

  Int before = 0;          // digits of s_1 .. s_{n-1}
  Int seg_terms = b - 1;   // terms in s_n
  int n = 1;
  for (;;) {
    Int seg_digits = Int(n) * seg_terms;
    if (before + seg_digits >= position) break;
    before += seg_digits;
    seg_terms *= b;
    ++n;
  }

  Int index = (position - before - 1) / n;  // 0-based term index inside s_n
  TermLocator loc;
  loc.term = int_pow(static_cast<unsigned long>(b), static_cast<unsigned long>(n - 1)) + index;
  loc.width = n;
  loc.offset = static_cast<int>(Int(position - before - index * n).get_ui());
  return loc;
}

int digit_at(const Int& position, Base base) {
  const TermLocator loc = locate(position, base);
  // offset-th most significant digit of the term
  Int shifted = loc.term / int_pow(static_cast<unsigned long>(base.value()),
                                   static_cast<unsigned long>(loc.width - loc.offset));
  return static_cast<int>(Int(shifted % base.value()).get_ui());
}

PrefixBreakdown prefix_breakdown(const Int& position, Base base) {
  const TermLocator loc = locate(position, base);
  PrefixBreakdown out;
  out.before_segment = digits_before_segment(loc.width, base);
  const Int first = int_pow(static_cast<unsigned long>(base.value()),
                            static_cast<unsigned long>(loc.width - 1));
  out.within_segment = Int(loc.width) * (loc.term - first + 1);
  return out;
}

std::vector<std::uint8_t> digits_of_term(const Int& term, Base base) {
  if (term < 1) throw std::invalid_argument("term must be >= 1");
  std::vector<std::uint8_t> out;
  Int v = term;
  while (v != 0) {
    out.push_back(static_cast<std::uint8_t>(Int(v % base.value()).get_ui()));
    v /= base.value();
  }
  for (std::size_t i = 0, j = out.size() - 1; i < j; ++i, --j) std::swap(out[i], out[j]);
  return out;
}

DigitStream::DigitStream(Base base) : radix_(base.value()), term_{1}, pos_(0) {}

std::uint8_t DigitStream::next() {
  if (pos_ == term_.size()) {
    if (!increment_fixed(term_, radix_)) {
      term_.assign(term_.size() + 1, 0);
      term_[0] = 1;
    }
    pos_ = 0;
  }
  return term_[pos_++];
}

std::vector<std::uint8_t> first_digits(Base base, std::size_t count) {
  checked_count(count);
  std::vector<std::uint8_t> out;
  out.reserve(count);
  std::vector<std::uint8_t> term{1};
  while (out.size() < count) {
    for (std::uint8_t d : term) {
      out.push_back(d);
      if (out.size() == count) break;
    }
    if (!increment_fixed(term, base.value())) {
      term.assign(term.size() + 1, 0);
      term[0] = 1;
    }
  }
  return out;
}

DigitBuffer first_digits_with_starts(Base base, std::size_t count) {
  checked_count(count);
  DigitBuffer out;
  out.digits.reserve(count);
  out.term_starts.reserve(count);
  std::vector<std::uint8_t> term{1};
  while (out.digits.size() < count) {
    for (std::size_t i = 0; i < term.size() && out.digits.size() < count; ++i) {
      out.digits.push_back(term[i]);
      out.term_starts.push_back(i == 0 ? 1 : 0);
    }
    if (!increment_fixed(term, base.value())) {
      term.assign(term.size() + 1, 0);
      term[0] = 1;
    }
  }
  return out;
}

DigitBuffer segment_digits(const SegmentId& segment) {
  const Int total = segment.digit_count();
  if (total > static_cast<unsigned long>(kMaterializeLimit))
    throw infeasible_error("segment materialization over limit");
  const std::size_t count = static_cast<std::size_t>(total.get_ui());

  DigitBuffer out;
  out.digits.reserve(count);
  out.term_starts.reserve(count);
  std::vector<std::uint8_t> term(static_cast<std::size_t>(segment.length()), 0);
  term[0] = 1;  // b^(len-1)
  const Int terms = segment.term_count();
  for (Int i = 0; i < terms; ++i) {
    for (std::size_t j = 0; j < term.size(); ++j) {
      out.digits.push_back(term[j]);
      out.term_starts.push_back(j == 0 ? 1 : 0);
    }
    increment_fixed(term, segment.base().value());
  }
  return out;
}

}  // namespace champ

#include "champ/base.hpp"

#include <stdexcept>

namespace champ {

namespace {
constexpr int kMaxRadix = 256;  // digits are stored in bytes
}

Base::Base(int radix) : radix_(radix) {
  if (radix < 2 || radix > kMaxRadix)
    throw std::invalid_argument("Base: radix must be in [2, 256]");
}

Block::Block(Base base, std::vector<std::uint8_t> digits)
    : base_(base), digits_(std::move(digits)) {
  if (digits_.empty()) throw std::invalid_argument("Block: needs at least one digit");
  for (std::uint8_t d : digits_)
    if (d >= base_.value())
      throw std::invalid_argument("Block: digit out of range for base");
}

Int Block::value_of_range(int from, int len) const {
  if (from < 0 || len < 0 || from + len > length())
    throw std::invalid_argument("Block: range out of bounds");
  Int v = 0;
  for (int i = from; i < from + len; ++i) v = v * base_.value() + digits_[static_cast<std::size_t>(i)];
  return v;
}

std::string Block::to_string() const {
  std::string out;
  const bool compact = base_.value() <= 10;
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (compact) {
      out += static_cast<char>('0' + digits_[i]);
    } else {
      if (i) out += ',';
      out += std::to_string(int(digits_[i]));
    }
  }
  return out;
}

Block Block::parse(Base base, const std::string& text) {
  if (text.empty()) throw std::invalid_argument("Block: empty pattern");
  std::vector<std::uint8_t> digits;
  if (text.find(',') != std::string::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      std::string piece = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (piece.empty()) throw std::invalid_argument("Block: empty digit in pattern");
      int value = std::stoi(piece);
      if (value < 0 || value >= base.value())
        throw std::invalid_argument("Block: digit out of range for base");
      digits.push_back(static_cast<std::uint8_t>(value));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  } else {
    if (base.value() > 10)
      throw std::invalid_argument("Block: bases above 10 need comma-separated digits");
    for (char c : text) {
      if (c < '0' || c > '9') throw std::invalid_argument("Block: invalid digit character");
      digits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
  }
  return Block(base, std::move(digits));
}

SegmentId::SegmentId(Base base, int length) : base_(base), length_(length) {
  if (length < 1) throw std::invalid_argument("SegmentId: length must be >= 1");
}

Int SegmentId::first_term() const {
  return int_pow(static_cast<unsigned long>(base_.value()),
                 static_cast<unsigned long>(length_ - 1));
}

Int SegmentId::last_term() const {
  return int_pow(static_cast<unsigned long>(base_.value()),
                 static_cast<unsigned long>(length_)) - 1;
}

Int SegmentId::term_count() const { return last_term() - first_term() + 1; }

}  // namespace champ

#include "champ/counting.hpp"

#include <algorithm>
#include <stdexcept>

#include "champ/kernels.hpp"

namespace champ {

namespace {

std::size_t to_size(const Int& n) {
  if (n < 0 || n > static_cast<unsigned long>(kMaterializeLimit))
    throw infeasible_error("prefix too long to materialize");
  return static_cast<std::size_t>(n.get_ui());
}

std::span<const std::uint8_t> as_span(const std::vector<std::uint8_t>& v) {
  return {v.data(), v.size()};
}

// -1 / 0 / +1 comparison of the block against term digits [from, from+k).
int compare_block_at(const Block& block, const std::vector<std::uint8_t>& term_digits, int from) {
  const auto& b = block.digits();
  for (std::size_t i = 0; i < b.size(); ++i) {
    const std::uint8_t d = term_digits[static_cast<std::size_t>(from) + i];
    if (b[i] != d) return b[i] < d ? -1 : 1;
  }
  return 0;
}

Int value_of_digits(const std::vector<std::uint8_t>& digits, int from, int len, int radix) {
  Int v = 0;
  for (int i = from; i < from + len; ++i)
    v = v * radix + digits[static_cast<std::size_t>(i)];
  return v;
}

// Occurrences of the block crossing the boundary between `left` and `right`
// (consecutive terms), with only the first `right_avail` digits of `right`
// inside the prefix. Counts window positions; one boundary can host several.
Int seam_crossings(const Block& block, const Int& left, const Int& right,
                   int right_avail, Base base) {
  const int k = block.length();
  if (k < 2 || right_avail < 1) return 0;
  const auto ld = digits_of_term(left, base);
  const auto rd = digits_of_term(right, base);

  Int count = 0;
  const int max_split = std::min({k - 1, right_avail, static_cast<int>(rd.size())});
  for (int s = 1; s <= max_split; ++s) {
    const int on_left = k - s;
    if (on_left > static_cast<int>(ld.size())) continue;
    bool ok = true;
    for (int i = 0; i < on_left && ok; ++i)
      ok = block.digits()[static_cast<std::size_t>(i)] ==
           ld[ld.size() - static_cast<std::size_t>(on_left) + static_cast<std::size_t>(i)];
    for (int i = 0; i < s && ok; ++i)
      ok = block.digits()[static_cast<std::size_t>(on_left + i)] == rd[static_cast<std::size_t>(i)];
    if (ok) count += 1;
  }
  return count;
}

}  // namespace

WitnessPair::WitnessPair(Block excess, Block deficit)
    : excess_(std::move(excess)), deficit_(std::move(deficit)) {
  if (!(excess_.base() == deficit_.base()))
    throw std::invalid_argument("WitnessPair: blocks must share a base");
  if (excess_.length() != deficit_.length() || excess_.length() < 2)
    throw std::invalid_argument("WitnessPair: blocks must have equal length >= 2");
  for (std::uint8_t d : deficit_.digits())
    if (d != 0) throw std::invalid_argument("WitnessPair: deficit block must be all zeros");
  const auto& e = excess_.digits();
  if (e[0] == 0 || e[0] != e[1])
    throw std::invalid_argument("WitnessPair: excess block must start with two equal nonzero digits");
  if (e.back() == excess_.base().value() - 1)
    throw std::invalid_argument("WitnessPair: excess block must not end in the top digit");
}

WitnessPair WitnessPair::minimal(Base base, int length) {
  if (length < 2) throw std::invalid_argument("WitnessPair: length must be >= 2");
  std::vector<std::uint8_t> e(static_cast<std::size_t>(length), 0);
  e[0] = e[1] = 1;
  std::vector<std::uint8_t> z(static_cast<std::size_t>(length), 0);
  return WitnessPair(Block(base, std::move(e)), Block(base, std::move(z)));
}

Int occ_brute(Base base, const Block& block, const Int& prefix_len) {
  if (prefix_len < 1) throw std::invalid_argument("prefix_len must be >= 1");
  if (prefix_len < block.length()) return 0;
  const std::size_t n = to_size(prefix_len);
  const auto digits = first_digits(base, n);
  return Int(static_cast<unsigned long>(
      kernels::match_count(as_span(digits), as_span(block.digits()))));
}

OccurrenceReport occ_split_brute(Base base, const Block& block, const Int& prefix_len) {
  if (prefix_len < 1) throw std::invalid_argument("prefix_len must be >= 1");
  OccurrenceReport report{0, 0, 0};
  if (prefix_len < block.length()) return report;
  const std::size_t n = to_size(prefix_len);
  const auto buffer = first_digits_with_starts(base, n);
  const auto counts = kernels::match_count_split(
      as_span(buffer.digits), as_span(buffer.term_starts), as_span(block.digits()));
  report.non_overlapping = static_cast<unsigned long>(counts.within);
  report.overlapping = static_cast<unsigned long>(counts.crossing);
  report.total = report.non_overlapping + report.overlapping;
  return report;
}

Int occ_no_segment(const Block& block, const SegmentId& segment) {
  const int len = segment.length();
  const int k = block.length();
  const int b = segment.base().value();
  if (len < k) return 0;
  Int count = 0;
  if (block.leading() != 0)
    count += int_pow(static_cast<unsigned long>(b), static_cast<unsigned long>(len - k));
  if (len > k)
    count += Int(len - k) * (b - 1) *
             int_pow(static_cast<unsigned long>(b), static_cast<unsigned long>(len - k - 1));
  return count;
}

Int boundary_count(const Block& block, const Int& term, int position, Base base) {
  const int b = base.value();
  const int k = block.length();
  const auto vd = digits_of_term(term, base);
  const int n = static_cast<int>(vd.size());
  if (position < 0 || position > n - k)
    throw std::invalid_argument("boundary_count: position out of range");
  const int free_digits = n - k - position;
  switch (compare_block_at(block, vd, position)) {
    case 1:
      return 0;
    case 0:
      return value_of_digits(vd, position + k, free_digits, b) + 1;
    default:
      return int_pow(static_cast<unsigned long>(b), static_cast<unsigned long>(free_digits));
  }
}

PositionCount occ_no_position(const Block& block, const Int& term, int position, Base base) {
  const int b = base.value();
  const int k = block.length();
  const auto vd = digits_of_term(term, base);
  const int n = static_cast<int>(vd.size());
  if (position < 0 || position > n - k)
    throw std::invalid_argument("occ_no_position: position out of range");

  PositionCount out{position, 0};
  if (position == 0) {
    // leading placement: the block itself is the prefix, so a zero leading
    // digit contributes nothing
    if (block.leading() != 0) out.count = boundary_count(block, term, 0, base);
    return out;
  }
  // prefixes strictly below the term's own j-digit prefix leave the
  // remaining digits free; the prefix-equal case is the boundary count
  const Int prefix = value_of_digits(vd, 0, position, b);
  const Int lowest = int_pow(static_cast<unsigned long>(b), static_cast<unsigned long>(position - 1));
  out.count = (prefix - lowest) *
                  int_pow(static_cast<unsigned long>(b),
                          static_cast<unsigned long>(n - k - position)) +
              boundary_count(block, term, position, base);
  return out;
}

Int occ_no_up_to(const Block& block, const Int& term, Base base) {
  if (term < 1) throw std::invalid_argument("occ_no_up_to: term must be >= 1");
  const int n = digit_length(term, base.value());
  const int k = block.length();
  if (n < k) return 0;
  Int total = 0;
  for (int j = 0; j <= n - k; ++j)
    total += occ_no_position(block, term, j, base).count;
  return total;
}

Int occ_o_straddles(const Block& block, const Int& first_lo, const Int& first_hi,
                    int term_width, Base base) {
  const int k = block.length();
  const int b = base.value();
  if (k < 2 || first_hi < first_lo) return 0;

  Int total = 0;
  for (int split = 1; split <= k - 1; ++split) {
    // `split` digits of the block sit in x+1, k-split at the end of x
    if (split > term_width || k - split > term_width) continue;
    const Int modulus =
        int_pow(static_cast<unsigned long>(b), static_cast<unsigned long>(k - split));
    const Int suffix = block.value_of_range(0, k - split);
    const Int prefix = block.value_of_range(k - split, split);
    const Int scale =
        int_pow(static_cast<unsigned long>(b), static_cast<unsigned long>(term_width - split));
    // x+1 in [prefix*scale, (prefix+1)*scale)
    const Int lo = std::max(first_lo, Int(prefix * scale - 1));
    const Int hi = std::min(first_hi, Int((prefix + 1) * scale - 2));
    if (hi < lo) continue;
    total += floor_div(hi - suffix, modulus) - floor_div(lo - 1 - suffix, modulus);
  }
  return total;
}

Int occ_o_segment_exact(const Block& block, const SegmentId& segment) {
  if (block.length() < 2)
    throw std::invalid_argument("occ_o_segment_exact: block length must be >= 2");
  const Int lo = segment.first_term();
  const Int hi = segment.last_term() - 1;
  if (hi < lo) return 0;  // single-term segment has no interior boundary
  return occ_o_straddles(block, lo, hi, segment.length(), segment.base());
}

Int occ_o_segment_bound(const Block& block, const SegmentId& segment) {
  const int k = block.length();
  if (k < 2) throw std::invalid_argument("occ_o_segment_bound: block length must be >= 2");
  if (segment.length() < k)
    throw std::invalid_argument("occ_o_segment_bound: segment narrower than block");
  return Int(k - 1) * int_pow(static_cast<unsigned long>(segment.base().value()),
                              static_cast<unsigned long>(segment.length() - k));
}

OccurrenceReport occ_exact(Base base, const Block& block, const Int& prefix_len) {
  if (prefix_len < 1) throw std::invalid_argument("prefix_len must be >= 1");
  const int b = base.value();
  const int k = block.length();
  const TermLocator loc = locate(prefix_len, base);
  const int n = loc.width;

  // Terms no wider than the block: windows may span three or more terms, and
  // the whole prefix is small, so stream it.
  if (n <= k) return occ_split_brute(base, block, prefix_len);

  Int within = 0;
  Int crossing = 0;

  // Windows starting inside segments narrower than the block. None fits in a
  // term there, so every hit crosses a boundary; the strip is the first
  // T(b^(k-1)-1) digits plus a (k-1)-digit sleeve for windows reaching out.
  if (k >= 2) {
    const Int strip_starts = term_digit_count(
        int_pow(static_cast<unsigned long>(b), static_cast<unsigned long>(k - 1)) - 1, base);
    const std::size_t strip_len = to_size(strip_starts + (k - 1));
    const auto strip = first_digits_with_starts(base, strip_len);
    const auto counts = kernels::match_count_split(
        as_span(strip.digits), as_span(strip.term_starts), as_span(block.digits()));
    if (counts.within != 0)
      throw std::logic_error("occ_exact: non-crossing hit inside narrow segments");
    crossing += static_cast<unsigned long>(counts.crossing);
  }

  const Int first_of_current = int_pow(static_cast<unsigned long>(b),
                                       static_cast<unsigned long>(n - 1));

  // Full segments s_k .. s_{n-1}: closed-form interior counts plus the seam
  // into the next segment.
  for (int len = k; len <= n - 1; ++len) {
    const SegmentId segment(base, len);
    within += occ_no_segment(block, segment);
    if (k >= 2) {
      crossing += occ_o_segment_exact(block, segment);
      const Int seam_left = segment.last_term();
      int right_avail = k - 1;
      if (len + 1 == n && loc.term == first_of_current)
        right_avail = std::min(right_avail, loc.offset);
      crossing += seam_crossings(block, seam_left, seam_left + 1, right_avail, base);
    }
  }

  // Current segment, cut at the located term.
  if (loc.term > first_of_current) {
    within += occ_no_up_to(block, loc.term - 1, base);
    if (k >= 2) {
      if (loc.term - 2 >= first_of_current)
        crossing += occ_o_straddles(block, first_of_current, loc.term - 2, n, base);
      crossing += seam_crossings(block, loc.term - 1, loc.term,
                                 std::min(k - 1, loc.offset), base);
    }
  }
  // Consumed prefix of the located term itself.
  if (loc.offset >= k) {
    const auto vd = digits_of_term(loc.term, base);
    within += Int(static_cast<unsigned long>(kernels::match_count(
        {vd.data(), static_cast<std::size_t>(loc.offset)}, as_span(block.digits()))));
  }

  OccurrenceReport report;
  report.non_overlapping = within;
  report.overlapping = crossing;
  report.total = within + crossing;
  return report;
}

Rat normalized_residual(Base base, const Block& block, const Int& prefix_len) {
  const OccurrenceReport report = occ_exact(base, block, prefix_len);
  const int n = locate(prefix_len, base).width;
  const Int bk = int_pow(static_cast<unsigned long>(base.value()),
                         static_cast<unsigned long>(block.length()));
  const Int bn = int_pow(static_cast<unsigned long>(base.value()),
                         static_cast<unsigned long>(n));
  // (occ - N b^-k) / b^(n-k) == (occ b^k - N) / b^n
  return make_rat(report.total * bk - prefix_len, bn);
}

Int witness_gap(Base base, const WitnessPair& pair, const Int& prefix_len) {
  if (prefix_len < 1) throw std::invalid_argument("prefix_len must be >= 1");
  if (locate(prefix_len, base).width < pair.length())
    throw std::invalid_argument("witness_gap: prefix too short for the pair length");
  return occ_exact(base, pair.excess(), prefix_len).total -
         occ_exact(base, pair.deficit(), prefix_len).total;
}

}  // namespace champ

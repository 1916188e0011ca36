#include "champ/discrepancy.hpp"

#include <algorithm>
#include <stdexcept>

#include "champ/core.hpp"

namespace champ {

namespace {

Int pow_int(int base, int exp) {
  return int_pow(static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
}

void check_unit_interval(std::span<const Rat> points) {
  if (points.empty()) throw std::invalid_argument("discrepancy of an empty point set");
  for (const Rat& y : points)
    if (y < 0 || y >= 1)
      throw std::invalid_argument("discrepancy points must lie in [0, 1)");
}

// Truncated shift values as rationals over b^precision.
std::vector<Rat> shift_values(Base base, std::uint64_t count, int precision) {
  if (count < 1) throw std::invalid_argument("need at least one shift point");
  if (precision < 1) throw std::invalid_argument("precision must be >= 1");
  const int b = base.value();
  const std::size_t digits_needed = static_cast<std::size_t>(count) +
                                    static_cast<std::size_t>(precision) - 1;
  const auto digits = first_digits(base, digits_needed);

  const Int den = pow_int(b, precision);
  const Int msd = pow_int(b, precision - 1);
  Int window = 0;
  for (int j = 0; j < precision; ++j) window = window * b + digits[static_cast<std::size_t>(j)];

  std::vector<Rat> values;
  values.reserve(static_cast<std::size_t>(count));
  for (std::uint64_t n = 0;;) {
    values.push_back(make_rat(window, den));
    if (++n == count) break;
    window = (window - digits[static_cast<std::size_t>(n - 1)] * msd) * b +
             digits[static_cast<std::size_t>(n) + static_cast<std::size_t>(precision) - 1];
  }
  return values;
}

}  // namespace

IntervalSpec::IntervalSpec(Base base, Rat lower, Rat upper, int depth)
    : base_(base), lower_(std::move(lower)), upper_(std::move(upper)), depth_(depth) {
  if (depth < 1) throw std::invalid_argument("IntervalSpec: depth must be >= 1");
  if (lower_ < 0 || lower_ >= upper_ || upper_ > 1)
    throw std::invalid_argument("IntervalSpec: need 0 <= lower < upper <= 1");
  const Int scale = pow_int(base_.value(), depth_);
  for (const Rat& end : {lower_, upper_}) {
    Rat scaled = end * scale;
    if (scaled.get_den() != 1)
      throw std::invalid_argument("IntervalSpec: endpoint does not terminate at this depth");
  }
}

Int IntervalSpec::scaled_lower() const {
  return Rat(lower_ * pow_int(base_.value(), depth_)).get_num();
}

Int IntervalSpec::scaled_upper() const {
  return Rat(upper_ * pow_int(base_.value(), depth_)).get_num();
}

WitnessConstants WitnessConstants::for_length(Base base, int length) {
  if (length < 2) throw std::invalid_argument("witness length must be >= 2");
  WitnessConstants out;
  out.occurrence_constant = make_rat(1, pow_int(base.value(), length + 1));
  out.discrepancy_constant = out.occurrence_constant / 3;
  return out;
}

std::vector<ShiftPoint> shift_points(Base base, std::uint64_t count, int precision) {
  auto values = shift_values(base, count, precision);
  std::vector<ShiftPoint> points;
  points.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    points.push_back({static_cast<std::uint64_t>(i + 1), std::move(values[i]), precision});
  return points;
}

Rat star_discrepancy(std::span<const Rat> points) {
  check_unit_interval(points);
  std::vector<Rat> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  const unsigned long n = static_cast<unsigned long>(sorted.size());

  Rat best(0);
  for (unsigned long i = 1; i <= n; ++i) {
    const Rat& y = sorted[i - 1];
    Rat high = make_rat(i, n) - y;          // right limit at y
    Rat low = y - make_rat(i - 1, n);       // left limit at y
    if (high > best) best = high;
    if (low > best) best = low;
  }
  return best;
}

Rat extreme_discrepancy(std::span<const Rat> points) {
  check_unit_interval(points);
  std::vector<Rat> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  const unsigned long n = static_cast<unsigned long>(sorted.size());

  Rat max_over(make_rat(1, n) - sorted[0]);
  Rat min_over = max_over;
  for (unsigned long i = 2; i <= n; ++i) {
    Rat d = make_rat(i, n) - sorted[i - 1];
    if (d > max_over) max_over = d;
    if (d < min_over) min_over = d;
  }
  return make_rat(1, n) + max_over - min_over;
}

int min_shift_precision(Base base, std::uint64_t count) {
  // smallest m with b^m >= count, plus two guard digits
  int m = 0;
  Int power = 1;
  while (power < static_cast<unsigned long>(count)) {
    power *= base.value();
    ++m;
  }
  return m + 2;
}

DiscrepancyEstimate discrepancy_of_c(Base base, std::uint64_t count, int precision) {
  if (precision < min_shift_precision(base, count))
    throw std::invalid_argument("discrepancy_of_c: truncation depth too small for N");
  const auto values = shift_values(base, count, precision);
  DiscrepancyEstimate out;
  out.value = extreme_discrepancy(values);
  out.radius = make_rat(2, pow_int(base.value(), precision));
  return out;
}

Rat interval_count(Base base, const IntervalSpec& interval, std::uint64_t count) {
  if (count < 1) throw std::invalid_argument("interval_count: need count >= 1");
  const int b = base.value();
  const int h = interval.depth();
  const Int lo = interval.scaled_lower();
  const Int hi = interval.scaled_upper();

  const std::size_t digits_needed = static_cast<std::size_t>(count) +
                                    static_cast<std::size_t>(h) - 1;
  const auto digits = first_digits(base, digits_needed);
  const Int msd = pow_int(b, h - 1);
  Int window = 0;
  for (int j = 0; j < h; ++j) window = window * b + digits[static_cast<std::size_t>(j)];

  Int hits = 0;
  for (std::uint64_t n = 0;;) {
    if (window >= lo && window < hi) hits += 1;
    if (++n == count) break;
    window = (window - digits[static_cast<std::size_t>(n - 1)] * msd) * b +
             digits[static_cast<std::size_t>(n) + static_cast<std::size_t>(h) - 1];
  }
  return make_rat(hits, count) - (interval.upper() - interval.lower());
}

std::pair<Rat, Rat> decomposition_check(Base base, const Rat& gamma, int depth,
                                        std::uint64_t count) {
  if (gamma < 0 || gamma >= 1)
    throw std::invalid_argument("decomposition_check: gamma must lie in [0, 1)");
  if (depth < 1) throw std::invalid_argument("decomposition_check: depth must be >= 1");
  if (gamma == 0) return {Rat(0), Rat(0)};

  const int b = base.value();
  Rat scaled = gamma * pow_int(b, depth);
  if (scaled.get_den() != 1)
    throw std::invalid_argument("decomposition_check: gamma does not terminate at this depth");

  // digits of gamma, most significant first
  std::vector<int> gd(static_cast<std::size_t>(depth), 0);
  Int g = scaled.get_num();
  for (int i = depth - 1; i >= 0; --i) {
    gd[static_cast<std::size_t>(i)] = static_cast<int>(Int(g % b).get_ui());
    g /= b;
  }

  Rat left(0);
  Int prefix = 0;  // value of gamma_1 .. gamma_{level-1}
  for (int level = 1; level <= depth; ++level) {
    const Int den = pow_int(b, level);
    for (int j = 0; j < gd[static_cast<std::size_t>(level - 1)]; ++j) {
      const Rat lo = make_rat(prefix * b + j, den);
      const IntervalSpec piece(base, lo, lo + make_rat(1, den), level);
      left += interval_count(base, piece, count);
    }
    prefix = prefix * b + gd[static_cast<std::size_t>(level - 1)];
  }

  const Rat right =
      interval_count(base, IntervalSpec(base, Rat(0), gamma, depth), count);
  return {left, right};
}

Rat witness_lower_bound(Base base, const WitnessPair& pair, const Int& count) {
  if (count < 1) throw std::invalid_argument("witness_lower_bound: count must be >= 1");
  const Int gap = witness_gap(base, pair, count + pair.length() - 1);
  return make_rat(abs(gap), 2 * count);
}

std::vector<DiscrepancyRow> discrepancy_table(Base base, std::span<const std::uint64_t> grid,
                                              int witness_length) {
  if (grid.empty()) throw std::invalid_argument("discrepancy_table: empty grid");
  const WitnessPair pair = WitnessPair::minimal(base, witness_length);
  std::vector<DiscrepancyRow> rows;
  rows.reserve(grid.size());
  for (std::uint64_t n : grid) {
    DiscrepancyRow row;
    row.prefix_len = static_cast<unsigned long>(n);
    row.estimate = discrepancy_of_c(base, n, min_shift_precision(base, n) + 2);
    row.lower_bound = witness_lower_bound(base, pair, row.prefix_len);
    row.gap = witness_gap(base, pair, row.prefix_len);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace champ

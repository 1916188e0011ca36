#include "champ/selfcheck.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "champ/counting.hpp"
#include "champ/core.hpp"
#include "champ/discrepancy.hpp"
#include "champ/kernels.hpp"

namespace champ {

namespace oracle {

namespace {

struct Endpoint {
  Rat value;
  Int below;         // points strictly less
  Int multiplicity;  // points equal
};

std::vector<Endpoint> endpoints_of(std::span<const Rat> points, bool with_one) {
  std::map<Rat, Int> tally;
  for (const Rat& y : points) tally[y] += 1;
  std::vector<Endpoint> out;
  Int below = 0;
  if (!tally.count(Rat(0))) out.push_back({Rat(0), 0, 0});
  for (auto& [value, count] : tally) {
    out.push_back({value, below, count});
    below += count;
  }
  if (with_one) out.push_back({Rat(1), below, 0});
  std::sort(out.begin(), out.end(),
            [](const Endpoint& a, const Endpoint& b) { return a.value < b.value; });
  return out;
}

}  // namespace

Rat star_discrepancy_enumerated(std::span<const Rat> points) {
  const Int n = static_cast<unsigned long>(points.size());
  Rat best(0);
  for (const Endpoint& e : endpoints_of(points, true)) {
    // left and right limit of |#{y < t}/n - t| at t = e.value
    for (const Int& cnt : {e.below, Int(e.below + e.multiplicity)}) {
      Rat v = make_rat(cnt, n) - e.value;
      if (v < 0) v = -v;
      if (v > best) best = v;
    }
  }
  return best;
}

Rat extreme_discrepancy_enumerated(std::span<const Rat> points) {
  const Int n = static_cast<unsigned long>(points.size());
  const auto ends = endpoints_of(points, true);
  Rat best(0);
  for (std::size_t i = 0; i < ends.size(); ++i) {
    for (std::size_t j = i; j < ends.size(); ++j) {
      const Rat length = ends[j].value - ends[i].value;
      const Int base = ends[j].below - ends[i].below;
      for (int a_open = 0; a_open < 2; ++a_open) {
        for (int b_closed = 0; b_closed < 2; ++b_closed) {
          Int cnt = base;
          if (a_open) cnt -= ends[i].multiplicity;
          if (b_closed) cnt += ends[j].multiplicity;
          Rat v = make_rat(cnt, n) - length;
          if (v < 0) v = -v;
          if (v > best) best = v;
        }
      }
    }
  }
  return best;
}

}  // namespace oracle

namespace {

using kernels::match_count_scalar;
using kernels::match_count_split_scalar;

struct Failure {
  std::ostringstream text;
  bool any = false;
};

template <typename A, typename B>
void expect_eq(Failure& f, const A& got, const B& want, const char* what) {
  if (!(got == want)) {
    f.any = true;
    f.text << what << " ";
  }
}

void expect(Failure& f, bool ok, const char* what) {
  if (!ok) {
    f.any = true;
    f.text << what << " ";
  }
}

Block make_block(Base base, std::initializer_list<int> digits) {
  std::vector<std::uint8_t> d;
  for (int x : digits) d.push_back(static_cast<std::uint8_t>(x));
  return Block(base, std::move(d));
}

Block random_block(Rng& rng, Base base, int length) {
  std::vector<std::uint8_t> d;
  for (int i = 0; i < length; ++i)
    d.push_back(static_cast<std::uint8_t>(rng.below(static_cast<std::uint64_t>(base.value()))));
  return Block(base, std::move(d));
}

std::vector<Rat> random_points(Rng& rng, std::size_t count) {
  std::vector<Rat> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t den = 1 + rng.below(100000);
    out.push_back(make_rat(static_cast<unsigned long>(rng.below(den)),
                           static_cast<unsigned long>(den)));
  }
  return out;
}

CheckResult check_worked_examples() {
  Failure f;
  const Base b10(10);
  expect_eq(f, term_digit_count(11, b10), Int(13), "T(11)");
  expect_eq(f, term_digit_count(2658, b10), Int(9525), "T(2658)");
  const auto l14 = locate(14, b10);
  expect(f, l14.term == 12 && l14.width == 2 && l14.offset == 1, "locate(14)");
  const auto l9523 = locate(9523, b10);
  expect(f, l9523.term == 2658 && l9523.width == 4 && l9523.offset == 2, "locate(9523)");
  expect_eq(f, digit_at(11, b10), 0, "digit 11");
  expect_eq(f, digit_at(14, b10), 1, "digit 14");
  expect_eq(f, digit_at(9523, b10), 6, "digit 9523");

  const auto split = occ_split_brute(b10, make_block(b10, {1, 2}), 36);
  expect(f, split.total == 3 && split.non_overlapping == 1 && split.overlapping == 2,
         "occ split at 36");
  expect_eq(f, occ_no_segment(make_block(b10, {1, 1}), SegmentId(b10, 2)), Int(1), "s2 count");
  expect_eq(f, occ_no_segment(make_block(b10, {1, 1}), SegmentId(b10, 3)), Int(19), "s3 count");
  expect_eq(f, occ_no_segment(make_block(b10, {0, 0}), SegmentId(b10, 3)), Int(9), "s3 zeros");
  expect_eq(f, occ_no_position(make_block(b10, {3, 1}), 2325, 1, b10).count, Int(20), "pos 2325");
  expect_eq(f, occ_no_position(make_block(b10, {3, 1}), 2305, 1, b10).count, Int(10), "pos 2305");
  expect_eq(f, occ_no_position(make_block(b10, {3, 1}), 2315, 1, b10).count, Int(16), "pos 2315");
  expect_eq(f, occ_o_segment_exact(make_block(b10, {1, 2, 3, 4}), SegmentId(b10, 6)), Int(300),
            "straddles s6");
  expect_eq(f, occ_o_segment_bound(make_block(b10, {1, 2, 3, 4}), SegmentId(b10, 6)), Int(300),
            "straddle bound s6");
  return {"worked-examples", !f.any, f.text.str()};
}

CheckResult check_kernels(Rng& rng, bool quick) {
  Failure f;
  const int rounds = quick ? 40 : 200;
  for (int r = 0; r < rounds && !f.any; ++r) {
    const std::size_t len = rng.below(quick ? 600 : 3000);
    const int radix = 2 + static_cast<int>(rng.below(9));
    const int k = 1 + static_cast<int>(rng.below(6));
    std::vector<std::uint8_t> text(len), starts(len), pattern;
    for (auto& d : text) d = static_cast<std::uint8_t>(rng.below(radix));
    for (auto& s : starts) s = rng.below(3) == 0 ? 1 : 0;
    for (int i = 0; i < k; ++i)
      pattern.push_back(static_cast<std::uint8_t>(rng.below(radix)));

    const auto want = match_count_scalar(text, pattern);
    const auto got = kernels::match_count(text, pattern);
    expect(f, got == want, "match_count dispatch");
    const auto want_split = match_count_split_scalar(text, starts, pattern);
    const auto got_split = kernels::match_count_split(text, starts, pattern);
    expect(f, got_split.within == want_split.within && got_split.crossing == want_split.crossing,
           "match_count_split dispatch");
    expect(f, want == want_split.within + want_split.crossing, "split totals");
  }
  std::ostringstream name;
  name << "kernel-equivalence[" << kernels::isa_name(kernels::active_isa()) << "]";
  return {name.str(), !f.any, f.text.str()};
}

CheckResult check_locator(Rng& rng, bool quick) {
  Failure f;
  const int rounds = quick ? 50 : 300;
  const int bases[] = {2, 3, 10, 16};
  for (int r = 0; r < rounds && !f.any; ++r) {
    const Base base(bases[rng.below(4)]);
    Int n = Int(static_cast<unsigned long>(rng.below(1000000000000ull))) + 1;
    const auto loc = locate(n, base);
    expect(f, term_digit_count(loc.term, base) >= n, "T(v) >= N");
    expect(f, loc.term == 1 || term_digit_count(loc.term - 1, base) < n, "T(v-1) < N");
    expect(f, digit_length(loc.term, base.value()) == loc.width, "width");
    const auto parts = prefix_breakdown(n, base);
    expect(f, parts.before_segment <= n && n <= parts.before_segment + parts.within_segment,
           "L <= N <= L+M");
  }
  return {"locator-roundtrip", !f.any, f.text.str()};
}

CheckResult check_counter_oracle(Rng& rng, bool quick) {
  Failure f;
  const int blocks_per_base = quick ? 6 : 20;
  const unsigned long lengths[] = {1000, 10000};
  for (int bv : {2, 3, 10}) {
    const Base base(bv);
    for (int i = 0; i < blocks_per_base && !f.any; ++i) {
      const Block block = random_block(rng, base, 1 + static_cast<int>(rng.below(3)));
      for (unsigned long n : lengths) {
        const auto exact = occ_exact(base, block, n);
        const auto brute = occ_split_brute(base, block, n);
        expect(f,
               exact.total == brute.total &&
                   exact.non_overlapping == brute.non_overlapping &&
                   exact.overlapping == brute.overlapping,
               "occ_exact == occ_split_brute");
      }
    }
  }
  return {"counter-oracle", !f.any, f.text.str()};
}

CheckResult check_segment_forms(Rng& rng, bool quick) {
  Failure f;
  const int rounds = quick ? 10 : 40;
  for (int r = 0; r < rounds && !f.any; ++r) {
    const Base base(r % 2 == 0 ? 10 : 2);
    const int max_len = base.value() == 10 ? 4 : 8;
    const int len = 1 + static_cast<int>(rng.below(max_len));
    const Block block = random_block(rng, base, 1 + static_cast<int>(rng.below(3)));
    const SegmentId segment(base, len);
    const auto buffer = segment_digits(segment);
    const auto split = kernels::match_count_split_scalar(
        {buffer.digits.data(), buffer.digits.size()},
        {buffer.term_starts.data(), buffer.term_starts.size()},
        {block.digits().data(), block.digits().size()});
    expect(f, occ_no_segment(block, segment) == static_cast<unsigned long>(split.within),
           "occ_no_segment == brute");
    if (block.length() >= 2 && len >= block.length()) {
      expect(f, occ_o_segment_exact(block, segment) == static_cast<unsigned long>(split.crossing),
             "occ_o_segment_exact == brute");
      expect(f, occ_o_segment_exact(block, segment) <= occ_o_segment_bound(block, segment),
             "straddle bound");
    }
  }
  return {"segment-closed-forms", !f.any, f.text.str()};
}

CheckResult check_discrepancy_formulas(Rng& rng, bool quick) {
  Failure f;
  const int rounds = quick ? 8 : 25;
  for (int r = 0; r < rounds && !f.any; ++r) {
    const auto points = random_points(rng, 1 + rng.below(quick ? 40 : 120));
    const Rat star = star_discrepancy(points);
    const Rat extreme = extreme_discrepancy(points);
    expect(f, star == oracle::star_discrepancy_enumerated(points), "star == enumeration");
    expect(f, extreme == oracle::extreme_discrepancy_enumerated(points), "extreme == enumeration");
    expect(f, star <= extreme && extreme <= 2 * star, "sandwich");
    const Rat lo = make_rat(1, 2 * static_cast<unsigned long>(points.size()));
    expect(f, star >= lo && star <= 1, "star range");
  }
  return {"discrepancy-formulas", !f.any, f.text.str()};
}

CheckResult check_perturbation(Rng& rng, bool quick) {
  Failure f;
  const int rounds = quick ? 6 : 20;
  for (int r = 0; r < rounds && !f.any; ++r) {
    const auto points = random_points(rng, 2 + rng.below(60));
    const Rat delta = make_rat(1, 50 + static_cast<unsigned long>(rng.below(5000)));
    std::vector<Rat> moved;
    moved.reserve(points.size());
    for (const Rat& y : points) {
      Rat shift = delta * make_rat(static_cast<unsigned long>(rng.below(2001)), 1000ul) - delta;
      Rat z = y + shift;
      if (z < 0) z = 0;
      if (z >= 1) z = y;  // keep inside [0,1)
      moved.push_back(z);
    }
    Rat diff = extreme_discrepancy(points) - extreme_discrepancy(moved);
    if (diff < 0) diff = -diff;
    expect(f, diff <= 2 * delta, "|D(before) - D(after)| <= 2 delta");
  }
  return {"perturbation-stability", !f.any, f.text.str()};
}

CheckResult check_decomposition(Rng& rng, bool quick) {
  Failure f;
  const Base b10(10);
  const int rounds = quick ? 5 : 15;
  for (int r = 0; r < rounds && !f.any; ++r) {
    const int depth = 1 + static_cast<int>(rng.below(3));
    const Int scale = int_pow(10ul, static_cast<unsigned long>(depth));
    const Rat gamma = make_rat(static_cast<unsigned long>(
                                   rng.below(static_cast<std::uint64_t>(scale.get_ui()))),
                               scale);
    const auto [left, right] = decomposition_check(b10, gamma, depth, 2000);
    expect(f, left == right, "telescoping identity");
  }
  return {"interval-decomposition", !f.any, f.text.str()};
}

CheckResult check_witness_chain() {
  Failure f;
  const Base b10(10);
  const auto pair = WitnessPair::minimal(b10, 2);
  const Int n999 = term_digit_count(999, b10);
  expect_eq(f, witness_gap(b10, pair, n999), Int(22), "gap at T(999)");
  const Rat bound = witness_lower_bound(b10, pair, n999);
  const auto estimate =
      discrepancy_of_c(b10, static_cast<std::uint64_t>(n999.get_ui()),
                       min_shift_precision(b10, static_cast<std::uint64_t>(n999.get_ui())) + 2);
  expect(f, estimate.value + estimate.radius >= bound, "discrepancy above witness bound");
  const auto constants = WitnessConstants::for_length(b10, 2);
  expect(f, constants.discrepancy_constant * 3 == constants.occurrence_constant, "constant ratio");
  expect(f, constants.discrepancy_constant == make_rat(1, 3000), "k=2 constant");
  return {"witness-chain", !f.any, f.text.str()};
}

CheckResult check_interval_occurrence() {
  Failure f;
  const Base b10(10);
  // [0.325, 0.326): membership at position n means the digits 3 2 5 there
  const IntervalSpec interval(b10, make_rat(325, 1000), make_rat(326, 1000), 3);
  const std::uint64_t n = 5000;
  const Rat deviation = interval_count(b10, interval, n);
  const Int hits = Rat((deviation + make_rat(1, 1000)) * n).get_num();
  expect(f, hits == occ_brute(b10, Block(b10, {3, 2, 5}), Int(n + 2)), "interval hits == occ");
  return {"interval-occurrence", !f.any, f.text.str()};
}

}  // namespace

std::vector<CheckResult> run_self_checks(std::uint64_t seed, bool quick) {
  Rng rng(seed);
  std::vector<CheckResult> results;
  results.push_back(check_worked_examples());
  results.push_back(check_kernels(rng, quick));
  results.push_back(check_locator(rng, quick));
  results.push_back(check_counter_oracle(rng, quick));
  results.push_back(check_segment_forms(rng, quick));
  results.push_back(check_discrepancy_formulas(rng, quick));
  results.push_back(check_perturbation(rng, quick));
  results.push_back(check_decomposition(rng, quick));
  results.push_back(check_witness_chain());
  results.push_back(check_interval_occurrence());
  return results;
}

}  // namespace champ

// Command-line surface: digits, locators, occurrence counts, discrepancy
// tables, witness bounds, digit rasters, and the self-check suite.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "champ/arith.hpp"
#include "champ/base.hpp"
#include "champ/core.hpp"
#include "champ/counting.hpp"
#include "champ/discrepancy.hpp"
#include "champ/image.hpp"
#include "champ/kernels.hpp"
#include "champ/logbounds.hpp"
#include "champ/selfcheck.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;

using json = nlohmann::ordered_json;
using champ::Int;
using champ::Rat;

Int parse_int(const std::string& text) {
  try {
    return Int(text);
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError("not a decimal integer: " + text);
  }
}

json envelope(const std::string& command, json parameters, json result) {
  json out;
  out["command"] = command;
  out["parameters"] = std::move(parameters);
  out["result"] = std::move(result);
  out["version"] = kVersion;
  return out;
}

void emit(const json& payload, bool as_json, const std::string& text) {
  if (as_json)
    std::cout << payload.dump(2) << "\n";
  else
    std::cout << text;
}

std::string rat_fields(const Rat& q, int precision) {
  return champ::decimal_string(q, precision) + " (" + q.get_num().get_str() + "/" +
         q.get_den().get_str() + ")";
}

json rat_json(const Rat& q, int precision) {
  json j;
  j["decimal"] = champ::decimal_string(q, precision);
  j["num"] = q.get_num().get_str();
  j["den"] = q.get_den().get_str();
  return j;
}

struct CommonArgs {
  int base = 10;
  std::string format = "text";
};

int cmd_digit(const CommonArgs& common, const std::string& n_arg, const std::string& range_arg) {
  const champ::Base base(common.base);
  json params{{"base", common.base}};
  std::string text;
  json result;
  if (!range_arg.empty()) {
    const auto dots = range_arg.find("..");
    if (dots == std::string::npos)
      throw CLI::ValidationError("range must look like A..B");
    const Int lo = parse_int(range_arg.substr(0, dots));
    const Int hi = parse_int(range_arg.substr(dots + 2));
    if (lo < 1 || hi < lo) throw CLI::ValidationError("range must satisfy 1 <= A <= B");
    if (hi - lo >= 1000000) throw champ::infeasible_error("range too wide; cap is 10^6 digits");
    params["range"] = range_arg;
    std::string digits;
    for (Int n = lo; n <= hi; ++n) {
      const int d = champ::digit_at(n, base);
      if (base.value() <= 10) {
        digits += static_cast<char>('0' + d);
      } else {
        if (!digits.empty()) digits += ' ';
        digits += std::to_string(d);
      }
    }
    text = digits + "\n";
    result["digits"] = digits;
  } else {
    const Int n = parse_int(n_arg);
    params["n"] = n_arg;
    const int d = champ::digit_at(n, base);
    text = std::to_string(d) + "\n";
    result["digit"] = d;
  }
  emit(envelope("digit", params, result), common.format == "json", text);
  return 0;
}

int cmd_locate(const CommonArgs& common, const std::string& n_arg) {
  const champ::Base base(common.base);
  const Int n = parse_int(n_arg);
  const auto loc = champ::locate(n, base);
  const auto parts = champ::prefix_breakdown(n, base);
  const Int t = champ::term_digit_count(loc.term, base);

  std::string text = "term=" + loc.term.get_str() + "\nwidth=" + std::to_string(loc.width) +
                     "\noffset=" + std::to_string(loc.offset) + "\nT=" + t.get_str() +
                     "\nL=" + parts.before_segment.get_str() +
                     "\nM=" + parts.within_segment.get_str() + "\n";
  json result{{"term", loc.term.get_str()}, {"width", loc.width},   {"offset", loc.offset},
              {"T", t.get_str()},           {"L", parts.before_segment.get_str()},
              {"M", parts.within_segment.get_str()}};
  emit(envelope("locate", json{{"base", common.base}, {"n", n_arg}}, result),
       common.format == "json", text);
  return 0;
}

int cmd_occ(const CommonArgs& common, const std::string& block_arg, const std::string& n_arg,
            bool exact, bool brute, bool both) {
  const champ::Base base(common.base);
  const champ::Block block = champ::Block::parse(base, block_arg);
  const Int n = parse_int(n_arg);
  if (int(exact) + int(brute) + int(both) > 1)
    throw CLI::ValidationError("choose one of --exact, --brute, --both");

  json params{{"base", common.base}, {"block", block.to_string()}, {"n", n_arg}};
  std::string text;
  json result;
  bool mismatch = false;
  auto render = [&](const char* label, const champ::OccurrenceReport& r) {
    text += std::string(label) + ".total=" + r.total.get_str() + "\n" + label +
            ".non_overlapping=" + r.non_overlapping.get_str() + "\n" + label +
            ".overlapping=" + r.overlapping.get_str() + "\n";
    result[label] = {{"total", r.total.get_str()},
                     {"non_overlapping", r.non_overlapping.get_str()},
                     {"overlapping", r.overlapping.get_str()}};
  };
  if (both) {
    const auto e = champ::occ_exact(base, block, n);
    const auto b = champ::occ_split_brute(base, block, n);
    render("exact", e);
    render("brute", b);
    mismatch = !(e.total == b.total && e.non_overlapping == b.non_overlapping &&
                 e.overlapping == b.overlapping);
    text += std::string("match=") + (mismatch ? "false" : "true") + "\n";
    result["match"] = !mismatch;
  } else if (brute) {
    render("brute", champ::occ_split_brute(base, block, n));
  } else {
    render("exact", champ::occ_exact(base, block, n));
  }
  emit(envelope("occ", params, result), common.format == "json", text);
  return mismatch ? kExitMismatch : 0;
}

int cmd_segment(const CommonArgs& common, const std::string& block_arg, int length,
                bool cross_check) {
  const champ::Base base(common.base);
  const champ::Block block = champ::Block::parse(base, block_arg);
  const champ::SegmentId segment(base, length);

  const Int within = champ::occ_no_segment(block, segment);
  std::string text = "non_overlapping=" + within.get_str() + "\n";
  json result{{"non_overlapping", within.get_str()}};
  if (block.length() >= 2) {
    const Int straddles = champ::occ_o_segment_exact(block, segment);
    text += "overlapping=" + straddles.get_str() + "\n";
    result["overlapping"] = straddles.get_str();
    if (length >= block.length()) {
      const Int bound = champ::occ_o_segment_bound(block, segment);
      text += "overlap_bound=" + bound.get_str() + "\n";
      result["overlap_bound"] = bound.get_str();
    }
  }

  bool mismatch = false;
  if (cross_check) {
    const auto buffer = champ::segment_digits(segment);
    const auto split = champ::kernels::match_count_split(
        {buffer.digits.data(), buffer.digits.size()},
        {buffer.term_starts.data(), buffer.term_starts.size()},
        {block.digits().data(), block.digits().size()});
    mismatch = within != static_cast<unsigned long>(split.within);
    // the straddle count covers two-term windows only, which is exhaustive
    // once the terms are at least as wide as the block
    if (block.length() >= 2 && length >= block.length())
      mismatch = mismatch || champ::occ_o_segment_exact(block, segment) !=
                                 static_cast<unsigned long>(split.crossing);
    text += std::string("match=") + (mismatch ? "false" : "true") + "\n";
    result["match"] = !mismatch;
  }
  emit(envelope("segment",
                json{{"base", common.base}, {"block", block.to_string()}, {"l", length}},
                result),
       common.format == "json", text);
  return mismatch ? kExitMismatch : 0;
}

int cmd_table(const CommonArgs& common, const std::string& grid_arg, int witness_len,
              int precision, const std::string& out_path) {
  const champ::Base base(common.base);
  std::vector<std::uint64_t> grid;
  std::size_t pos = 0;
  while (pos <= grid_arg.size()) {
    const auto comma = grid_arg.find(',', pos);
    const std::string piece =
        grid_arg.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (piece.empty()) throw CLI::ValidationError("empty grid entry");
    grid.push_back(std::stoull(piece));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }

  const auto rows = champ::discrepancy_table(base, grid, witness_len);

  std::string csv = "N,D,D_log10N,lower_bound,gap,radius\n";
  json jrows = json::array();
  for (const auto& row : rows) {
    const Rat log10n = champ::log10_approx(row.prefix_len);
    const Rat dlog = row.estimate.value * log10n;
    csv += row.prefix_len.get_str() + "," + champ::decimal_string(row.estimate.value, precision) +
           "," + champ::decimal_string(dlog, precision) + "," +
           champ::decimal_string(row.lower_bound, precision) + "," + row.gap.get_str() + "," +
           champ::decimal_string(row.estimate.radius, precision) + "\n";
    json j;
    j["N"] = row.prefix_len.get_str();
    j["D"] = rat_json(row.estimate.value, precision);
    j["D_log10N"] = champ::decimal_string(dlog, precision);
    j["lower_bound"] = rat_json(row.lower_bound, precision);
    j["gap"] = row.gap.get_str();
    j["radius"] = rat_json(row.estimate.radius, precision);
    jrows.push_back(std::move(j));
  }

  std::string payload;
  if (common.format == "json") {
    payload = envelope("table",
                       json{{"base", common.base},
                            {"grid", grid_arg},
                            {"k", witness_len},
                            {"precision", precision}},
                       json{{"rows", jrows}})
                  .dump(2) +
              "\n";
  } else {
    payload = csv;
  }

  if (!out_path.empty()) {
    const std::string tmp = out_path + ".tmp";
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp);
    out << payload;
    out.close();
    if (!out || std::rename(tmp.c_str(), out_path.c_str()) != 0)
      throw std::runtime_error("cannot write " + out_path);
  } else {
    std::cout << payload;
  }
  return 0;
}

int cmd_witness(const CommonArgs& common, int witness_len, const std::string& n_arg,
                int precision) {
  const champ::Base base(common.base);
  const Int n = parse_int(n_arg);
  const auto pair = champ::WitnessPair::minimal(base, witness_len);
  const auto excess = champ::occ_exact(base, pair.excess(), n);
  const auto deficit = champ::occ_exact(base, pair.deficit(), n);
  const Int gap = excess.total - deficit.total;
  const Rat bound = champ::witness_lower_bound(base, pair, n);
  const auto constants = champ::WitnessConstants::for_length(base, witness_len);

  auto occ_text = [](const char* label, const champ::OccurrenceReport& r) {
    return std::string(label) + "=" + r.total.get_str() + " (within " +
           r.non_overlapping.get_str() + ", crossing " + r.overlapping.get_str() + ")\n";
  };
  auto occ_json = [](const champ::OccurrenceReport& r) {
    return json{{"total", r.total.get_str()},
                {"non_overlapping", r.non_overlapping.get_str()},
                {"overlapping", r.overlapping.get_str()}};
  };
  std::string text = "excess_block=" + pair.excess().to_string() +
                     "\ndeficit_block=" + pair.deficit().to_string() + "\n" +
                     occ_text("excess_occ", excess) + occ_text("deficit_occ", deficit) +
                     "gap=" + gap.get_str() + "\nlower_bound=" + rat_fields(bound, precision) +
                     "\noccurrence_constant=" + rat_fields(constants.occurrence_constant, precision) +
                     "\ndiscrepancy_constant=" + rat_fields(constants.discrepancy_constant, precision) +
                     "\n";
  json result{{"excess_block", pair.excess().to_string()},
              {"deficit_block", pair.deficit().to_string()},
              {"excess_occ", occ_json(excess)},
              {"deficit_occ", occ_json(deficit)},
              {"gap", gap.get_str()},
              {"lower_bound", rat_json(bound, precision)},
              {"occurrence_constant", rat_json(constants.occurrence_constant, precision)},
              {"discrepancy_constant", rat_json(constants.discrepancy_constant, precision)}};
  emit(envelope("witness", json{{"base", common.base}, {"k", witness_len}, {"n", n_arg}}, result),
       common.format == "json", text);
  return 0;
}

int cmd_image(const CommonArgs& common, std::uint64_t digits, int width,
              const std::string& out_path) {
  const champ::Base base(common.base);
  const int rows = champ::render_digit_raster(base, digits, width, out_path);
  std::cout << "wrote " << width << "x" << rows << " raster to " << out_path << "\n";
  return 0;
}

int cmd_verify(std::uint64_t seed, bool quick) {
  std::cout << "seed=" << seed << (quick ? " (quick)" : "") << "\n";
  std::cout << "kernel_isa=" << champ::kernels::isa_name(champ::kernels::active_isa()) << "\n";
  const auto results = champ::run_self_checks(seed, quick);
  bool all_ok = true;
  for (const auto& r : results) {
    std::cout << (r.ok ? "ok   " : "FAIL ") << r.name;
    if (!r.ok && !r.detail.empty()) std::cout << "  [" << r.detail << "]";
    std::cout << "\n";
    all_ok = all_ok && r.ok;
  }
  std::cout << (all_ok ? "all checks passed" : "checks FAILED") << "\n";
  return all_ok ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact digit-block counting and discrepancy for concatenation constants"};
  app.require_subcommand(1);

  CommonArgs common;

  auto add_common = [&](CLI::App* cmd, bool with_format = true) {
    cmd->add_option("--base", common.base, "radix (default 10)");
    if (with_format)
      cmd->add_option("--format", common.format, "text, csv, or json")
          ->check(CLI::IsMember({"text", "csv", "json"}));
  };

  std::string n_arg, range_arg, block_arg, grid_arg, out_path;
  int length = 1, witness_len = 2, precision = 12, width = 500;
  std::uint64_t digits = 250000, seed = 20250810;
  bool flag_exact = false, flag_brute = false, flag_both = false, flag_quick = false,
       flag_cross = false;

  auto* digit = app.add_subcommand("digit", "print digits of the expansion");
  add_common(digit);
  digit->add_option("--n", n_arg, "1-based digit position");
  digit->add_option("--range", range_arg, "positions A..B");

  auto* loc = app.add_subcommand("locate", "locate a digit position inside its term");
  add_common(loc);
  loc->add_option("--n", n_arg, "1-based digit position")->required();

  auto* occ = app.add_subcommand("occ", "count block occurrences in a prefix");
  add_common(occ);
  occ->add_option("--block", block_arg, "digit pattern, e.g. 12 or 1,2")->required();
  occ->add_option("--n", n_arg, "prefix length")->required();
  occ->add_flag("--exact", flag_exact, "closed-form counters (default)");
  occ->add_flag("--brute", flag_brute, "streaming counter");
  occ->add_flag("--both", flag_both, "run both and compare; exit 2 on mismatch");

  auto* seg = app.add_subcommand("segment", "per-segment occurrence counts");
  add_common(seg);
  seg->add_option("--block", block_arg)->required();
  seg->add_option("--l", length, "segment term width")->required();
  seg->add_flag("--brute", flag_cross, "cross-check against the materialized segment");

  auto* table = app.add_subcommand("table", "discrepancy and witness-bound table");
  add_common(table);
  table->add_option("--grid", grid_arg, "comma-separated prefix lengths")->required();
  table->add_option("--k", witness_len, "witness block length (default 2)");
  table->add_option("--precision", precision, "decimal digits in output (default 12)");
  table->add_option("--out", out_path, "write to file instead of stdout");

  auto* witness = app.add_subcommand("witness", "witness gap and certified lower bound");
  add_common(witness);
  witness->add_option("--k", witness_len, "witness block length (default 2)");
  witness->add_option("--n", n_arg, "prefix length")->required();
  witness->add_option("--precision", precision);

  auto* image = app.add_subcommand("image", "render digits as a P6 raster");
  add_common(image, false);
  image->add_option("--digits", digits, "digit count (default 250000)");
  image->add_option("--width", width, "pixels per row (default 500)");
  image->add_option("--out", out_path, "output path")->required();

  auto* verify = app.add_subcommand("verify", "run the property suite; exit 2 on mismatch");
  verify->add_option("--seed", seed, "seed for sampled checks (echoed)");
  verify->add_flag("--quick", flag_quick, "smaller samples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (digit->parsed()) {
      if (n_arg.empty() == range_arg.empty())
        throw CLI::ValidationError("digit needs exactly one of --n or --range");
      return cmd_digit(common, n_arg, range_arg);
    }
    if (loc->parsed()) return cmd_locate(common, n_arg);
    if (occ->parsed()) return cmd_occ(common, block_arg, n_arg, flag_exact, flag_brute, flag_both);
    if (seg->parsed()) return cmd_segment(common, block_arg, length, flag_cross);
    if (table->parsed()) return cmd_table(common, grid_arg, witness_len, precision, out_path);
    if (witness->parsed()) return cmd_witness(common, witness_len, n_arg, precision);
    if (image->parsed()) return cmd_image(common, digits, width, out_path);
    if (verify->parsed()) return cmd_verify(seed, flag_quick);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

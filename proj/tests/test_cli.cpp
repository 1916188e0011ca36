#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "champ/image.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string command = std::string(CHAMP_CLI_BIN) + " " + args + " 2>&1";
  std::array<char, 4096> chunk{};
  std::string output;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t got;
  while ((got = fread(chunk.data(), 1, chunk.size(), pipe)) > 0)
    output.append(chunk.data(), got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), std::move(output)};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string temp_path(const std::string& name) {
  const char* dir = std::getenv("TMPDIR");
  return std::string(dir ? dir : "/tmp") + "/" + name;
}

}  // namespace

TEST_CASE("digit command prints worked digits") {
  CHECK(run("digit --base 10 --n 11").output == "0\n");
  CHECK(run("digit --base 10 --range 1..9").output == "123456789\n");
  CHECK(run("digit --base 2 --range 1..8").output == "11011100\n");
  CHECK(run("digit --base 10 --n 11").exit_code == 0);
}

TEST_CASE("usage errors exit with code 1") {
  CHECK(run("digit --base 10").exit_code == 1);             // neither --n nor --range
  CHECK(run("digit --base 10 --n 0").exit_code == 1);       // invalid position
  CHECK(run("nonsense").exit_code == 1);
  CHECK(run("occ --block 44 --n abc").exit_code == 1);
  CHECK(run("occ --block 9,9 --base 2 --n 50").exit_code == 1);  // digits out of range
}

TEST_CASE("infeasible sizes exit with code 1, closed forms do not") {
  CHECK(run("occ --block 11 --n 100000000000000 --brute").exit_code == 1);  // memory guard
  CHECK(run("occ --block 11 --n 100000000000000 --exact").exit_code == 0);
  CHECK(run("table --grid 100000000000 --k 2").exit_code == 1);
}

TEST_CASE("segment cross-check stays clean when terms are narrower than the block") {
  // three-term windows exist here; only the within count is comparable
  const auto result = run("segment --block 0111 --l 2 --brute");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("match=true") != std::string::npos);
  const auto wide = run("segment --block 1111 --l 6 --brute");
  CHECK(wide.exit_code == 0);
  CHECK(wide.output.find("match=true") != std::string::npos);
}

TEST_CASE("witness output carries the occurrence provenance") {
  const auto result = run("witness --k 2 --n 2889");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("excess_occ=31 (within 20, crossing 11)") != std::string::npos);
  CHECK(result.output.find("deficit_occ=9 (within 9, crossing 0)") != std::string::npos);
  CHECK(result.output.find("gap=22") != std::string::npos);
}

TEST_CASE("occ command agrees with the worked split and exits cleanly") {
  const auto both = run("occ --base 10 --block 12 --n 36 --both");
  CHECK(both.exit_code == 0);
  CHECK(both.output.find("exact.total=3") != std::string::npos);
  CHECK(both.output.find("exact.non_overlapping=1") != std::string::npos);
  CHECK(both.output.find("exact.overlapping=2") != std::string::npos);
  CHECK(both.output.find("match=true") != std::string::npos);

  const auto zeros = run("occ --base 10 --block 00 --n 200");
  CHECK(zeros.output.find("exact.overlapping=0") != std::string::npos);

  const auto single = run("occ --base 10 --block 5 --n 5");
  CHECK(single.output.find("exact.total=1") != std::string::npos);
  CHECK(single.output.find("exact.non_overlapping=1") != std::string::npos);
  CHECK(single.output.find("exact.overlapping=0") != std::string::npos);
}

TEST_CASE("deterministic output: identical invocations are byte-identical") {
  const std::string args = "table --grid 1000,2889 --k 2";
  const auto first = run(args);
  const auto second = run(args);
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
  CHECK(first.output.rfind("N,D,D_log10N,lower_bound,gap,radius\n", 0) == 0);

  // a row at the end of the third segment carries the 20-vs-9 witness gap
  CHECK(first.output.find("2889,") != std::string::npos);
  CHECK(first.output.find(",22,") != std::string::npos);
}

TEST_CASE("json output round-trips byte-for-byte") {
  for (const std::string args :
       {std::string("locate --n 9523 --format json"),
        std::string("occ --base 10 --block 12 --n 36 --both --format json"),
        std::string("witness --k 2 --n 2889 --format json"),
        std::string("table --grid 1000,10000 --k 2 --format json")}) {
    const auto result = run(args);
    REQUIRE(result.exit_code == 0);
    const auto parsed = nlohmann::ordered_json::parse(result.output);
    CHECK(parsed.dump(2) + "\n" == result.output);
    CHECK(parsed["version"] == "0.1.0");
  }
}

TEST_CASE("verify runs the property suite") {
  const auto result = run("verify --quick --seed 7");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("seed=7") != std::string::npos);
  CHECK(result.output.find("all checks passed") != std::string::npos);
}

TEST_CASE("image command writes a valid raster") {
  const std::string path = temp_path("champ_tiny.ppm");
  const auto result = run("image --base 10 --digits 10 --width 1 --out " + path);
  REQUIRE(result.exit_code == 0);
  const std::string data = read_file(path);
  REQUIRE(data.rfind("P6\n1 10\n255\n", 0) == 0);
  const auto palette = champ::digit_palette(champ::Base(10));
  const std::string header = "P6\n1 10\n255\n";
  // first ten digits are 1..9 then the 1 of "10"
  const int digits[10] = {1, 2, 3, 4, 5, 6, 7, 8, 9, 1};
  REQUIRE(data.size() == header.size() + 30);
  for (int i = 0; i < 10; ++i) {
    const auto& c = palette[static_cast<std::size_t>(digits[i])];
    CHECK(static_cast<unsigned char>(data[header.size() + 3 * i + 0]) == c.r);
    CHECK(static_cast<unsigned char>(data[header.size() + 3 * i + 1]) == c.g);
    CHECK(static_cast<unsigned char>(data[header.size() + 3 * i + 2]) == c.b);
  }
  std::remove(path.c_str());
}

TEST_CASE("image matches the committed golden raster") {
  const std::string path = temp_path("champ_golden_check.ppm");
  const auto result = run("image --base 10 --digits 250000 --width 500 --out " + path);
  REQUIRE(result.exit_code == 0);
  const std::string fresh = read_file(path);
  const std::string golden = read_file(std::string(CHAMP_GOLDEN_DIR) + "/c10_500x500.ppm");
  CHECK(fresh.size() == golden.size());
  CHECK(fresh == golden);
  std::remove(path.c_str());
}

TEST_CASE("image to an unwritable path fails loudly") {
  const auto result = run("image --digits 100 --width 10 --out /nonexistent-dir/x.ppm");
  CHECK(result.exit_code == 1);
}

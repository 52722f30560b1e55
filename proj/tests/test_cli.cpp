#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "nlgames/cli.hpp"
#include "nlgames/game.hpp"
#include "support/test_games.hpp"

using namespace nlgames;
using namespace nlgames::testing;
using nlohmann::json;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  REQUIRE(file.good());
  std::ostringstream text;
  text << file.rdbuf();
  return text.str();
}

}  // namespace

TEST_CASE("analyze reports the full CHSH picture") {
  const CliResult r = run({"analyze", "--anf", "xy+a+b"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["mask"] == "0x6999");
  CHECK(doc["partition"] == "2+2+2+2");
  CHECK(doc["admissible"] == true);
  CHECK(doc["inconsistent"] == false);
  CHECK(doc["classical"]["value"] == 0.75);
  CHECK(std::abs(doc["quantum"]["family"].get<double>() - 0.8535533906) < 1e-9);
  CHECK(std::abs(doc["separation"].get<double>() - 0.1035533906) < 1e-9);
}

TEST_CASE("analyze handles trivial and bad inputs") {
  const CliResult full = run({"analyze", "--mask", "0xFFFF"});
  REQUIRE(full.code == 0);
  const json doc = json::parse(full.out);
  CHECK(doc["classical"]["value"] == 1.0);
  CHECK(doc["quantum"]["family"] == 1.0);
  CHECK(doc["separation"] == 0.0);

  const CliResult bad = run({"analyze", "--anf", "xy+a+b+q"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("'q'") != std::string::npos);

  CHECK(run({"analyze"}).code == 1);
  CHECK(run({"analyze", "--mask", "0x1", "--anf", "a"}).code == 1);
}

TEST_CASE("anf converts both directions") {
  const CliResult to_text = run({"anf", "--mask", "0x6999"});
  REQUIRE(to_text.code == 0);
  CHECK(to_text.out == "xy+a+b\n");

  CHECK(run({"anf", "--anf", "0"}).out == "0xFFFF\n");
  CHECK(run({"anf", "--anf", "1"}).out == "0x0000\n");
  CHECK(run({"anf", "--anf", "xy+a+b+q"}).code == 1);

  // CLI-level round trip on a spread of masks
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<uint32_t> masks(0, 0xFFFF);
  for (int trial = 0; trial < 50; ++trial) {
    const GameTable g{static_cast<uint16_t>(masks(rng))};
    const CliResult text = run({"anf", "--mask", format_mask(g)});
    REQUIRE(text.code == 0);
    std::string anf = text.out;
    anf.pop_back();  // newline
    const CliResult back = run({"analyze", "--anf", anf});
    REQUIRE(back.code == 0);
    CHECK(json::parse(back.out)["mask"] == format_mask(g));
  }
}

TEST_CASE("simulate quantum and classical modes") {
  const CliResult quantum = run({"simulate", "--anf", "xy+a+b", "--mode", "quantum", "--angles",
                                 "0,pi/4,pi/8,7pi/8", "--rounds", "1000000", "--seed", "42"});
  REQUIRE(quantum.code == 0);
  const json qdoc = json::parse(quantum.out);
  CHECK(std::abs(qdoc["z_score"].get<double>()) <= 4.0);
  CHECK(qdoc["rounds"] == 1000000);

  const CliResult classical = run({"simulate", "--anf", "xy+a+b", "--mode", "classical",
                                   "--strategy", "a=0,b=0", "--rounds", "4", "--seed", "7"});
  REQUIRE(classical.code == 0);
  const json cdoc = json::parse(classical.out);
  CHECK(cdoc["expected_rate"] == 0.75);
  CHECK(cdoc["wins"].get<int>() >= 0);
  CHECK(cdoc["wins"].get<int>() <= 4);

  CHECK(run({"simulate", "--anf", "xy+a+b", "--mode", "quantum"}).code == 1);
  CHECK(run({"simulate", "--anf", "xy+a+b", "--mode", "classical", "--strategy", "a=0,b=0",
             "--angles", "0,0,0,0"})
            .code == 1);
  CHECK(run({"simulate", "--anf", "xy+a+b", "--mode", "psychic", "--strategy", "a=0,b=0"}).code == 1);
  CHECK(run({"simulate", "--anf", "xy+a+b", "--mode", "quantum", "--angles", "0,pi/4"}).code == 1);
}

TEST_CASE("identical simulate invocations give identical bytes") {
  const std::vector<std::string> args = {"simulate", "--mask",  "0x6999", "--mode",
                                         "quantum",  "--angles", "0,pi/4,pi/8,7pi/8",
                                         "--rounds", "50000",   "--seed", "3"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("scan writes records and summary deterministically") {
  const auto dir = std::filesystem::temp_directory_path() / "nlg-cli-test";
  std::filesystem::create_directories(dir);

  const auto out1 = dir / "records1.csv";
  const auto out8 = dir / "records8.csv";
  const auto sum1 = dir / "summary1.md";
  const auto sum8 = dir / "summary8.md";

  REQUIRE(run({"scan", "--out", out1.string(), "--summary", sum1.string(), "--jobs", "1"}).code == 0);
  REQUIRE(run({"scan", "--out", out8.string(), "--summary", sum8.string(), "--jobs", "8"}).code == 0);

  const std::string records = slurp(out1);
  CHECK(records == slurp(out8));
  CHECK(slurp(sum1) == slurp(sum8));

  // 50625 records plus the header line
  CHECK(std::count(records.begin(), records.end(), '\n') == 50626);

  const std::string summary = slurp(sum1);
  CHECK(summary.find("## Partitions with quantum advantage") != std::string::npos);
  CHECK(std::count(summary.begin(), summary.end(), '|') > 0);

  // exactly 7 advantage rows: header, separator, then the rows
  const size_t start = summary.find("No. of succ. outcomes");
  REQUIRE(start != std::string::npos);
  size_t rows = 0;
  std::istringstream lines(summary.substr(start));
  std::string line;
  std::getline(lines, line);  // header
  std::getline(lines, line);  // separator
  while (std::getline(lines, line) && line.starts_with("|")) ++rows;
  CHECK(rows == 7);

  std::filesystem::remove_all(dir);
}

TEST_CASE("scan covers the full space on request") {
  const auto dir = std::filesystem::temp_directory_path() / "nlg-cli-full";
  std::filesystem::create_directories(dir);
  const auto out = dir / "all.csv";
  REQUIRE(run({"scan", "--out", out.string(), "--include-inadmissible", "--jobs", "4"}).code == 0);
  const std::string records = slurp(out);
  CHECK(std::count(records.begin(), records.end(), '\n') == 65537);
  std::filesystem::remove_all(dir);
}

TEST_CASE("scan reports I/O failures with exit code 2") {
  const CliResult r = run({"scan", "--out", "/nonexistent-dir-for-sure/records.csv"});
  CHECK(r.code == 2);
  CHECK(r.err.find("/nonexistent-dir-for-sure/records.csv") != std::string::npos);
}

TEST_CASE("verify-nga19 census") {
  const CliResult r = run({"verify-nga19"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["pair_counts"]["(1,1)"] == 16);
  CHECK(doc["pair_counts"]["(1,3)"] == 16);
  CHECK(doc["pair_counts"]["(3,1)"] == 16);
  CHECK(doc["pair_counts"]["(3,3)"] == 16);
  CHECK(doc["total_nonconstant"] == 14);
  CHECK(doc["total_pairs"] == 196);
}

TEST_CASE("unknown commands and missing subcommands fail with usage errors") {
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({}).code == 1);
}

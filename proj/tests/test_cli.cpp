#include <doctest.h>

#include <filesystem>

#include "support/helpers.hpp"

namespace ts = testsupport;
namespace fs = std::filesystem;

TEST_CASE("missing input exits nonzero and leaves no partial files") {
  const auto dir = ts::fresh_temp_dir("cli_missing");
  const auto out = dir / "out";
  const auto result =
      ts::run_cli("collections /nonexistent/corpus.jsonl -o '" + out.string() + "'");
  CHECK(result.exit_code == 1);
  CHECK(result.output.find("error:") != std::string::npos);
  CHECK_FALSE(fs::exists(out));
  fs::remove_all(dir);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(ts::run_cli("frobnicate").exit_code == 2);
  CHECK(ts::run_cli("collections").exit_code == 2);          // missing required args
  CHECK(ts::run_cli("dominance --nope x").exit_code == 2);
  CHECK(ts::run_cli("").exit_code == 2);                      // subcommand required
}

TEST_CASE("help and version exit cleanly") {
  CHECK(ts::run_cli("--help").exit_code == 0);
  const auto version = ts::run_cli("--version");
  CHECK(version.exit_code == 0);
  CHECK(version.output.find("0.1.0") != std::string::npos);
}

TEST_CASE("collections with --cite-min 1 captures every cited record") {
  const auto dir = ts::fresh_temp_dir("cli_citemin");
  const auto out = dir / "out";
  const auto result = ts::run_cli("collections '" +
                                  ts::data_path("fixtures/records12.jsonl") + "' -o '" +
                                  out.string() + "' --cite-min 1");
  REQUIRE(result.exit_code == 0);
  CHECK(ts::slurp((out / "cited.ids").string()) == "r01\nr02\nr05\nr06\n");
  fs::remove_all(dir);
}

TEST_CASE("the CSV flag accepts the CSV fixture") {
  const auto dir = ts::fresh_temp_dir("cli_csv");
  const auto out = dir / "out";
  const auto result = ts::run_cli("collections '" +
                                  ts::data_path("fixtures/records12.csv") + "' -o '" +
                                  out.string() + "' --csv");
  REQUIRE(result.exit_code == 0);
  CHECK(ts::slurp((out / "control.ids").string()) == "r09\nr10\nr11\nr12\n");
  // and the same file without --csv is a data error, not a crash
  const auto wrong = ts::run_cli("collections '" +
                                 ts::data_path("fixtures/records12.csv") + "' -o '" +
                                 (dir / "out2").string() + "'");
  CHECK(wrong.exit_code == 1);
  fs::remove_all(dir);
}

TEST_CASE("dominance prints a markdown table by default") {
  const auto dir = ts::fresh_temp_dir("cli_dom");
  const auto out = dir / "out";
  REQUIRE(ts::run_cli("collections '" + ts::data_path("fixtures/records12.jsonl") +
                      "' -o '" + out.string() + "'")
              .exit_code == 0);
  const auto result = ts::run_cli(
      "dominance '" + ts::data_path("fixtures/records12.jsonl") + "' --target '" +
      (out / "cited.ids").string() + "' --control '" + (out / "control.ids").string() +
      "' --lexicon '" + ts::data_path("lexicons/demo.txt") + "'");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("# Dominance report") != std::string::npos);
  CHECK(result.output.find("| SELF |") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("coach writes the requested output file") {
  const auto dir = ts::fresh_temp_dir("cli_coach");
  const auto report = dir / "coach.json";
  const auto result = ts::run_cli(
      "coach '" + ts::data_path("fixtures/sample_abstract.txt") + "' '" +
      ts::data_path("fixtures/records12.jsonl") + "' --lexicon '" +
      ts::data_path("lexicons/virality.txt") + "' --format json -o '" +
      report.string() + "'");
  REQUIRE(result.exit_code == 0);
  CHECK(fs::exists(report));
  CHECK(ts::slurp(report.string()).find("\"kind\": \"profile\"") != std::string::npos);
  fs::remove_all(dir);
}

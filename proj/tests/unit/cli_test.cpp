#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace sugartax {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kCola = SUGARTAX_DATA_DIR "/cola.csv";

TEST(CliTest, SolveSucceeds) {
  const Result r = run({"solve", "--instance", kCola});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.out.find("candidate #24"), std::string::npos);
  EXPECT_TRUE(r.err.empty());
}

TEST(CliTest, SolvePaperModeWithOracle) {
  const Result r = run({"solve", "--instance", kCola, "--welfare-mode", "paper-example", "--oracle",
                        "--grid-step", "0.05", "--alpha-step", "0.25"});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_NE(r.out.find("156043.80"), std::string::npos);
}

TEST(CliTest, OtherSubcommands) {
  EXPECT_EQ(run({"candidates", "--instance", kCola}).code, cli::kExitOk);
  EXPECT_EQ(run({"welfare-curve", "--instance", kCola, "--samples", "3"}).code, cli::kExitOk);
  EXPECT_EQ(run({"plot", "--instance", kCola}).code, cli::kExitOk);
  EXPECT_EQ(run({"verify", "--instance", SUGARTAX_DATA_DIR "/unit_market.csv"}).code, cli::kExitOk);
}

TEST(CliTest, InvalidInputExitsTwo) {
  EXPECT_EQ(run({}).code, cli::kExitInvalidInput);
  EXPECT_EQ(run({"solve"}).code, cli::kExitInvalidInput);
  EXPECT_EQ(run({"bogus", "--instance", kCola}).code, cli::kExitInvalidInput);
  EXPECT_EQ(run({"solve", "--instance", "/nonexistent.csv"}).code, cli::kExitInvalidInput);
  EXPECT_EQ(run({"solve", "--instance", kCola, "--welfare-mode", "paper"}).code, cli::kExitInvalidInput);
  EXPECT_EQ(run({"solve", "--instance", kCola, "--precision", "-3"}).code, cli::kExitInvalidInput);
  EXPECT_EQ(run({"solve", "--instance", kCola, "--grid-step", "abc"}).code, cli::kExitInvalidInput);
  const Result plot3 = run({"plot", "--instance", SUGARTAX_DATA_DIR "/three_products.csv"});
  EXPECT_EQ(plot3.code, cli::kExitInvalidInput);
  EXPECT_NE(plot3.err.find("two products"), std::string::npos);
}

TEST(CliTest, HelpExitsZero) {
  const Result r = run({"--help"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.out.find("solve"), std::string::npos);
}

TEST(CliTest, ConfigFileAndOutFile) {
  const auto path = std::filesystem::temp_directory_path() / "sugartax_cli_test_report.json";
  std::filesystem::remove(path);
  const Result r = run({"solve", "--instance", kCola, "--config", SUGARTAX_DATA_DIR "/run_config.json", "--format",
                        "json", "--out", path.string()});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  EXPECT_NE(content.str().find("\"welfare_mode\": \"paper-example\""), std::string::npos);
  std::filesystem::remove(path);
}

TEST(CliTest, OutputIdenticalAcrossThreadCounts) {
  const Result a = run({"solve", "--instance", kCola, "--threads", "1"});
  const Result b = run({"solve", "--instance", kCola, "--threads", "4"});
  EXPECT_EQ(a.out, b.out);
}

}  // namespace
}  // namespace sugartax

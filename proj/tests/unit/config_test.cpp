#include <gtest/gtest.h>

#include "sugartax/io/config.hpp"

namespace sugartax {
namespace {

using io::OutputFormat;
using io::RunConfig;

TEST(ConfigTest, Defaults) {
  const RunConfig c = io::parse_config("{}");
  EXPECT_EQ(c.mode, WelfareMode::definition);
  EXPECT_FALSE(c.oracle);
  EXPECT_EQ(c.precision, 2);
  EXPECT_EQ(c.threads, 1u);
  EXPECT_EQ(c.curve_samples, 11u);
  EXPECT_EQ(c.format, OutputFormat::text);
  EXPECT_FALSE(c.grid_step);
}

TEST(ConfigTest, ReadsEveryKey) {
  const RunConfig c = io::parse_config(R"({"welfare_mode": "paper-example", "oracle": true, "grid_step": "1/100",
      "alpha_step": 0.05, "out": "r.txt", "precision": 4, "threads": 3, "curve_samples": 21, "format": "json"})");
  EXPECT_EQ(c.mode, WelfareMode::tax_double_counted);
  EXPECT_TRUE(c.oracle);
  EXPECT_EQ(*c.grid_step, Rational(1, 100));
  EXPECT_EQ(*c.alpha_step, Rational(1, 20));
  EXPECT_EQ(c.out->string(), "r.txt");
  EXPECT_EQ(c.precision, 4);
  EXPECT_EQ(c.threads, 3u);
  EXPECT_EQ(c.curve_samples, 21u);
  EXPECT_EQ(c.format, OutputFormat::json);
}

TEST(ConfigTest, OverlaysOntoBase) {
  RunConfig base;
  base.precision = 5;
  base.threads = 4;
  const RunConfig c = io::parse_config(R"({"threads": 2})", base);
  EXPECT_EQ(c.precision, 5);
  EXPECT_EQ(c.threads, 2u);
}

TEST(ConfigTest, BundledConfig) {
  const RunConfig c = io::load_config(SUGARTAX_DATA_DIR "/run_config.json");
  EXPECT_EQ(c.mode, WelfareMode::tax_double_counted);
  EXPECT_EQ(c.threads, 2u);
  EXPECT_EQ(*c.alpha_step, Rational(1, 20));
}

TEST(ConfigTest, RejectsBadInput) {
  for (const char* bad : {"[1]", "{", R"({"welfare_mode": "x"})", R"({"precision": -1})", R"({"threads": 0})",
                          R"({"grid_step": "0"})", R"({"curve_samples": 1})", R"({"format": "xml"})",
                          R"({"unknown": 1})", R"({"oracle": "yes"})"}) {
    EXPECT_THROW(io::parse_config(bad), std::invalid_argument) << bad;
  }
}

TEST(ConfigTest, OutputFormatNames) {
  EXPECT_EQ(io::parse_output_format("text"), OutputFormat::text);
  EXPECT_EQ(io::parse_output_format("json"), OutputFormat::json);
  EXPECT_THROW(io::parse_output_format("csv"), std::invalid_argument);
}

}  // namespace
}  // namespace sugartax

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string_view>

#include "sugartax/welfare.hpp"

namespace sugartax::io {

enum class OutputFormat { text, json };

struct RunConfig {
  WelfareMode mode = WelfareMode::definition;
  bool oracle = false;
  std::optional<Rational> grid_step;
  std::optional<Rational> alpha_step;
  std::optional<std::filesystem::path> out;
  int precision = 2;
  unsigned threads = 1;
  std::size_t curve_samples = 11;
  OutputFormat format = OutputFormat::text;

  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

/// Overlays the keys present in a JSON object onto `base`. Keys:
/// welfare_mode, oracle, grid_step, alpha_step, out, precision, threads,
/// curve_samples, format. Steps may be JSON numbers or exact strings ("1/100").
RunConfig parse_config(std::string_view json_text, RunConfig base = {});
RunConfig load_config(const std::filesystem::path& path, RunConfig base = {});

OutputFormat parse_output_format(std::string_view text);

}  // namespace sugartax::io

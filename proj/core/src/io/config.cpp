#include "sugartax/io/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace sugartax::io {

void RunConfig::validate() const {
  if (precision < 0 || precision > 12) throw std::invalid_argument("precision must be in [0, 12]");
  if (threads == 0) throw std::invalid_argument("threads must be positive");
  if (curve_samples < 2) throw std::invalid_argument("curve samples must be at least 2");
  if (grid_step && *grid_step <= 0) throw std::invalid_argument("grid step must be positive");
  if (alpha_step && (*alpha_step <= 0 || *alpha_step > 1)) throw std::invalid_argument("alpha step must be in (0, 1]");
}

OutputFormat parse_output_format(std::string_view text) {
  if (text == "text") return OutputFormat::text;
  if (text == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown format '" + std::string(text) + "' (expected text or json)");
}

namespace {

Rational rational_field(const nlohmann::json& value, const char* key) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number()) return parse_rational(value.dump());
  throw std::invalid_argument(std::string("config key '") + key + "' must be a number or string");
}

}  // namespace

RunConfig parse_config(std::string_view json_text, RunConfig base) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("config must be a JSON object");

  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "welfare_mode") {
        base.mode = parse_welfare_mode(value.get<std::string>());
      } else if (key == "oracle") {
        base.oracle = value.get<bool>();
      } else if (key == "grid_step") {
        base.grid_step = rational_field(value, "grid_step");
      } else if (key == "alpha_step") {
        base.alpha_step = rational_field(value, "alpha_step");
      } else if (key == "out") {
        base.out = value.get<std::string>();
      } else if (key == "precision") {
        base.precision = value.get<int>();
      } else if (key == "threads") {
        base.threads = value.get<unsigned>();
      } else if (key == "curve_samples") {
        base.curve_samples = value.get<std::size_t>();
      } else if (key == "format") {
        base.format = parse_output_format(value.get<std::string>());
      } else {
        throw std::invalid_argument("unknown config key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::type_error& e) {
    throw std::invalid_argument(std::string("config value has the wrong type: ") + e.what());
  }
  base.validate();
  return base;
}

RunConfig load_config(const std::filesystem::path& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), std::move(base));
}

}  // namespace sugartax::io

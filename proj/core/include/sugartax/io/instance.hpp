#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sugartax/market.hpp"

namespace sugartax::io {

/// Input validation failure, with the 1-based line it refers to (0 when the
/// problem is not tied to a single line).
class InstanceError : public std::runtime_error {
 public:
  InstanceError(std::string source, std::size_t line, const std::string& message);

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Instance text format: comma-separated tables in named sections.
///
///   [products]
///   id,taxed
///   zero,false
///   cola,true
///
///   [consumers]
///   consumer,product,beta,sensitivity,demand
///   high,cola,0.94,0.2,9942
///
///   [globals]            (optional)
///   name,value
///   beta1,0.1
///
/// Globals are beta1, beta2, nr_claims and nutr_val (default 0); the loaded
/// intercept is beta + beta1 * nr_claims + beta2 * nutr_val. Numbers are exact
/// decimals or p/q fractions. Blank lines and lines starting with '#' are
/// ignored. Products are indexed in file order, consumers by first
/// appearance.
Market parse_instance(std::istream& in, std::string_view source = "<input>");
Market load_instance(const std::filesystem::path& path);

/// Writes `market` in the same format with zero globals; exact rationals, so
/// parse_instance reproduces the market exactly.
void write_instance(std::ostream& out, const Market& market);

}  // namespace sugartax::io

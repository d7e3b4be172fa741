#pragma once

#include <array>
#include <string>
#include <vector>

#include "sugartax/market.hpp"

namespace sugartax::testing {

inline constexpr std::size_t kZero = 0;  // untaxed product
inline constexpr std::size_t kCola = 1;  // taxed product
inline constexpr std::size_t kHigh = 0;
inline constexpr std::size_t kMedium = 1;
inline constexpr std::size_t kLow = 2;

inline Rational q(const char* text) { return parse_rational(text); }

/// Cola market built directly from the utility table, independent of the
/// file loader.
inline Market cola_market() {
  std::vector<Product> products{{"zero", kZero, false}, {"cola", kCola, true}};
  auto consumer = [](std::string id, const char* a0, const char* s0, const char* a1, const char* s1, const char* d) {
    return Consumer{std::move(id), {{q(a0), q(s0)}, {q(a1), q(s1)}}, {q(d), q(d)}};
  };
  return Market(products, {consumer("high", "0.41", "0.26", "0.94", "0.2", "9942"),
                           consumer("medium", "0.47", "0.24", "0.17", "0.18", "9433"),
                           consumer("low", "0.93", "0.17", "0.53", "0.23", "11441")});
}

/// Builds a price vector from (taxed, untaxed) coordinates as the published
/// table prints them.
inline PriceVector table_point(const char* cola, const char* zero) {
  PriceVector p(2);
  p[kCola] = q(cola);
  p[kZero] = q(zero);
  return p;
}

/// The 20 published candidate points whose generating lines can be
/// identified, with printed coordinates and revenue.
struct PublishedPoint {
  int nr;
  const char* cola;
  const char* zero;
  const char* revenue;
};

inline const std::array<PublishedPoint, 20>& published_points() {
  static const std::array<PublishedPoint, 20> points{{
      {1, "0", "1.25", "14301.25"},   {2, "0", "1.58", "18076.78"},     {3, "0", "1.96", "22424.36"},
      {4, "0", "2.35", "0"},          {5, "0", "5.47", "0"},            {6, "0.44", "1.58", "26601.78"},
      {7, "0.94", "0", "9345.48"},    {8, "0.94", "1.58", "42326.4"},   {9, "0.94", "1.96", "40636.86"},
      {10, "0.94", "3.62", "28967.04"}, {11, "0.94", "5.47", "28967.04"}, {17, "2.65", "0", "26346.3"},
      {18, "4.7", "0", "0"},          {19, "4.7", "1.58", "79708.32"},  {20, "4.7", "1.96", "87640.44"},
      {22, "4.7", "5.47", "109309.67"}, {23, "4.7", "8.7", "46727.4"},  {24, "5.19", "1.96", "4913.04"},
      {25, "5.63", "5.47", "62582.27"}, {26, "9.75", "5.47", "62582.27"},
  }};
  return points;
}

}  // namespace sugartax::testing

#include <gtest/gtest.h>

#include <sstream>

#include "paper_instance.hpp"
#include "sugartax/io/instance.hpp"
#include "sugartax/io/plot.hpp"

namespace sugartax {
namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

std::string svg(const Market& m) {
  std::ostringstream out;
  io::write_price_space_svg(out, m, enumerate_candidates(m));
  return out.str();
}

TEST(PlotTest, ColaPriceSpace) {
  const std::string s = svg(testing::cola_market());
  EXPECT_NE(s.find("<svg"), std::string::npos);
  EXPECT_NE(s.find("</svg>"), std::string::npos);
  EXPECT_EQ(count(s, "class=\"budget\""), 6u);
  EXPECT_EQ(count(s, "class=\"indifference\""), 3u);
  EXPECT_EQ(count(s, "class=\"axis\""), 2u);
  // Every candidate is either drawn or listed as outside the view.
  const std::size_t drawn = count(s, "class=\"candidate\"");
  EXPECT_GE(drawn, 20u);
  EXPECT_EQ(drawn + count(s, "#28 "), 28u);
}

TEST(PlotTest, UnitMarket) {
  const std::string s = svg(io::load_instance(SUGARTAX_DATA_DIR "/unit_market.csv"));
  EXPECT_EQ(count(s, "class=\"budget\""), 2u);
  EXPECT_EQ(count(s, "class=\"indifference\""), 1u);
  EXPECT_EQ(count(s, "class=\"axis\""), 2u);
  EXPECT_EQ(count(s, "class=\"candidate\""), 4u);
}

TEST(PlotTest, Deterministic) {
  EXPECT_EQ(svg(testing::cola_market()), svg(testing::cola_market()));
}

TEST(PlotTest, RequiresTwoProducts) {
  const Market m = io::load_instance(SUGARTAX_DATA_DIR "/three_products.csv");
  EXPECT_THROW(svg(m), std::invalid_argument);
}

}  // namespace
}  // namespace sugartax

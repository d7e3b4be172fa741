#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "paper_instance.hpp"
#include "random_market.hpp"
#include "sugartax/arrangement.hpp"
#include "sugartax/welfare.hpp"

namespace sugartax {
namespace {

using testing::cola_market;
using testing::q;
using testing::table_point;

TEST(WelfareModeTest, NamesRoundTrip) {
  EXPECT_EQ(to_string(WelfareMode::definition), "definition");
  EXPECT_EQ(to_string(WelfareMode::tax_double_counted), "paper-example");
  EXPECT_EQ(parse_welfare_mode("definition"), WelfareMode::definition);
  EXPECT_EQ(parse_welfare_mode("paper-example"), WelfareMode::tax_double_counted);
  EXPECT_THROW(parse_welfare_mode("paper"), std::invalid_argument);
}

TEST(ConsumerSurplusTest, SumsLogOnePlusUtilityOverPurchases) {
  const Market m = cola_market();
  const PriceVector p = table_point("0", "1.25");
  const double expected = std::log(1.94) + std::log(1.17) + std::log(1.7175);
  EXPECT_NEAR(consumer_surplus(m, p, assign(m, p)), expected, 1e-12);
}

TEST(ConsumerSurplusTest, ZeroAtTheColaOptimum) {
  const Market m = cola_market();
  const PriceVector p = table_point("4.7", "93/17");
  EXPECT_EQ(consumer_surplus(m, p, assign(m, p)), 0.0);
}

TEST(SocialWelfareTest, ColaOptimumAtFullTax) {
  const Market m = cola_market();
  const PriceVector p = table_point("4.7", "93/17");
  const Assignment a = assign(m, p);
  const auto def = social_welfare(m, p, a, TaxRate::full(), WelfareMode::definition);
  const auto paper = social_welfare(m, p, a, TaxRate::full(), WelfareMode::tax_double_counted);
  EXPECT_EQ(def.exact_part, q("109316.4"));
  EXPECT_EQ(paper.exact_part, q("156043.8"));
  EXPECT_EQ(paper.tax, q("46727.4"));
  EXPECT_EQ(paper.firm_utility, Rational(62589));
  EXPECT_DOUBLE_EQ(paper.total, 156043.8);
}

TEST(SocialWelfareTest, DefinitionEqualsSurplusPlusGross) {
  const RevenueSplit r{Rational(10), Rational(30)};
  for (const char* alpha : {"0", "0.3", "1"}) {
    const auto w = make_welfare(0.5, r, TaxRate(q(alpha)), WelfareMode::definition);
    EXPECT_EQ(w.exact_part, 40);
    EXPECT_DOUBLE_EQ(w.total, 40.5);
    EXPECT_EQ(w.firm_utility + w.tax, 40);
  }
}

TEST(WelfareProperties, ModeIdentityAndNonnegativeSurplus) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 60; ++trial) {
    const Market m = testing::random_market(rng);
    const CandidateSet c = enumerate_candidates(m);
    const TaxRate alpha(ratio(static_cast<long>(rng() % 21), 20));
    for (const auto& point : c.points()) {
      const Assignment a = assign(m, point.prices);
      const auto def = social_welfare(m, point.prices, a, alpha, WelfareMode::definition);
      const auto paper = social_welfare(m, point.prices, a, alpha, WelfareMode::tax_double_counted);
      EXPECT_EQ(paper.exact_part - def.exact_part, tax_collected(m, point.prices, a, alpha));
      EXPECT_GE(def.consumer_surplus, 0.0);
      EXPECT_EQ(def.consumer_surplus, paper.consumer_surplus);
    }
  }
}

TEST(WelfareBreakdownTest, CompareOrdersByTotal) {
  const RevenueSplit small{Rational(1), Rational(0)};
  const RevenueSplit large{Rational(2), Rational(0)};
  const auto a = make_welfare(0.0, small, TaxRate::zero(), WelfareMode::definition);
  const auto b = make_welfare(0.0, large, TaxRate::zero(), WelfareMode::definition);
  const auto c = make_welfare(2.0, small, TaxRate::zero(), WelfareMode::definition);
  EXPECT_LT(a.compare(b), 0);
  EXPECT_GT(b.compare(a), 0);
  EXPECT_EQ(a.compare(a), 0);
  EXPECT_GT(c.compare(b), 0);
}

}  // namespace
}  // namespace sugartax

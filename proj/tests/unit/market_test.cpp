#include <gtest/gtest.h>

#include <random>

#include "paper_instance.hpp"
#include "random_market.hpp"
#include "sugartax/market.hpp"

namespace sugartax {
namespace {

using testing::cola_market;
using testing::kCola;
using testing::kHigh;
using testing::kLow;
using testing::kMedium;
using testing::kZero;
using testing::q;
using testing::table_point;

TEST(EffectiveInterceptTest, FoldsClaimsAndNutrition) {
  EXPECT_EQ(effective_intercept(q("0.5"), q("0.1"), q("0.2"), q("2"), q("1")), q("0.9"));
  EXPECT_EQ(effective_intercept(q("0.94"), 0, 0, 0, 0), q("0.94"));
}

TEST(EffectiveInterceptTest, ZeroClaimsAndNutritionIsIdentity) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const Rational x = ratio(static_cast<long>(rng() % 2000) - 1000, 100);
    const Rational b1 = ratio(static_cast<long>(rng() % 200), 100);
    const Rational b2 = ratio(static_cast<long>(rng() % 200), 100);
    EXPECT_EQ(effective_intercept(x, b1, b2, 0, 0), x);
  }
}

TEST(UtilityTest, RawUtilityMatchesUtilityTable) {
  const Market m = cola_market();
  const auto& c = m.consumers();
  EXPECT_EQ(raw_utility(c[kHigh], kCola, table_point("4.7", "0")), 0);
  EXPECT_EQ(raw_utility(c[kLow], kZero, table_point("0", "1.25")), q("0.7175"));
  EXPECT_EQ(raw_utility(c[kMedium], kCola, table_point("0", "1.25")), q("0.17"));
}

TEST(UtilityTest, ClippedUtility) {
  const Market m = cola_market();
  const auto& c = m.consumers();
  // 0.53 - 0.23 * 4.7 = -0.551
  EXPECT_EQ(raw_utility(c[kLow], kCola, table_point("4.7", "0")), q("-0.551"));
  EXPECT_EQ(clipped_utility(c[kLow], kCola, table_point("4.7", "0")), 0);
  EXPECT_EQ(clipped_utility(c[kHigh], kCola, table_point("0", "0")), q("0.94"));
  EXPECT_EQ(clipped_utility(c[kHigh], kCola, table_point("4.7", "0")), 0);
}

TEST(UtilityTest, BudgetPrice) {
  const Market m = cola_market();
  EXPECT_EQ(budget_price(m.consumers()[kHigh], kCola), q("4.7"));
  EXPECT_EQ(budget_price(m.consumers()[kLow], kZero), Rational(93, 17));
}

TEST(UtilityProperties, StrictlyDecreasingInOwnPriceConstantInOthers) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Market m = testing::random_market(rng, {.products = 3});
    const Consumer& c = m.consumers().front();
    PriceVector p = testing::random_prices(rng, 3, 500, 100);
    for (std::size_t j = 0; j < 3; ++j) {
      PriceVector higher = p;
      higher[j] += ratio(1, 100);
      EXPECT_LT(raw_utility(c, j, higher), raw_utility(c, j, p));
      for (std::size_t k = 0; k < 3; ++k) {
        if (k != j) {
          EXPECT_EQ(raw_utility(c, k, higher), raw_utility(c, k, p));
        }
      }
    }
  }
}

TEST(UtilityProperties, ClippingMatchesBudgetPrice) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const Market m = testing::random_market(rng);
    const Consumer& c = m.consumers().front();
    const PriceVector p = testing::random_prices(rng, 2, 1500, 100);
    for (std::size_t j = 0; j < 2; ++j) {
      if (p[j] <= budget_price(c, j)) {
        EXPECT_EQ(clipped_utility(c, j, p), raw_utility(c, j, p));
      } else {
        EXPECT_EQ(clipped_utility(c, j, p), 0);
      }
    }
  }
}

TEST(UtilityProperties, UniformScalingScalesRawUtility) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const Market m = testing::random_market(rng);
    const Rational lambda = ratio(static_cast<long>(rng() % 900) + 1, 100);
    const Market s = testing::scaled(m, lambda);
    const PriceVector p = testing::random_prices(rng, 2, 1500, 100);
    for (std::size_t i = 0; i < m.consumer_count(); ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        EXPECT_EQ(raw_utility(s.consumers()[i], j, p), lambda * raw_utility(m.consumers()[i], j, p));
      }
    }
  }
}

TEST(MarketTest, RejectsInvalidInstances) {
  const std::vector<Product> products{{"a", 0, false}, {"b", 1, true}};
  EXPECT_THROW(Market({}, {}), ModelError);
  EXPECT_THROW(Market({{"a", 1, false}}, {}), ModelError);
  EXPECT_THROW(Market({{"a", 0, false}, {"a", 1, false}}, {}), ModelError);
  EXPECT_THROW(Market(products, {Consumer{"c", {{1, 0}, {1, 1}}, {1, 1}}}), ModelError);
  EXPECT_THROW(Market(products, {Consumer{"c", {{1, 1}, {1, -1}}, {1, 1}}}), ModelError);
  EXPECT_THROW(Market(products, {Consumer{"c", {{1, 1}, {1, 1}}, {1, -1}}}), ModelError);
  EXPECT_THROW(Market(products, {Consumer{"c", {{1, 1}}, {1}}}), ModelError);
  EXPECT_NO_THROW(Market(products, {}));
}

TEST(MarketTest, ChecksPrices) {
  const Market m = cola_market();
  EXPECT_NO_THROW(m.check_prices({0, 1}));
  EXPECT_THROW(m.check_prices({0}), ModelError);
  EXPECT_THROW(m.check_prices({Rational(-1, 100), 1}), ModelError);
  EXPECT_TRUE(m.has_taxed_product());
}

}  // namespace
}  // namespace sugartax

#include <gtest/gtest.h>

#include <random>

#include "paper_instance.hpp"
#include "random_market.hpp"
#include "sugartax/revenue.hpp"

namespace sugartax {
namespace {

using testing::cola_market;
using testing::q;
using testing::table_point;

TEST(TaxRateTest, AcceptsUnitIntervalOnly) {
  EXPECT_NO_THROW(TaxRate(Rational(0)));
  EXPECT_NO_THROW(TaxRate(Rational(1)));
  EXPECT_NO_THROW(TaxRate(Rational(1, 2)));
  EXPECT_THROW(TaxRate(Rational(-1, 100)), ModelError);
  EXPECT_THROW(TaxRate(Rational(101, 100)), ModelError);
  EXPECT_EQ(TaxRate::full().value(), 1);
}

TEST(RevenueTest, ColaOptimum) {
  const Market m = cola_market();
  const PriceVector p = table_point("4.7", "93/17");
  const RevenueSplit r = revenue_split(m, p, assign(m, p));
  // Low buys zero: 11441 * 93/17 = 673 * 93; High buys cola: 9942 * 4.7.
  EXPECT_EQ(r.untaxed, Rational(62589));
  EXPECT_EQ(r.taxed, q("46727.4"));
  EXPECT_EQ(r.gross(), q("109316.4"));
  EXPECT_EQ(r.net(TaxRate(Rational(1, 4))), q("62589") + q("0.75") * q("46727.4"));
  EXPECT_EQ(r.tax(TaxRate::full()), q("46727.4"));
}

TEST(RevenueTest, RoundedDisplayPrices) {
  const Market m = cola_market();
  const PriceVector p = table_point("4.7", "5.47");
  EXPECT_EQ(gross_revenue(m, p, assign(m, p)), q("109309.67"));
}

TEST(RevenueTest, ZeroPricedTaxedPurchase) {
  const Market m = cola_market();
  const PriceVector p = table_point("0", "1.25");
  // High takes cola for free; Medium's tie (0.17 each) goes to paid zero.
  const RevenueSplit r = revenue_split(m, p, assign(m, p));
  EXPECT_EQ(r.taxed, 0);
  EXPECT_EQ(r.untaxed, q("26092.5"));
}

TEST(RevenueTest, NetIsLinearAndNonIncreasingInAlpha) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const Market m = testing::random_market(rng);
    const PriceVector p = testing::random_prices(rng, 2, 600, 100);
    const Assignment a = assign(m, p);
    const Rational a1 = ratio(static_cast<long>(rng() % 101), 100);
    const Rational a2 = ratio(static_cast<long>(rng() % 101), 100);
    const Rational n1 = net_utility(m, p, a, TaxRate(a1));
    const Rational n2 = net_utility(m, p, a, TaxRate(a2));
    if (a1 <= a2) {
      EXPECT_GE(n1, n2);
    }
    EXPECT_EQ(n1 + tax_collected(m, p, a, TaxRate(a1)), gross_revenue(m, p, a));
    const RevenueSplit r = revenue_split(m, p, a);
    EXPECT_EQ(n1, r.untaxed + (1 - a1) * r.taxed);
  }
}

}  // namespace
}  // namespace sugartax

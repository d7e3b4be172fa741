#include <gtest/gtest.h>

#include <random>

#include "paper_instance.hpp"
#include "random_market.hpp"
#include "sugartax/oracle.hpp"

namespace sugartax {
namespace {

using testing::cola_market;
using testing::q;
using testing::table_point;

GridSpec box(std::size_t m, const char* upper, const char* step, const char* alpha_step = "0.05") {
  return GridSpec{std::vector<Rational>(m, Rational(0)), std::vector<Rational>(m, q(upper)), q(step), q(alpha_step)};
}

TEST(GridSpecTest, Validation) {
  EXPECT_NO_THROW(box(2, "1", "0.1").validate(2));
  EXPECT_THROW(box(2, "1", "0.1").validate(3), ModelError);
  EXPECT_THROW(box(2, "0", "0.1").validate(2), ModelError);
  EXPECT_THROW(box(2, "1", "0").validate(2), ModelError);
  EXPECT_THROW(box(2, "1", "0.1", "0").validate(2), ModelError);
}

TEST(GridSpecTest, RatesAlwaysEndAtOne) {
  const auto rates = grid_rates(box(1, "1", "1", "0.3"));
  EXPECT_EQ(rates, (std::vector<Rational>{0, q("0.3"), q("0.6"), q("0.9"), 1}));
  EXPECT_EQ(grid_rates(box(1, "1", "1", "0.25")).size(), 5u);
}

TEST(GridSpecTest, AxisStopsJustAboveLargestBudget) {
  const Market m({{"a", 0, false}, {"b", 1, true}}, {Consumer{"only", {{1, 1}, {1, 1}}, {1, 1}}});
  const auto axis = evaluated_axis(m, box(2, "5", "0.5"), 0);
  EXPECT_EQ(axis, (std::vector<Rational>{0, q("0.5"), 1, q("1.5")}));
  EXPECT_EQ(evaluated_point_count(m, box(2, "5", "0.5")), 16u);
}

TEST(GridBestResponseTest, ColaAtZeroTaxOnCentGrid) {
  const Market m = cola_market();
  const CandidateSet c = enumerate_candidates(m);
  const GridOutcome g = grid_best_response(m, TaxRate::zero(), box(2, "12", "0.01"), c);
  EXPECT_EQ(g.prices, table_point("4.7", "5.47"));
  EXPECT_EQ(g.net, q("109309.67"));
  EXPECT_LE(g.net, best_response(m, c, TaxRate::zero()).net);
}

TEST(GridBestResponseTest, RejectsBoxMissingAPayingCandidate) {
  const Market m = cola_market();
  const CandidateSet c = enumerate_candidates(m);
  EXPECT_THROW(grid_best_response(m, TaxRate::zero(), box(2, "5", "0.01"), c), ModelError);
}

TEST(GridBestResponseTest, SweepMatchesSingleRates) {
  const Market m = cola_market();
  const CandidateSet c = enumerate_candidates(m);
  const GridSpec g = box(2, "12", "0.05");
  const std::vector<Rational> alphas{0, q("0.5"), 1};
  const auto sweep = grid_sweep(m, alphas, g, c, WelfareMode::definition, 3);
  ASSERT_EQ(sweep.size(), 3u);
  for (std::size_t k = 0; k < alphas.size(); ++k) {
    const GridOutcome single = grid_best_response(m, TaxRate(alphas[k]), g, c);
    EXPECT_EQ(sweep[k].prices, single.prices);
    EXPECT_EQ(sweep[k].net, single.net);
  }
}

TEST(VerifyTest, ColaPassesAndCorruptedSetFails) {
  const Market m = cola_market();
  const CandidateSet c = enumerate_candidates(m);
  const GridSpec g = box(2, "12", "0.01", "0.25");
  const TaxSolution good = optimize(m, c, WelfareMode::definition);
  EXPECT_TRUE(verify_solution(m, c, good, g).passed());

  const CandidateSet corrupted = c.without(*c.find(table_point("4.7", "93/17")));
  const TaxSolution bad = optimize(m, corrupted, WelfareMode::definition);
  const VerificationReport report = verify_solution(m, corrupted, bad, g);
  ASSERT_FALSE(report.passed());
  bool at_zero = false;
  for (const Violation& v : report.violations) at_zero = at_zero || v.alpha == 0;
  EXPECT_TRUE(at_zero);
}

// At full tax the firm wants the untaxed sale; at the vertex where both
// utilities hit zero the consumer's tie must go that way.
TEST(VerifyTest, UtilityTieAtFullTaxFavorsUntaxedSale) {
  const Market m({{"p0", 0, false}, {"p1", 1, true}},
                 {Consumer{"c0", {{q("0.37"), q("0.84")}, {q("0.62"), q("0.37")}}, {1863, 4713}}});
  const CandidateSet c = enumerate_candidates(m);
  const ResponseOutcome r = best_response(m, c, TaxRate::full());
  EXPECT_EQ(r.net, Rational(1863) * Rational(37, 84));
  EXPECT_EQ(r.choices, Assignment{Choice::of(0)});
  GridSpec g = default_grid(m, c);
  g.price_step = q("0.05");
  g.alpha_step = q("0.25");
  for (WelfareMode mode : {WelfareMode::definition, WelfareMode::tax_double_counted}) {
    EXPECT_TRUE(verify_solution(m, c, optimize(m, c, mode), g).passed());
  }
}

TEST(VerifyTest, EmptyMarketPasses) {
  const Market m({{"a", 0, false}, {"b", 1, true}}, {});
  const CandidateSet c = enumerate_candidates(m);
  const VerificationReport r = verify_solution(m, c, optimize(m, c, WelfareMode::definition), default_grid(m, c));
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.rates_checked, 0u);
}

TEST(OracleProperties, GridNeverBeatsEnumeration) {
  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 8; ++trial) {
    const Market m = testing::random_market(rng, {.max_consumers = 3});
    const CandidateSet c = enumerate_candidates(m);
    GridSpec g = default_grid(m, c);
    g.price_step = q("0.05");
    g.alpha_step = q("0.25");
    for (WelfareMode mode : {WelfareMode::definition, WelfareMode::tax_double_counted}) {
      const VerificationReport r = verify_solution(m, c, optimize(m, c, mode), g);
      EXPECT_TRUE(r.passed()) << (r.violations.empty() ? "" : r.violations.front().message);
    }
  }
}

TEST(OracleProperties, RefiningTheGridNeverLowersTheOptimum) {
  std::mt19937_64 rng(82);
  for (int trial = 0; trial < 8; ++trial) {
    const Market m = testing::random_market(rng, {.max_consumers = 3});
    const CandidateSet c = enumerate_candidates(m);
    GridSpec coarse = default_grid(m, c);
    coarse.price_step = q("0.1");
    GridSpec fine = coarse;
    fine.price_step = q("0.05");
    const std::vector<Rational> alphas{0, q("0.5"), 1};
    const auto a = grid_sweep(m, alphas, coarse, c);
    const auto b = grid_sweep(m, alphas, fine, c);
    for (std::size_t k = 0; k < alphas.size(); ++k) EXPECT_GE(b[k].net, a[k].net);
  }
}

}  // namespace
}  // namespace sugartax

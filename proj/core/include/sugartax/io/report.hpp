#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "sugartax/io/config.hpp"
#include "sugartax/oracle.hpp"

namespace sugartax::io {

/// Optimum re-evaluated at its prices rounded to the report precision, i.e.
/// the prices a reader of the report would actually post.
struct DisplayEvaluation {
  PriceVector prices;
  Assignment choices;
  RevenueSplit revenue;
  WelfareBreakdown definition;
  WelfareBreakdown tax_double_counted;
};

struct SolveReport {
  TaxSolution solution;
  WelfareBreakdown definition;          // at (alpha*, p*)
  WelfareBreakdown tax_double_counted;  // at (alpha*, p*)
  DisplayEvaluation display;
  std::optional<GridSpec> grid;
  std::optional<VerificationReport> verification;
};

/// Runs the full pipeline for one instance: candidates, break-evens, optimal
/// rate in the configured mode, and the oracle when `config.oracle` is set.
SolveReport solve(const Market& market, const CandidateSet& candidates, const RunConfig& config);

/// Grid from the config overrides on top of default_grid.
GridSpec grid_for(const Market& market, const CandidateSet& candidates, const RunConfig& config);

void write_solve_report(std::ostream& out, const Market& market, const CandidateSet& candidates,
                        const SolveReport& report, const RunConfig& config);

/// One row per candidate, sorted by price: prices, each consumer's choice and
/// realized utility, gross revenue.
void write_candidates(std::ostream& out, const Market& market, const CandidateSet& candidates,
                      const RunConfig& config);

void write_welfare_curve(std::ostream& out, const Market& market, const CandidateSet& candidates,
                         const WelfareCurve& curve, const RunConfig& config);

void write_verification(std::ostream& out, const Market& market, const SolveReport& report,
                        const RunConfig& config);

/// "(a, b)" with every price at `precision` decimals.
std::string format_prices(const PriceVector& prices, int precision);

}  // namespace sugartax::io

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sugartax/optimizer.hpp"

namespace sugartax {

/// Price box and resolution for the brute-force oracle. Grid prices are
/// lower + k * price_step (k >= 0, value <= upper); rates are k * alpha_step
/// plus 1.
struct GridSpec {
  std::vector<Rational> lower;
  std::vector<Rational> upper;
  Rational price_step;
  Rational alpha_step;

  /// Throws ModelError unless the box has one nonnegative interval per product
  /// with upper > lower and both steps are positive.
  void validate(std::size_t products) const;
};

/// [0, 1.2 * largest candidate coordinate] per axis, price step 0.01 doubled
/// until the evaluated grid has at most 4e6 points, rate step 0.05.
GridSpec default_grid(const Market& market, const CandidateSet& candidates);

/// Grid values actually evaluated along one axis. Values stop at the first one
/// above every consumer's budget price for the product: beyond that nobody
/// buys it, so each larger price gives the same choices and revenue as that
/// representative.
std::vector<Rational> evaluated_axis(const Market& market, const GridSpec& grid, std::size_t product);

std::size_t evaluated_point_count(const Market& market, const GridSpec& grid);

/// Sample rates k * alpha_step in [0, 1], with 1 always present.
std::vector<Rational> grid_rates(const GridSpec& grid);

struct GridOutcome {
  Rational alpha;
  PriceVector prices;
  Assignment choices;
  RevenueSplit revenue;
  Rational net;
  WelfareBreakdown welfare;
};

/// Brute-force firm optimum at one rate: assigns consumers afresh at every
/// grid point and keeps the best net revenue (ties: larger welfare in
/// `tie_mode`, then the earlier grid point). Throws ModelError if the box
/// leaves out a candidate with positive gross revenue.
GridOutcome grid_best_response(const Market& market, const TaxRate& alpha, const GridSpec& grid,
                               const CandidateSet& coverage, WelfareMode tie_mode = WelfareMode::definition,
                               unsigned threads = 1);

/// Same as grid_best_response for several rates with a single grid pass.
std::vector<GridOutcome> grid_sweep(const Market& market, std::span<const Rational> alphas, const GridSpec& grid,
                                    const CandidateSet& coverage, WelfareMode tie_mode = WelfareMode::definition,
                                    unsigned threads = 1);

struct Violation {
  Rational alpha;
  PriceVector prices;
  std::string message;
};

struct VerificationReport {
  std::vector<Violation> violations;
  std::size_t rates_checked = 0;
  std::size_t grid_points = 0;

  bool passed() const { return violations.empty(); }
};

/// Checks, at every rate the solution evaluated plus the grid rates, that the
/// grid never beats the enumerated firm optimum (exact) and that no grid best
/// response has welfare above W* by more than 1e-9.
VerificationReport verify_solution(const Market& market, const CandidateSet& candidates,
                                   const TaxSolution& solution, const GridSpec& grid, unsigned threads = 1);

}  // namespace sugartax

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sugartax/response.hpp"

namespace sugartax {

/// Rate at which two after-tax revenue lines cross, without clamping to
/// [0, 1]. nullopt when the taxed revenues are equal (parallel or identical
/// lines).
std::optional<Rational> break_even_rate(const RevenueSplit& first, const RevenueSplit& second);

struct BreakEven {
  Rational alpha;
  /// Candidate indices whose revenue lines cross here (equal when two
  /// variants of one candidate meet); empty for an endpoint that no pair
  /// generates.
  std::optional<std::pair<std::size_t, std::size_t>> pair;
};

/// Crossings inside [0, 1] of every pair of revenue lines of the evaluated
/// variants, plus both endpoints, exact-deduplicated and sorted ascending.
std::vector<BreakEven> break_evens(std::span<const EvaluatedCandidate> evaluated);
std::vector<BreakEven> break_evens(const Market& market, const CandidateSet& candidates);

/// Maximal interval over which the firm's best response stays the same
/// candidate.
struct WelfareStep {
  Rational from;
  Rational to;
  std::size_t candidate = 0;
  std::size_t variant = 0;  // index into the evaluated variants
  WelfareBreakdown at_from;
  WelfareBreakdown at_to;
};

struct AlphaEvaluation {
  Rational alpha;
  std::size_t candidate = 0;
  Rational net;
  WelfareBreakdown welfare;
};

struct TaxSolution {
  WelfareMode mode = WelfareMode::definition;
  TaxRate alpha = TaxRate::zero();
  ResponseOutcome response;
  std::vector<BreakEven> break_evens;
  std::vector<AlphaEvaluation> evaluated;
  std::vector<WelfareStep> staircase;

  const WelfareBreakdown& welfare() const { return response.welfare; }
};

struct SolveOptions {
  unsigned threads = 1;
};

/// Evaluates welfare at every break-even rate and keeps the best. Equal
/// welfare goes to the smallest rate in definition mode and the largest in
/// tax_double_counted mode.
TaxSolution optimize(const Market& market, const CandidateSet& candidates, WelfareMode mode,
                     const SolveOptions& options = {});

struct CurvePoint {
  Rational alpha;
  std::size_t candidate = 0;
  bool break_even = false;
  WelfareBreakdown definition;
  WelfareBreakdown tax_double_counted;
};

struct WelfareCurve {
  std::vector<WelfareStep> steps;
  std::vector<CurvePoint> points;  // sorted by alpha
};

/// Welfare at every break-even and at `samples` evenly spaced rates
/// (samples >= 2), plus the merged staircase of best responses.
WelfareCurve welfare_curve(const Market& market, const CandidateSet& candidates, WelfareMode mode,
                           std::size_t samples, const SolveOptions& options = {});

/// Staircase of best responses between consecutive break-evens, adjacent
/// intervals with the same candidate merged.
std::vector<WelfareStep> staircase(const Market& market, std::span<const EvaluatedCandidate> evaluated,
                                   std::span<const BreakEven> rates, WelfareMode mode);

}  // namespace sugartax

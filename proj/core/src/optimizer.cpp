#include "sugartax/optimizer.hpp"

#include <map>
#include <stdexcept>

namespace sugartax {

std::optional<Rational> break_even_rate(const RevenueSplit& first, const RevenueSplit& second) {
  // untaxed' + (1 - a) taxed' = untaxed'' + (1 - a) taxed''
  const Rational taxed_gap = first.taxed - second.taxed;
  if (taxed_gap == 0) return std::nullopt;
  return Rational(1 - (second.untaxed - first.untaxed) / taxed_gap);
}

std::vector<BreakEven> break_evens(std::span<const EvaluatedCandidate> evaluated) {
  // Candidates sharing a revenue line cross nothing new; keep the first of each.
  std::vector<std::size_t> representatives;
  {
    std::map<std::pair<Rational, Rational>, std::size_t> seen;
    for (std::size_t k = 0; k < evaluated.size(); ++k) {
      if (seen.emplace(std::make_pair(evaluated[k].revenue.untaxed, evaluated[k].revenue.taxed), k).second) {
        representatives.push_back(k);
      }
    }
  }

  std::map<Rational, std::optional<std::pair<std::size_t, std::size_t>>> rates;
  for (std::size_t a = 0; a < representatives.size(); ++a) {
    for (std::size_t b = a + 1; b < representatives.size(); ++b) {
      const std::size_t i = representatives[a];
      const std::size_t j = representatives[b];
      auto alpha = break_even_rate(evaluated[i].revenue, evaluated[j].revenue);
      if (!alpha || *alpha < 0 || *alpha > 1) continue;
      rates.emplace(std::move(*alpha), std::make_pair(evaluated[i].candidate, evaluated[j].candidate));
    }
  }
  rates.emplace(Rational(0), std::nullopt);
  rates.emplace(Rational(1), std::nullopt);

  std::vector<BreakEven> out;
  out.reserve(rates.size());
  for (auto& [alpha, pair] : rates) out.push_back(BreakEven{alpha, pair});
  return out;
}

std::vector<BreakEven> break_evens(const Market& market, const CandidateSet& candidates) {
  const auto evaluated = evaluate_candidates(market, candidates);
  return break_evens(evaluated);
}

std::vector<WelfareStep> staircase(const Market& market, std::span<const EvaluatedCandidate> evaluated,
                                   std::span<const BreakEven> rates, WelfareMode mode) {
  const ResponseEnvelope envelope(market, evaluated);
  std::vector<WelfareStep> steps;
  for (std::size_t k = 0; k + 1 < rates.size(); ++k) {
    const Rational& from = rates[k].alpha;
    const Rational& to = rates[k + 1].alpha;
    const TaxRate mid((from + to) / 2);
    const ResponseOutcome chosen = envelope.at(mid, mode);
    if (!steps.empty() && steps.back().variant == chosen.variant) {
      steps.back().to = to;
      continue;
    }
    steps.push_back(WelfareStep{from, to, chosen.candidate, chosen.variant, {}, {}});
  }
  for (WelfareStep& s : steps) {
    const EvaluatedCandidate& e = evaluated[s.variant];
    s.at_from = make_welfare(e.consumer_surplus, e.revenue, TaxRate(s.from), mode);
    s.at_to = make_welfare(e.consumer_surplus, e.revenue, TaxRate(s.to), mode);
  }
  return steps;
}

TaxSolution optimize(const Market& market, const CandidateSet& candidates, WelfareMode mode,
                     const SolveOptions& options) {
  if (candidates.empty()) throw ModelError("cannot optimize over an empty candidate set");

  const auto evaluated = evaluate_candidates(market, candidates, options.threads);

  TaxSolution solution;
  solution.mode = mode;
  solution.break_evens = break_evens(evaluated);
  solution.evaluated.reserve(solution.break_evens.size());
  const ResponseEnvelope envelope(market, evaluated);

  std::optional<std::size_t> best;
  for (const BreakEven& rate : solution.break_evens) {
    const TaxRate alpha(rate.alpha);
    ResponseOutcome response = envelope.at(alpha, mode);
    solution.evaluated.push_back(AlphaEvaluation{rate.alpha, response.candidate, response.net, response.welfare});

    const std::size_t index = solution.evaluated.size() - 1;
    const int cmp = best ? response.welfare.compare(solution.evaluated[*best].welfare) : 1;
    // Rates arrive ascending: strict improvement keeps the smallest rate,
    // >= keeps the largest.
    const bool take = mode == WelfareMode::definition ? cmp > 0 : cmp >= 0;
    if (take) {
      best = index;
      solution.alpha = alpha;
      solution.response = std::move(response);
    }
  }

  solution.staircase = staircase(market, evaluated, solution.break_evens, mode);
  return solution;
}

WelfareCurve welfare_curve(const Market& market, const CandidateSet& candidates, WelfareMode mode,
                           std::size_t samples, const SolveOptions& options) {
  if (samples < 2) throw std::invalid_argument("welfare curve needs at least two samples");
  if (candidates.empty()) throw ModelError("cannot trace welfare over an empty candidate set");

  const auto evaluated = evaluate_candidates(market, candidates, options.threads);
  const auto rates = break_evens(evaluated);

  std::map<Rational, bool> alphas;
  for (const BreakEven& b : rates) alphas[b.alpha] = true;
  for (std::size_t k = 0; k < samples; ++k) {
    alphas.emplace(ratio(static_cast<long>(k), static_cast<long>(samples - 1)), false);
  }

  const ResponseEnvelope envelope(market, evaluated);
  WelfareCurve curve;
  curve.steps = staircase(market, evaluated, rates, mode);
  curve.points.reserve(alphas.size());
  for (const auto& [value, is_break_even] : alphas) {
    const TaxRate alpha(value);
    const ResponseOutcome response = envelope.at(alpha, mode);
    const EvaluatedCandidate& e = evaluated[response.variant];
    curve.points.push_back(CurvePoint{
        value, response.candidate, is_break_even,
        make_welfare(e.consumer_surplus, e.revenue, alpha, WelfareMode::definition),
        make_welfare(e.consumer_surplus, e.revenue, alpha, WelfareMode::tax_double_counted)});
  }
  return curve;
}

}  // namespace sugartax

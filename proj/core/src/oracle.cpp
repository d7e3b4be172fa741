#include "sugartax/oracle.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "sugartax/parallel.hpp"

namespace sugartax {

void GridSpec::validate(std::size_t products) const {
  if (lower.size() != products || upper.size() != products) {
    throw ModelError("grid box must have one interval per product");
  }
  for (std::size_t j = 0; j < products; ++j) {
    if (lower[j] < 0) throw ModelError("grid lower bound below zero");
    if (!(upper[j] > lower[j])) throw ModelError("grid upper bound must exceed lower bound");
  }
  if (price_step <= 0) throw ModelError("grid price step must be positive");
  if (alpha_step <= 0) throw ModelError("grid rate step must be positive");
}

std::vector<Rational> evaluated_axis(const Market& market, const GridSpec& grid, std::size_t product) {
  std::optional<Rational> highest_budget;
  for (const Consumer& c : market.consumers()) {
    Rational b = budget_price(c, product);
    if (!highest_budget || b > *highest_budget) highest_budget = std::move(b);
  }
  std::vector<Rational> values;
  for (Rational v = grid.lower[product]; v <= grid.upper[product]; v += grid.price_step) {
    values.push_back(v);
    if (!highest_budget || v > *highest_budget) break;
  }
  return values;
}

std::size_t evaluated_point_count(const Market& market, const GridSpec& grid) {
  std::size_t count = 1;
  for (std::size_t j = 0; j < market.product_count(); ++j) count *= evaluated_axis(market, grid, j).size();
  return count;
}

GridSpec default_grid(const Market& market, const CandidateSet& candidates) {
  const std::size_t m = market.product_count();
  GridSpec grid;
  grid.lower.assign(m, Rational(0));
  grid.upper.assign(m, Rational(0));
  for (const PricePoint& p : candidates.points()) {
    for (std::size_t j = 0; j < m; ++j) grid.upper[j] = std::max(grid.upper[j], p.prices[j]);
  }
  for (Rational& u : grid.upper) {
    u = u == 0 ? Rational(1) : Rational(u * ratio(6, 5));
  }
  grid.alpha_step = ratio(1, 20);
  grid.price_step = ratio(1, 100);
  constexpr std::size_t kMaxPoints = 4'000'000;
  while (evaluated_point_count(market, grid) > kMaxPoints) grid.price_step *= 2;
  return grid;
}

std::vector<Rational> grid_rates(const GridSpec& grid) {
  std::vector<Rational> rates;
  for (Rational a = 0; a <= 1; a += grid.alpha_step) rates.push_back(a);
  if (rates.back() != 1) rates.emplace_back(1);
  return rates;
}

namespace {

// Only candidates that earn something must be inside the box: a vertex with
// zero gross revenue nets nothing, which any grid point matches.
void check_coverage(const Market& market, const GridSpec& grid, const CandidateSet& coverage) {
  for (const PricePoint& p : coverage.points()) {
    bool inside = true;
    for (std::size_t j = 0; j < p.prices.size(); ++j) {
      if (p.prices[j] < grid.lower[j] || p.prices[j] > grid.upper[j]) inside = false;
    }
    if (inside || gross_revenue(market, p.prices, assign(market, p.prices)) == 0) continue;
    std::string where;
    for (const Rational& v : p.prices) where += (where.empty() ? "" : ", ") + to_exact_string(v);
    throw ModelError("grid box excludes candidate (" + where + ")");
  }
}

struct Sample {
  RevenueSplit revenue;
  double surplus = 0.0;
  std::size_t index = 0;  // flat grid index
};

// Later index loses every exact tie so merges are order independent.
bool better_on_tie(const Sample& a, const Sample& b, const TaxRate& alpha, WelfareMode mode) {
  const int cmp =
      make_welfare(a.surplus, a.revenue, alpha, mode).compare(make_welfare(b.surplus, b.revenue, alpha, mode));
  if (cmp != 0) return cmp > 0;
  return a.index < b.index;
}

bool beats(const Sample& a, const Sample& b, const TaxRate& alpha, WelfareMode mode) {
  const Rational na = a.revenue.net(alpha);
  const Rational nb = b.revenue.net(alpha);
  if (na != nb) return na > nb;
  return better_on_tie(a, b, alpha, mode);
}

// Grid points that can still be the maximizer for some rate.
//
// For alpha < 1 the net u + (1 - alpha) t is strictly increasing in both
// parts, so only the Pareto frontier of (untaxed u, taxed t) matters, one
// sample per distinct split. At alpha = 1 the net is u alone and a dominated
// point can tie, so the best untaxed revenue is tracked separately.
class Frontier {
 public:
  explicit Frontier(WelfareMode mode) : mode_(mode) {}

  template <class Surplus>
  void offer(const RevenueSplit& revenue, std::size_t index, Surplus&& surplus) {
    offer_full_tax(revenue, index, surplus);
    offer_partial_tax(revenue, index, surplus);
  }

  void merge(const Frontier& other) {
    for (const auto& [key, s] : other.by_untaxed_) offer(s.revenue, s.index, [&] { return s.surplus; });
    if (other.full_tax_) {
      const Sample& s = *other.full_tax_;
      offer_full_tax(s.revenue, s.index, [&] { return s.surplus; });
    }
  }

  bool empty() const { return !full_tax_; }

  /// Best sample at `alpha`; precondition: !empty().
  const Sample& best(const TaxRate& alpha) const {
    if (alpha.value() == 1) return *full_tax_;
    const Sample* best = nullptr;
    Rational best_net;
    for (const auto& [key, s] : by_untaxed_) {
      Rational net = s.revenue.net(alpha);
      if (best == nullptr || net > best_net || (net == best_net && better_on_tie(s, *best, alpha, mode_))) {
        best = &s;
        best_net = std::move(net);
      }
    }
    return *best;
  }

 private:
  template <class Surplus>
  void offer_full_tax(const RevenueSplit& revenue, std::size_t index, Surplus&& surplus) {
    if (full_tax_ && revenue.untaxed < full_tax_->revenue.untaxed) return;
    Sample s{revenue, surplus(), index};
    if (full_tax_ && revenue.untaxed == full_tax_->revenue.untaxed &&
        !better_on_tie(s, *full_tax_, TaxRate::full(), mode_)) {
      return;
    }
    full_tax_ = std::move(s);
  }

  template <class Surplus>
  void offer_partial_tax(const RevenueSplit& revenue, std::size_t index, Surplus&& surplus) {
    auto it = by_untaxed_.lower_bound(revenue.untaxed);
    if (it != by_untaxed_.end() && it->second.revenue.taxed >= revenue.taxed) {
      if (it->first != revenue.untaxed || it->second.revenue.taxed != revenue.taxed) return;  // dominated
      Sample s{revenue, surplus(), index};
      if (better_on_tie(s, it->second, TaxRate::zero(), mode_)) it->second = std::move(s);
      return;
    }
    if (it != by_untaxed_.end() && it->first == revenue.untaxed) it = by_untaxed_.erase(it);
    while (it != by_untaxed_.begin()) {
      auto prev = std::prev(it);
      if (prev->second.revenue.taxed > revenue.taxed) break;
      by_untaxed_.erase(prev);
    }
    by_untaxed_.emplace_hint(it, revenue.untaxed, Sample{revenue, surplus(), index});
  }

  WelfareMode mode_;
  std::map<Rational, Sample> by_untaxed_;  // taxed strictly decreasing along the keys
  std::optional<Sample> full_tax_;
};

// Grid points whose assignment depends on the rate, scored per sampled rate.
class RateTrackers {
 public:
  RateTrackers(std::span<const Rational> alphas, WelfareMode mode) : alphas_(alphas), mode_(mode), best_(alphas.size()) {}

  void offer(const Market& market, const PriceVector& prices, const std::vector<AssignmentPiece>& pieces,
             std::size_t index) {
    for (std::size_t a = 0; a < alphas_.size(); ++a) {
      for (const AssignmentPiece& piece : pieces) {
        if (!piece.contains(alphas_[a])) continue;
        offer_at(a, Sample{revenue_split(market, prices, piece.choices),
                           consumer_surplus(market, prices, piece.choices), index});
        break;
      }
    }
  }

  void merge(const RateTrackers& other) {
    for (std::size_t a = 0; a < alphas_.size(); ++a) {
      if (other.best_[a]) offer_at(a, *other.best_[a]);
    }
  }

  const std::optional<Sample>& best(std::size_t a) const { return best_[a]; }

 private:
  void offer_at(std::size_t a, Sample s) {
    if (!best_[a] || beats(s, *best_[a], TaxRate(alphas_[a]), mode_)) best_[a] = std::move(s);
  }

  std::span<const Rational> alphas_;
  WelfareMode mode_;
  std::vector<std::optional<Sample>> best_;
};

PriceVector decode(std::size_t index, const std::vector<std::vector<Rational>>& axes) {
  PriceVector p(axes.size());
  for (std::size_t j = axes.size(); j-- > 0;) {
    p[j] = axes[j][index % axes[j].size()];
    index /= axes[j].size();
  }
  return p;
}

}  // namespace

std::vector<GridOutcome> grid_sweep(const Market& market, std::span<const Rational> alphas, const GridSpec& grid,
                                    const CandidateSet& coverage, WelfareMode tie_mode, unsigned threads) {
  const std::size_t m = market.product_count();
  grid.validate(m);
  check_coverage(market, grid, coverage);

  std::vector<std::vector<Rational>> axes(m);
  std::size_t total = 1;
  for (std::size_t j = 0; j < m; ++j) {
    axes[j] = evaluated_axis(market, grid, j);
    total *= axes[j].size();
  }

  const std::size_t slices = slice_count(total, threads);
  std::vector<Frontier> partial(slices, Frontier(tie_mode));
  std::vector<RateTrackers> switching(slices, RateTrackers(alphas, tie_mode));
  parallel_slices(total, threads, [&](std::size_t begin, std::size_t end, std::size_t worker) {
    if (begin >= end) return;
    Frontier& frontier = partial[worker];
    std::vector<std::size_t> digits(m);
    {
      std::size_t rest = begin;
      for (std::size_t j = m; j-- > 0;) {
        digits[j] = rest % axes[j].size();
        rest /= axes[j].size();
      }
    }
    PriceVector prices = decode(begin, axes);
    for (std::size_t index = begin; index < end; ++index) {
      const std::vector<AssignmentPiece> pieces = assignment_pieces(market, prices);
      if (pieces.size() == 1) {
        const Assignment& choices = pieces.front().choices;
        frontier.offer(revenue_split(market, prices, choices), index,
                       [&] { return consumer_surplus(market, prices, choices); });
      } else {
        switching[worker].offer(market, prices, pieces, index);
      }
      // Odometer step, last product fastest.
      for (std::size_t j = m; j-- > 0;) {
        if (++digits[j] < axes[j].size()) {
          prices[j] = axes[j][digits[j]];
          break;
        }
        digits[j] = 0;
        prices[j] = axes[j][0];
      }
    }
  });

  Frontier merged(tie_mode);
  for (const Frontier& f : partial) merged.merge(f);
  RateTrackers merged_switching(alphas, tie_mode);
  for (const RateTrackers& t : switching) merged_switching.merge(t);

  std::vector<GridOutcome> out;
  out.reserve(alphas.size());
  for (std::size_t a = 0; a < alphas.size(); ++a) {
    const Rational& value = alphas[a];
    const TaxRate alpha(value);
    const std::optional<Sample>& other = merged_switching.best(a);
    const Sample& s = merged.empty() || (other && beats(*other, merged.best(alpha), alpha, tie_mode))
                          ? *other
                          : merged.best(alpha);
    GridOutcome o;
    o.alpha = value;
    o.prices = decode(s.index, axes);
    o.choices = assign(market, o.prices, value);
    o.revenue = revenue_split(market, o.prices, o.choices);
    o.net = o.revenue.net(alpha);
    o.welfare = make_welfare(s.surplus, o.revenue, alpha, tie_mode);
    out.push_back(std::move(o));
  }
  return out;
}

GridOutcome grid_best_response(const Market& market, const TaxRate& alpha, const GridSpec& grid,
                               const CandidateSet& coverage, WelfareMode tie_mode, unsigned threads) {
  const Rational rates[] = {alpha.value()};
  return std::move(grid_sweep(market, rates, grid, coverage, tie_mode, threads).front());
}

VerificationReport verify_solution(const Market& market, const CandidateSet& candidates,
                                   const TaxSolution& solution, const GridSpec& grid, unsigned threads) {
  std::map<Rational, bool> rate_set;
  for (const AlphaEvaluation& e : solution.evaluated) rate_set[e.alpha] = true;
  for (Rational& a : grid_rates(grid)) rate_set[a] = true;
  std::vector<Rational> rates;
  for (const auto& entry : rate_set) rates.push_back(entry.first);

  VerificationReport report;
  report.rates_checked = rates.size();
  report.grid_points = evaluated_point_count(market, grid);

  const auto grid_outcomes = grid_sweep(market, rates, grid, candidates, solution.mode, threads);
  const auto evaluated = evaluate_candidates(market, candidates, threads);
  const WelfareBreakdown& optimum = solution.welfare();

  for (const GridOutcome& g : grid_outcomes) {
    const TaxRate alpha(g.alpha);
    const ResponseOutcome enumerated = best_response(market, evaluated, alpha, solution.mode);
    if (g.net > enumerated.net) {
      report.violations.push_back(Violation{g.alpha, g.prices,
                                            "grid net " + to_exact_string(g.net) + " exceeds enumerated net " +
                                                to_exact_string(enumerated.net)});
    }
    const Rational exact_gap = g.welfare.exact_part - optimum.exact_part;
    const double gap = to_double(exact_gap) + (g.welfare.consumer_surplus - optimum.consumer_surplus);
    if (gap > 1e-9) {
      report.violations.push_back(
          Violation{g.alpha, g.prices, "grid welfare exceeds W* by " + std::to_string(gap)});
    }
  }
  return report;
}

}  // namespace sugartax

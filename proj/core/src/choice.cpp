#include "sugartax/choice.hpp"

#include <algorithm>

namespace sugartax {

namespace {

// Lexicographic preference among utility-tied products: after-tax value, then
// gross value; strict comparisons keep the lowest index on a full tie.
Choice choose_with(const Consumer& consumer, const PriceVector& prices, const std::vector<Product>* products,
                   const Rational& alpha) {
  std::optional<std::size_t> best;
  Rational best_utility;
  Rational best_after_tax;
  Rational best_gross;
  for (std::size_t j = 0; j < consumer.utilities.size(); ++j) {
    Rational u = raw_utility(consumer, j, prices);
    if (u < 0) continue;
    Rational gross = consumer.demands[j] * prices[j];
    Rational after_tax = products && (*products)[j].taxed ? Rational((1 - alpha) * gross) : gross;
    const bool better = !best || u > best_utility ||
                        (u == best_utility &&
                         (after_tax > best_after_tax || (after_tax == best_after_tax && gross > best_gross)));
    if (better) {
      best = j;
      best_utility = std::move(u);
      best_after_tax = std::move(after_tax);
      best_gross = std::move(gross);
    }
  }
  return best ? Choice::of(*best) : Choice::none();
}

}  // namespace

Choice choose(const Consumer& consumer, const PriceVector& prices) {
  return choose_with(consumer, prices, nullptr, Rational(0));
}

Choice choose(const Market& market, std::size_t consumer, const PriceVector& prices, const Rational& alpha) {
  return choose_with(market.consumers()[consumer], prices, &market.products(), alpha);
}

Assignment assign(const Market& market, const PriceVector& prices) {
  Assignment out;
  out.reserve(market.consumer_count());
  for (const Consumer& c : market.consumers()) out.push_back(choose(c, prices));
  return out;
}

Assignment assign(const Market& market, const PriceVector& prices, const Rational& alpha) {
  Assignment out;
  out.reserve(market.consumer_count());
  for (std::size_t i = 0; i < market.consumer_count(); ++i) out.push_back(choose(market, i, prices, alpha));
  return out;
}

std::optional<ChoiceSwitch> choice_switch(const Market& market, std::size_t consumer, const PriceVector& prices) {
  const Consumer& c = market.consumers()[consumer];
  const auto& products = market.products();

  // Top utility among affordable products, then the best gross earner of
  // each tax class within that tie.
  std::optional<Rational> top;
  for (std::size_t j = 0; j < products.size(); ++j) {
    Rational u = raw_utility(c, j, prices);
    if (u >= 0 && (!top || u > *top)) top = std::move(u);
  }
  if (!top) return std::nullopt;
  std::optional<Rational> taxed;
  std::optional<Rational> untaxed;
  for (std::size_t j = 0; j < products.size(); ++j) {
    if (raw_utility(c, j, prices) != *top) continue;
    Rational gross = c.demands[j] * prices[j];
    auto& slot = products[j].taxed ? taxed : untaxed;
    if (!slot || gross > *slot) slot = std::move(gross);
  }
  if (!taxed || !untaxed || *taxed == 0 || *taxed < *untaxed) return std::nullopt;

  // Taxed wins while (1 - alpha) * taxed >= untaxed; an exact after-tax tie
  // goes to the larger gross, which is the taxed product. Equal gross leaves
  // the index to decide at alpha = 0 only.
  const Rational rate = 1 - *untaxed / *taxed;
  Choice before = choose(market, consumer, prices, rate);
  Choice after = choose(market, consumer, prices, Rational(1));
  if (before == after) return std::nullopt;
  return ChoiceSwitch{before, after, rate};
}

std::vector<AssignmentPiece> assignment_pieces(const Market& market, const PriceVector& prices) {
  std::vector<Rational> rates;
  for (std::size_t i = 0; i < market.consumer_count(); ++i) {
    if (auto s = choice_switch(market, i, prices)) rates.push_back(std::move(s->rate));
  }
  std::sort(rates.begin(), rates.end());
  rates.erase(std::unique(rates.begin(), rates.end()), rates.end());
  rates.emplace_back(1);

  // Each piece is evaluated at its right end, which always belongs to it.
  std::vector<AssignmentPiece> pieces;
  Rational from = 0;
  bool inclusive = true;
  for (const Rational& to : rates) {
    pieces.push_back(AssignmentPiece{from, inclusive, to, assign(market, prices, to)});
    from = to;
    inclusive = false;
  }
  return pieces;
}

}  // namespace sugartax

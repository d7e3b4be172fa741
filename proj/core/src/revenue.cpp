#include "sugartax/revenue.hpp"

namespace sugartax {

TaxRate::TaxRate(Rational alpha) : alpha_(std::move(alpha)) {
  if (alpha_ < 0 || alpha_ > 1) {
    throw ModelError("tax rate " + to_exact_string(alpha_) + " outside [0, 1]");
  }
}

RevenueSplit revenue_split(const Market& market, const PriceVector& prices, const Assignment& choices) {
  RevenueSplit split;
  const auto& consumers = market.consumers();
  const auto& products = market.products();
  for (std::size_t i = 0; i < consumers.size(); ++i) {
    if (!choices[i].purchases()) continue;
    const std::size_t j = choices[i].product();
    Rational r = consumers[i].demands[j] * prices[j];
    if (products[j].taxed) {
      split.taxed += r;
    } else {
      split.untaxed += r;
    }
  }
  return split;
}

Rational gross_revenue(const Market& market, const PriceVector& prices, const Assignment& choices) {
  return revenue_split(market, prices, choices).gross();
}

Rational tax_collected(const Market& market, const PriceVector& prices, const Assignment& choices,
                       const TaxRate& alpha) {
  return revenue_split(market, prices, choices).tax(alpha);
}

Rational net_utility(const Market& market, const PriceVector& prices, const Assignment& choices,
                     const TaxRate& alpha) {
  return revenue_split(market, prices, choices).net(alpha);
}

}  // namespace sugartax

#pragma once

#include "sugartax/choice.hpp"
#include "sugartax/market.hpp"

namespace sugartax {

/// Sugar tax rate: the share of taxed-product revenue paid to the government.
class TaxRate {
 public:
  /// Throws ModelError outside [0, 1].
  explicit TaxRate(Rational alpha);

  static TaxRate zero() { return TaxRate(Rational(0)); }
  static TaxRate full() { return TaxRate(Rational(1)); }

  const Rational& value() const { return alpha_; }

  friend bool operator==(const TaxRate&, const TaxRate&) = default;

 private:
  Rational alpha_;
};

/// Revenue split by tax status. The firm's after-tax utility at rate alpha is
/// the line untaxed + (1 - alpha) * taxed.
struct RevenueSplit {
  Rational untaxed;
  Rational taxed;

  Rational gross() const { return untaxed + taxed; }
  Rational tax(const TaxRate& alpha) const { return alpha.value() * taxed; }
  Rational net(const TaxRate& alpha) const { return untaxed + (1 - alpha.value()) * taxed; }

  friend bool operator==(const RevenueSplit&, const RevenueSplit&) = default;
};

RevenueSplit revenue_split(const Market& market, const PriceVector& prices, const Assignment& choices);

Rational gross_revenue(const Market& market, const PriceVector& prices, const Assignment& choices);
Rational tax_collected(const Market& market, const PriceVector& prices, const Assignment& choices,
                       const TaxRate& alpha);
Rational net_utility(const Market& market, const PriceVector& prices, const Assignment& choices,
                     const TaxRate& alpha);

}  // namespace sugartax

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "sugartax/rational.hpp"

namespace sugartax {

/// Raised when a market, price vector or tax rate violates a model invariant.
class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Product {
  std::string id;
  std::size_t index = 0;
  bool taxed = false;
};

/// Affine utility `intercept - sensitivity * price` before clipping at zero.
/// Sensitivity must be strictly positive.
struct LinearUtility {
  Rational intercept;
  Rational sensitivity;
};

struct Consumer {
  std::string id;
  std::vector<LinearUtility> utilities;  // one per product
  std::vector<Rational> demands;         // units per period, one per product
};

/// One nonnegative price per product, in product-index order.
using PriceVector = std::vector<Rational>;

/// Full problem instance. Validated on construction and immutable afterwards.
class Market {
 public:
  Market(std::vector<Product> products, std::vector<Consumer> consumers);

  const std::vector<Product>& products() const { return products_; }
  const std::vector<Consumer>& consumers() const { return consumers_; }
  std::size_t product_count() const { return products_.size(); }
  std::size_t consumer_count() const { return consumers_.size(); }
  bool has_taxed_product() const;

  /// Throws ModelError unless `prices` has one nonnegative entry per product.
  void check_prices(const PriceVector& prices) const;

 private:
  std::vector<Product> products_;
  std::vector<Consumer> consumers_;
};

/// Folds the claims and nutrition terms into a single utility constant:
/// beta_ij + beta1 * nr_claims + beta2 * nutr_val.
Rational effective_intercept(const Rational& beta_ij, const Rational& beta1, const Rational& beta2,
                             const Rational& nr_claims, const Rational& nutr_val);

/// Unclipped utility of `product` at `prices`; may be negative.
Rational raw_utility(const Consumer& consumer, std::size_t product, const PriceVector& prices);

/// max(raw_utility, 0).
Rational clipped_utility(const Consumer& consumer, std::size_t product, const PriceVector& prices);

/// Price at which the consumer's utility for `product` reaches zero.
Rational budget_price(const Consumer& consumer, std::size_t product);

}  // namespace sugartax

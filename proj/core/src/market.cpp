#include "sugartax/market.hpp"

#include <set>

namespace sugartax {

Market::Market(std::vector<Product> products, std::vector<Consumer> consumers)
    : products_(std::move(products)), consumers_(std::move(consumers)) {
  if (products_.empty()) throw ModelError("market needs at least one product");

  std::set<std::string> ids;
  for (std::size_t j = 0; j < products_.size(); ++j) {
    if (products_[j].index != j) {
      throw ModelError("product '" + products_[j].id + "' has index " +
                       std::to_string(products_[j].index) + ", expected " + std::to_string(j));
    }
    if (!ids.insert(products_[j].id).second) {
      throw ModelError("duplicate product id '" + products_[j].id + "'");
    }
  }

  const std::size_t m = products_.size();
  for (const Consumer& c : consumers_) {
    if (c.utilities.size() != m || c.demands.size() != m) {
      throw ModelError("consumer '" + c.id + "' does not cover all " + std::to_string(m) + " products");
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (c.utilities[j].sensitivity <= 0) {
        throw ModelError("consumer '" + c.id + "' has nonpositive price sensitivity for product '" +
                         products_[j].id + "'");
      }
      if (c.demands[j] < 0) {
        throw ModelError("consumer '" + c.id + "' has negative demand for product '" + products_[j].id + "'");
      }
    }
  }
}

bool Market::has_taxed_product() const {
  for (const Product& p : products_) {
    if (p.taxed) return true;
  }
  return false;
}

void Market::check_prices(const PriceVector& prices) const {
  if (prices.size() != products_.size()) {
    throw ModelError("price vector has " + std::to_string(prices.size()) + " entries for " +
                     std::to_string(products_.size()) + " products");
  }
  for (const Rational& p : prices) {
    if (p < 0) throw ModelError("negative price " + to_exact_string(p));
  }
}

Rational effective_intercept(const Rational& beta_ij, const Rational& beta1, const Rational& beta2,
                             const Rational& nr_claims, const Rational& nutr_val) {
  return beta_ij + beta1 * nr_claims + beta2 * nutr_val;
}

Rational raw_utility(const Consumer& consumer, std::size_t product, const PriceVector& prices) {
  const LinearUtility& u = consumer.utilities[product];
  return u.intercept - u.sensitivity * prices[product];
}

Rational clipped_utility(const Consumer& consumer, std::size_t product, const PriceVector& prices) {
  Rational v = raw_utility(consumer, product, prices);
  return v < 0 ? Rational(0) : v;
}

Rational budget_price(const Consumer& consumer, std::size_t product) {
  const LinearUtility& u = consumer.utilities[product];
  return u.intercept / u.sensitivity;
}

}  // namespace sugartax

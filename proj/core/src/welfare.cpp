#include "sugartax/welfare.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sugartax {

std::string_view to_string(WelfareMode mode) {
  return mode == WelfareMode::definition ? "definition" : "paper-example";
}

WelfareMode parse_welfare_mode(std::string_view text) {
  if (text == "definition") return WelfareMode::definition;
  if (text == "paper-example") return WelfareMode::tax_double_counted;
  throw std::invalid_argument("unknown welfare mode '" + std::string(text) +
                              "' (expected definition or paper-example)");
}

int WelfareBreakdown::compare(const WelfareBreakdown& other) const {
  if (exact_part == other.exact_part) {
    if (consumer_surplus == other.consumer_surplus) return 0;
    return consumer_surplus < other.consumer_surplus ? -1 : 1;
  }
  // Surplus is bounded by n * ln(1 + max utility); compare the full sum.
  const long double lhs = static_cast<long double>(exact_part.get_d()) + consumer_surplus;
  const long double rhs = static_cast<long double>(other.exact_part.get_d()) + other.consumer_surplus;
  if (lhs != rhs) return lhs < rhs ? -1 : 1;
  return exact_part < other.exact_part ? -1 : 1;
}

double consumer_surplus(const Market& market, const PriceVector& prices, const Assignment& choices) {
  double total = 0.0;
  const auto& consumers = market.consumers();
  for (std::size_t i = 0; i < consumers.size(); ++i) {
    if (!choices[i].purchases()) continue;
    total += std::log1p(to_double(clipped_utility(consumers[i], choices[i].product(), prices)));
  }
  return total;
}

WelfareBreakdown make_welfare(double surplus, const RevenueSplit& revenue, const TaxRate& alpha, WelfareMode mode) {
  WelfareBreakdown w;
  w.mode = mode;
  w.consumer_surplus = surplus;
  w.tax = revenue.tax(alpha);
  w.firm_utility = revenue.gross() - w.tax;
  w.exact_part = w.firm_utility + w.tax;
  if (mode == WelfareMode::tax_double_counted) w.exact_part += w.tax;
  w.total = to_double(w.exact_part) + surplus;
  return w;
}

WelfareBreakdown social_welfare(const Market& market, const PriceVector& prices, const Assignment& choices,
                                const TaxRate& alpha, WelfareMode mode) {
  return make_welfare(consumer_surplus(market, prices, choices), revenue_split(market, prices, choices), alpha,
                      mode);
}

}  // namespace sugartax

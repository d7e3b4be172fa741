#pragma once

#include <string_view>

#include "sugartax/choice.hpp"
#include "sugartax/revenue.hpp"

namespace sugartax {

/// How collected tax enters social welfare.
///
/// `definition` sums consumer surplus, the firm's after-tax utility and the
/// tax, which reduces to surplus plus gross revenue: tax is a pure transfer.
/// `tax_double_counted` adds the tax once more on top of gross revenue, the
/// convention behind the published worked example (CLI name "paper-example").
enum class WelfareMode { definition, tax_double_counted };

std::string_view to_string(WelfareMode mode);
/// Accepts "definition" and "paper-example"; throws std::invalid_argument.
WelfareMode parse_welfare_mode(std::string_view text);

struct WelfareBreakdown {
  WelfareMode mode = WelfareMode::definition;
  double consumer_surplus = 0.0;  // sum of ln(1 + u) over purchases
  Rational firm_utility;          // gross revenue - tax
  Rational tax;
  Rational exact_part;            // everything except consumer surplus
  double total = 0.0;

  /// Ordering used by every welfare tie-break: exact parts compared exactly,
  /// surplus compared as doubles.
  int compare(const WelfareBreakdown& other) const;
};

/// Sum over purchasing consumers of ln(1 + clipped utility).
double consumer_surplus(const Market& market, const PriceVector& prices, const Assignment& choices);

WelfareBreakdown make_welfare(double surplus, const RevenueSplit& revenue, const TaxRate& alpha, WelfareMode mode);

WelfareBreakdown social_welfare(const Market& market, const PriceVector& prices, const Assignment& choices,
                                const TaxRate& alpha, WelfareMode mode);

}  // namespace sugartax

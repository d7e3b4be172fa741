#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sugartax/market.hpp"

namespace sugartax {

/// A single consumer's decision: one product or no purchase.
class Choice {
 public:
  static Choice none() { return Choice{}; }
  static Choice of(std::size_t product) { return Choice{product}; }

  bool purchases() const { return product_.has_value(); }
  /// Precondition: purchases().
  std::size_t product() const { return *product_; }

  friend bool operator==(const Choice&, const Choice&) = default;

 private:
  Choice() = default;
  explicit Choice(std::size_t product) : product_(product) {}

  std::optional<std::size_t> product_;
};

/// One Choice per consumer, in market order.
using Assignment = std::vector<Choice>;

/// Utility-maximizing choice among products with nonnegative raw utility.
/// Ties go to the product earning the firm more (demand times price), then to
/// the lowest product index. Buying at exactly zero utility counts as buying.
/// This is the rule at tax rate 0.
Choice choose(const Consumer& consumer, const PriceVector& prices);

/// Same rule at tax rate `alpha`: utility ties go to the product earning the
/// firm more after tax (taxed revenue counts (1 - alpha) times), then to the
/// larger gross revenue, then to the lowest index. At alpha = 0 this equals
/// choose(consumer, prices).
Choice choose(const Market& market, std::size_t consumer, const PriceVector& prices, const Rational& alpha);

/// Applies `choose` to every consumer; the lower level separates per consumer.
Assignment assign(const Market& market, const PriceVector& prices);
Assignment assign(const Market& market, const PriceVector& prices, const Rational& alpha);

/// A consumer whose choice at `prices` depends on the tax rate: `before` for
/// alpha <= rate, `after` for alpha > rate. Happens only when a taxed and an
/// untaxed product tie on utility and the taxed one earns more gross.
struct ChoiceSwitch {
  Choice before;
  Choice after;
  Rational rate;  // in [0, 1)
};
std::optional<ChoiceSwitch> choice_switch(const Market& market, std::size_t consumer, const PriceVector& prices);

/// Assignment at `prices` as a function of the tax rate: consecutive pieces
/// covering [0, 1], each with a constant assignment. A piece spans
/// [from, to] when from_inclusive, else (from, to].
struct AssignmentPiece {
  Rational from;
  bool from_inclusive = true;
  Rational to;
  Assignment choices;

  bool contains(const Rational& alpha) const { return (alpha > from || (from_inclusive && alpha == from)) && alpha <= to; }
};
std::vector<AssignmentPiece> assignment_pieces(const Market& market, const PriceVector& prices);

}  // namespace sugartax

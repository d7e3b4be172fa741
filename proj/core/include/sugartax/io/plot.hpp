#pragma once

#include <iosfwd>

#include "sugartax/arrangement.hpp"

namespace sugartax::io {

/// Standalone SVG of a two-product price space: taxed-product price on the
/// horizontal axis, untaxed on the vertical (product 1 / product 0 when the
/// tax flags do not single one out). Budget lines, indifference lines and the
/// two axes are drawn with classes "budget", "indifference" and "axis";
/// candidates are circles of class "candidate" labelled with their table
/// number. Output bytes depend only on the inputs.
///
/// Throws std::invalid_argument unless the market has exactly two products.
void write_price_space_svg(std::ostream& out, const Market& market, const CandidateSet& candidates);

}  // namespace sugartax::io

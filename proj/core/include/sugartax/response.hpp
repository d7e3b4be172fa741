#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sugartax/arrangement.hpp"
#include "sugartax/welfare.hpp"

namespace sugartax {

/// A candidate with one of its tax-rate-dependent assignments and everything
/// else that does not depend on the rate. A candidate has more than one such
/// variant only where a consumer's utility tie between a taxed and an untaxed
/// product is resolved differently at different rates.
struct EvaluatedCandidate {
  std::size_t candidate = 0;  // index into the candidate set
  PriceVector prices;
  Assignment choices;
  RevenueSplit revenue;
  double consumer_surplus = 0.0;
  Rational valid_from = 0;  // rates where `choices` applies, see AssignmentPiece
  bool from_inclusive = true;
  Rational valid_to = 1;

  bool valid_at(const Rational& alpha) const {
    return (alpha > valid_from || (from_inclusive && alpha == valid_from)) && alpha <= valid_to;
  }
};

/// Every variant of every candidate, ordered by candidate then by rate.
std::vector<EvaluatedCandidate> evaluate_candidates(const Market& market, const CandidateSet& candidates,
                                                    unsigned threads = 1);

struct ResponseOutcome {
  std::size_t candidate = 0;  // index into the candidate set
  std::size_t variant = 0;    // index into the evaluated variants
  PriceVector prices;
  Assignment choices;
  RevenueSplit revenue;
  Rational gross;
  Rational tax;
  Rational net;
  WelfareBreakdown welfare;  // in the tie-break mode
};

/// The firm's after-tax revenue maximizer over the candidates. Ties go to the
/// larger social welfare in `tie_mode`, then to the lexicographically smaller
/// price vector (the earlier candidate).
ResponseOutcome best_response(const Market& market, std::span<const EvaluatedCandidate> evaluated,
                              const TaxRate& alpha, WelfareMode tie_mode = WelfareMode::definition);

ResponseOutcome best_response(const Market& market, const CandidateSet& candidates, const TaxRate& alpha,
                              WelfareMode tie_mode = WelfareMode::definition);

/// Upper envelope of the variants' after-tax revenue lines over [0, 1], for
/// answering best_response at many rates. Same result as the linear scan;
/// only breakpoints and the ends of [0, 1] need a tie scan over all lines.
class ResponseEnvelope {
 public:
  /// Keeps a reference to `evaluated`, which must outlive the envelope.
  ResponseEnvelope(const Market& market, std::span<const EvaluatedCandidate> evaluated);

  ResponseOutcome at(const TaxRate& alpha, WelfareMode tie_mode = WelfareMode::definition) const;

  /// Rates where the top line changes, ascending, starting at 0.
  std::vector<Rational> breakpoints() const;

 private:
  struct Line {
    Rational untaxed;
    Rational taxed;
    std::vector<std::size_t> variants;  // ascending
  };
  struct Piece {
    Rational from;
    std::size_t line = 0;
  };

  ResponseOutcome pick(const TaxRate& alpha, WelfareMode tie_mode, const std::vector<std::size_t>& lines) const;

  std::span<const EvaluatedCandidate> evaluated_;
  std::vector<Line> lines_;
  std::vector<Piece> pieces_;
};

}  // namespace sugartax

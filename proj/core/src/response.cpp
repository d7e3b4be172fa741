#include "sugartax/response.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

#include "sugartax/parallel.hpp"

namespace sugartax {

std::vector<EvaluatedCandidate> evaluate_candidates(const Market& market, const CandidateSet& candidates,
                                                    unsigned threads) {
  std::vector<std::vector<EvaluatedCandidate>> per_candidate(candidates.size());
  parallel_slices(candidates.size(), threads, [&](std::size_t begin, std::size_t end, std::size_t) {
    for (std::size_t k = begin; k < end; ++k) {
      for (AssignmentPiece& piece : assignment_pieces(market, candidates[k].prices)) {
        EvaluatedCandidate e;
        e.candidate = k;
        e.prices = candidates[k].prices;
        e.revenue = revenue_split(market, e.prices, piece.choices);
        e.consumer_surplus = consumer_surplus(market, e.prices, piece.choices);
        e.choices = std::move(piece.choices);
        e.valid_from = std::move(piece.from);
        e.from_inclusive = piece.from_inclusive;
        e.valid_to = std::move(piece.to);
        per_candidate[k].push_back(std::move(e));
      }
    }
  });
  std::vector<EvaluatedCandidate> out;
  out.reserve(candidates.size());
  for (auto& variants : per_candidate) {
    for (auto& e : variants) out.push_back(std::move(e));
  }
  return out;
}

ResponseOutcome best_response(const Market&, std::span<const EvaluatedCandidate> evaluated, const TaxRate& alpha,
                              WelfareMode tie_mode) {
  std::optional<std::size_t> best;
  Rational best_net;
  WelfareBreakdown best_welfare;
  for (std::size_t k = 0; k < evaluated.size(); ++k) {
    const EvaluatedCandidate& e = evaluated[k];
    if (!e.valid_at(alpha.value())) continue;
    Rational net = e.revenue.net(alpha);
    if (best && net < best_net) continue;
    WelfareBreakdown welfare = make_welfare(e.consumer_surplus, e.revenue, alpha, tie_mode);
    // Variants are ordered by price vector, so a strict win keeps the earlier
    // candidate on a full tie.
    if (best && net == best_net && welfare.compare(best_welfare) <= 0) continue;
    best = k;
    best_net = std::move(net);
    best_welfare = std::move(welfare);
  }
  if (!best) throw ModelError("best response over an empty candidate set");

  const EvaluatedCandidate& e = evaluated[*best];
  ResponseOutcome out;
  out.candidate = e.candidate;
  out.variant = *best;
  out.prices = e.prices;
  out.choices = e.choices;
  out.revenue = e.revenue;
  out.gross = e.revenue.gross();
  out.tax = e.revenue.tax(alpha);
  out.net = std::move(best_net);
  out.welfare = std::move(best_welfare);
  return out;
}

ResponseOutcome best_response(const Market& market, const CandidateSet& candidates, const TaxRate& alpha,
                              WelfareMode tie_mode) {
  const auto evaluated = evaluate_candidates(market, candidates);
  return best_response(market, evaluated, alpha, tie_mode);
}

ResponseEnvelope::ResponseEnvelope(const Market&, std::span<const EvaluatedCandidate> evaluated)
    : evaluated_(evaluated) {
  if (evaluated.empty()) throw ModelError("best response over an empty candidate set");
  {
    std::map<std::pair<Rational, Rational>, std::size_t> index;
    for (std::size_t k = 0; k < evaluated.size(); ++k) {
      const RevenueSplit& r = evaluated[k].revenue;
      auto [it, fresh] = index.emplace(std::make_pair(r.untaxed, r.taxed), lines_.size());
      if (fresh) lines_.push_back(Line{r.untaxed, r.taxed, {}});
      lines_[it->second].variants.push_back(k);
    }
  }
  auto net = [&](std::size_t l, const Rational& alpha) -> Rational { return lines_[l].untaxed + (1 - alpha) * lines_[l].taxed; };

  // Kinetic sweep: the top line at alpha is the highest, ties going to the
  // smallest taxed part (it stays on top just after alpha); it is overtaken
  // first by the line with smaller taxed part that crosses it earliest.
  Rational alpha = 0;
  std::size_t top = 0;
  for (std::size_t l = 1; l < lines_.size(); ++l) {
    const Rational a = net(l, alpha);
    const Rational b = net(top, alpha);
    if (a > b || (a == b && lines_[l].taxed < lines_[top].taxed)) top = l;
  }
  pieces_.push_back(Piece{alpha, top});
  while (true) {
    std::optional<std::size_t> next;
    Rational next_alpha;
    for (std::size_t l = 0; l < lines_.size(); ++l) {
      if (!(lines_[l].taxed < lines_[top].taxed)) continue;
      // untaxed_t + (1 - a) taxed_t = untaxed_l + (1 - a) taxed_l
      Rational a = 1 - (lines_[l].untaxed - lines_[top].untaxed) / (lines_[top].taxed - lines_[l].taxed);
      if (a <= alpha || a > 1) continue;
      if (!next || a < next_alpha || (a == next_alpha && lines_[l].taxed < lines_[*next].taxed)) {
        next = l;
        next_alpha = std::move(a);
      }
    }
    if (!next) break;
    alpha = next_alpha;
    top = *next;
    pieces_.push_back(Piece{alpha, top});
  }
}

std::vector<Rational> ResponseEnvelope::breakpoints() const {
  std::vector<Rational> out;
  for (const Piece& p : pieces_) out.push_back(p.from);
  return out;
}

ResponseOutcome ResponseEnvelope::at(const TaxRate& alpha, WelfareMode tie_mode) const {
  const Rational& a = alpha.value();
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), a,
                             [](const Rational& value, const Piece& p) { return value < p.from; });
  const Piece& piece = *std::prev(it);
  // Inside a piece only lines identical to the top one reach the envelope.
  if (piece.from != a && a != 1) return pick(alpha, tie_mode, {piece.line});

  const Line& top = lines_[piece.line];
  const Rational best = top.untaxed + (1 - a) * top.taxed;
  std::vector<std::size_t> tied;
  for (std::size_t l = 0; l < lines_.size(); ++l) {
    if (lines_[l].untaxed + (1 - a) * lines_[l].taxed == best) tied.push_back(l);
  }
  return pick(alpha, tie_mode, tied);
}

ResponseOutcome ResponseEnvelope::pick(const TaxRate& alpha, WelfareMode tie_mode,
                                       const std::vector<std::size_t>& lines) const {
  std::optional<std::size_t> best;
  WelfareBreakdown best_welfare;
  for (std::size_t l : lines) {
    for (std::size_t k : lines_[l].variants) {
      const EvaluatedCandidate& e = evaluated_[k];
      if (!e.valid_at(alpha.value())) continue;
      WelfareBreakdown welfare = make_welfare(e.consumer_surplus, e.revenue, alpha, tie_mode);
      const int cmp = best ? welfare.compare(best_welfare) : 1;
      if (cmp > 0 || (cmp == 0 && k < *best)) {
        best = k;
        best_welfare = std::move(welfare);
      }
    }
  }
  // A variant line never exceeds its candidate's valid one, so some tied
  // variant is valid.
  if (!best) throw std::logic_error("no valid variant on the revenue envelope");

  const EvaluatedCandidate& e = evaluated_[*best];
  ResponseOutcome out;
  out.candidate = e.candidate;
  out.variant = *best;
  out.prices = e.prices;
  out.choices = e.choices;
  out.revenue = e.revenue;
  out.gross = e.revenue.gross();
  out.tax = e.revenue.tax(alpha);
  out.net = e.revenue.net(alpha);
  out.welfare = std::move(best_welfare);
  return out;
}

}  // namespace sugartax

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sugartax/market.hpp"

namespace sugartax {

enum class HyperplaneKind { budget, indifference, axis };

/// Affine hyperplane `coefficients . p = constant` in price space.
///
///   budget(i, j):          s_ij p_j = a_ij               (utility for j hits zero)
///   indifference(i, j, k): s_ij p_j - s_ik p_k = a_ij - a_ik
///   axis(j):               p_j = 0
struct Hyperplane {
  HyperplaneKind kind = HyperplaneKind::axis;
  std::size_t consumer = 0;       // unused for axis
  std::size_t product = 0;
  std::size_t other_product = 0;  // indifference only
  std::vector<Rational> coefficients;
  Rational constant;

  bool contains(const PriceVector& prices) const;
  std::string describe(const Market& market) const;
};

/// All n*m budget, n*C(m,2) indifference and m axis hyperplanes, grouped in
/// that order (consumer-major within each group).
std::vector<Hyperplane> build_hyperplanes(const Market& market);

/// Unique solution of the square system rows . p = rhs, or nullopt when the
/// rows are linearly dependent. Exact Gaussian elimination.
std::optional<PriceVector> solve_square_system(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs);

struct PricePoint {
  PriceVector prices;
  std::vector<std::size_t> incident;  // indices of every hyperplane through the point
};

/// Deduplicated vertices of the arrangement inside the nonnegative orthant,
/// sorted lexicographically by price vector.
class CandidateSet {
 public:
  CandidateSet(std::vector<Hyperplane> hyperplanes, std::vector<PriceVector> points);

  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  const std::vector<PricePoint>& points() const { return points_; }
  const PricePoint& operator[](std::size_t i) const { return points_[i]; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }

  std::optional<std::size_t> find(const PriceVector& prices) const;
  /// Copy with one point removed; used to exercise the oracle.
  CandidateSet without(std::size_t index) const;

 private:
  std::vector<Hyperplane> hyperplanes_;
  std::vector<PricePoint> points_;
};

struct EnumerationOptions {
  unsigned threads = 1;
};

/// Every point where some m of the hyperplanes meet in a unique point, kept if
/// all coordinates are nonnegative. Singular subsets are skipped.
CandidateSet enumerate_candidates(const Market& market, const EnumerationOptions& options = {});

}  // namespace sugartax

#include "sugartax/arrangement.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "sugartax/parallel.hpp"

namespace sugartax {

bool Hyperplane::contains(const PriceVector& prices) const {
  Rational lhs;
  for (std::size_t j = 0; j < coefficients.size(); ++j) lhs += coefficients[j] * prices[j];
  return lhs == constant;
}

std::string Hyperplane::describe(const Market& market) const {
  const auto& products = market.products();
  switch (kind) {
    case HyperplaneKind::budget:
      return "budget(" + market.consumers()[consumer].id + ", " + products[product].id + ")";
    case HyperplaneKind::indifference:
      return "indifference(" + market.consumers()[consumer].id + ", " + products[product].id + ", " +
             products[other_product].id + ")";
    case HyperplaneKind::axis:
      return "axis(" + products[product].id + ")";
  }
  return {};
}

std::vector<Hyperplane> build_hyperplanes(const Market& market) {
  const std::size_t m = market.product_count();
  const auto& consumers = market.consumers();
  std::vector<Hyperplane> out;
  out.reserve(consumers.size() * (m + m * (m - 1) / 2) + m);

  for (std::size_t i = 0; i < consumers.size(); ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Hyperplane h;
      h.kind = HyperplaneKind::budget;
      h.consumer = i;
      h.product = j;
      h.coefficients.assign(m, Rational(0));
      h.coefficients[j] = consumers[i].utilities[j].sensitivity;
      h.constant = consumers[i].utilities[j].intercept;
      out.push_back(std::move(h));
    }
  }
  for (std::size_t i = 0; i < consumers.size(); ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        const LinearUtility& uj = consumers[i].utilities[j];
        const LinearUtility& uk = consumers[i].utilities[k];
        Hyperplane h;
        h.kind = HyperplaneKind::indifference;
        h.consumer = i;
        h.product = j;
        h.other_product = k;
        h.coefficients.assign(m, Rational(0));
        h.coefficients[j] = uj.sensitivity;
        h.coefficients[k] = -uk.sensitivity;
        h.constant = uj.intercept - uk.intercept;
        out.push_back(std::move(h));
      }
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    Hyperplane h;
    h.kind = HyperplaneKind::axis;
    h.product = j;
    h.coefficients.assign(m, Rational(0));
    h.coefficients[j] = 1;
    h.constant = 0;
    out.push_back(std::move(h));
  }
  return out;
}

std::optional<PriceVector> solve_square_system(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs) {
  const std::size_t n = rows.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && rows[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(rows[pivot], rows[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || rows[r][col] == 0) continue;
      const Rational factor = rows[r][col] / rows[col][col];
      for (std::size_t c = col; c < n; ++c) rows[r][c] -= factor * rows[col][c];
      rhs[r] -= factor * rhs[col];
    }
  }
  PriceVector solution(n);
  for (std::size_t i = 0; i < n; ++i) solution[i] = rhs[i] / rows[i][i];
  return solution;
}

CandidateSet::CandidateSet(std::vector<Hyperplane> hyperplanes, std::vector<PriceVector> points)
    : hyperplanes_(std::move(hyperplanes)) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  points_.reserve(points.size());
  for (PriceVector& p : points) {
    for (const Rational& v : p) {
      if (v < 0) throw ModelError("candidate price point outside the nonnegative orthant");
    }
    PricePoint point{std::move(p), {}};
    for (std::size_t h = 0; h < hyperplanes_.size(); ++h) {
      if (hyperplanes_[h].contains(point.prices)) point.incident.push_back(h);
    }
    points_.push_back(std::move(point));
  }
}

std::optional<std::size_t> CandidateSet::find(const PriceVector& prices) const {
  const auto it = std::lower_bound(points_.begin(), points_.end(), prices,
                                   [](const PricePoint& a, const PriceVector& b) { return a.prices < b; });
  if (it == points_.end() || it->prices != prices) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

CandidateSet CandidateSet::without(std::size_t index) const {
  std::vector<PriceVector> remaining;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i != index) remaining.push_back(points_[i].prices);
  }
  return CandidateSet(hyperplanes_, std::move(remaining));
}

namespace {

// Visits every size-`k` subset of {0..n-1} whose smallest element is `first`,
// in lexicographic order.
template <class Visit>
void for_each_subset_starting_at(std::size_t n, std::size_t k, std::size_t first, Visit&& visit) {
  std::vector<std::size_t> idx(k);
  idx[0] = first;
  for (std::size_t t = 1; t < k; ++t) idx[t] = first + t;
  if (k > 0 && idx[k - 1] >= n) return;
  while (true) {
    visit(idx);
    std::size_t t = k;
    while (t > 1 && idx[t - 1] == n - k + t - 1) --t;
    if (t <= 1) return;
    ++idx[t - 1];
    for (std::size_t u = t; u < k; ++u) idx[u] = idx[u - 1] + 1;
  }
}

}  // namespace

CandidateSet enumerate_candidates(const Market& market, const EnumerationOptions& options) {
  const std::size_t m = market.product_count();
  std::vector<Hyperplane> hyperplanes = build_hyperplanes(market);
  const std::size_t h = hyperplanes.size();

  const std::size_t slices = slice_count(h, options.threads);
  std::vector<std::vector<PriceVector>> found(slices);

  parallel_slices(h, options.threads, [&](std::size_t begin, std::size_t end, std::size_t worker) {
    std::map<PriceVector, bool> local;
    for (std::size_t first = begin; first < end; ++first) {
      for_each_subset_starting_at(h, m, first, [&](const std::vector<std::size_t>& subset) {
        std::vector<std::vector<Rational>> rows;
        std::vector<Rational> rhs;
        rows.reserve(m);
        rhs.reserve(m);
        for (std::size_t s : subset) {
          rows.push_back(hyperplanes[s].coefficients);
          rhs.push_back(hyperplanes[s].constant);
        }
        auto point = solve_square_system(std::move(rows), std::move(rhs));
        if (!point) return;
        if (std::any_of(point->begin(), point->end(), [](const Rational& v) { return v < 0; })) return;
        local.emplace(std::move(*point), true);
      });
    }
    auto& out = found[worker];
    out.reserve(local.size());
    for (auto& entry : local) out.push_back(entry.first);
  });

  std::vector<PriceVector> merged;
  for (auto& part : found) {
    for (auto& p : part) merged.push_back(std::move(p));
  }
  return CandidateSet(std::move(hyperplanes), std::move(merged));
}

}  // namespace sugartax

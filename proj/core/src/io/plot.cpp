#include "sugartax/io/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sugartax::io {

namespace {

constexpr double kWidth = 720;
constexpr double kHeight = 720;
constexpr double kMargin = 70;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Segment {
  double x0, y0, x1, y1;
};

// Part of a*x + b*y = c inside [0, xmax] x [0, ymax], if any.
std::optional<Segment> clip(double a, double b, double c, double xmax, double ymax) {
  std::vector<std::pair<double, double>> hits;
  auto add = [&](double x, double y) {
    constexpr double eps = 1e-12;
    if (x < -eps || y < -eps || x > xmax * (1 + eps) || y > ymax * (1 + eps)) return;
    hits.emplace_back(std::clamp(x, 0.0, xmax), std::clamp(y, 0.0, ymax));
  };
  if (b != 0) {
    add(0, c / b);
    add(xmax, (c - a * xmax) / b);
  }
  if (a != 0) {
    add(c / a, 0);
    add((c - b * ymax) / a, ymax);
  }
  if (hits.size() < 2) return std::nullopt;
  std::sort(hits.begin(), hits.end());
  const auto& lo = hits.front();
  const auto& hi = hits.back();
  if (lo == hi) return std::nullopt;
  return Segment{lo.first, lo.second, hi.first, hi.second};
}

}  // namespace

void write_price_space_svg(std::ostream& out, const Market& market, const CandidateSet& candidates) {
  if (market.product_count() != 2) throw std::invalid_argument("plot requires exactly two products");

  const auto& products = market.products();
  std::size_t horizontal = 1;
  if (products[0].taxed != products[1].taxed) horizontal = products[0].taxed ? 0 : 1;
  const std::size_t vertical = 1 - horizontal;

  auto highest_budget = [&](std::size_t j) {
    double best = 0;
    for (const Consumer& c : market.consumers()) best = std::max(best, to_double(budget_price(c, j)));
    return best > 0 ? best : 1.0;
  };
  const double budget_x = highest_budget(horizontal);
  const double budget_y = highest_budget(vertical);

  // Far-out vertices (nearly parallel indifference lines) would squash the
  // picture; they are listed in a note instead.
  std::vector<std::size_t> shown;
  std::vector<std::size_t> hidden;
  double xmax = budget_x;
  double ymax = budget_y;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    const double x = to_double(candidates[k].prices[horizontal]);
    const double y = to_double(candidates[k].prices[vertical]);
    if (x <= 2.5 * budget_x && y <= 2.5 * budget_y) {
      shown.push_back(k);
      xmax = std::max(xmax, x);
      ymax = std::max(ymax, y);
    } else {
      hidden.push_back(k);
    }
  }
  xmax *= 1.1;
  ymax *= 1.1;

  const double plot_w = kWidth - 2 * kMargin;
  const double plot_h = kHeight - 2 * kMargin;
  auto px = [&](double x) { return kMargin + x / xmax * plot_w; };
  auto py = [&](double y) { return kHeight - kMargin - y / ymax * plot_h; };

  const std::string hname = escape(products[horizontal].id);
  const std::string vname = escape(products[vertical].id);

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kWidth) << "\" height=\"" << num(kHeight)
      << "\" viewBox=\"0 0 " << num(kWidth) << ' ' << num(kHeight) << "\">\n";
  out << "<title>Price space</title>\n";
  out << "<style>\n"
         "  .axis { stroke: #000; stroke-width: 1.5; }\n"
         "  .budget { stroke: #1f77b4; stroke-width: 1.2; stroke-dasharray: 6 4; }\n"
         "  .indifference { stroke: #d62728; stroke-width: 1.2; }\n"
         "  .candidate { fill: #2ca02c; stroke: #000; stroke-width: 0.6; }\n"
         "  text { font-family: sans-serif; font-size: 11px; }\n"
         "  .label { font-size: 9px; }\n"
         "</style>\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << num(kWidth) << "\" height=\"" << num(kHeight)
      << "\" fill=\"#fff\"/>\n";

  out << "<g id=\"axes\">\n";
  out << "  <line class=\"axis\" x1=\"" << num(px(0)) << "\" y1=\"" << num(py(0)) << "\" x2=\"" << num(px(xmax))
      << "\" y2=\"" << num(py(0)) << "\"><title>axis(" << vname << ")</title></line>\n";
  out << "  <line class=\"axis\" x1=\"" << num(px(0)) << "\" y1=\"" << num(py(0)) << "\" x2=\"" << num(px(0))
      << "\" y2=\"" << num(py(ymax)) << "\"><title>axis(" << hname << ")</title></line>\n";
  out << "  <text x=\"" << num(px(xmax)) << "\" y=\"" << num(py(0) + 30) << "\" text-anchor=\"end\">price of "
      << hname << "</text>\n";
  out << "  <text x=\"" << num(px(0) - 45) << "\" y=\"" << num(py(ymax)) << "\" transform=\"rotate(-90 "
      << num(px(0) - 45) << ' ' << num(py(ymax)) << ")\" text-anchor=\"end\">price of " << vname << "</text>\n";
  for (int t = 0; t <= 5; ++t) {
    const double x = xmax * t / 5;
    const double y = ymax * t / 5;
    out << "  <text x=\"" << num(px(x)) << "\" y=\"" << num(py(0) + 14) << "\" text-anchor=\"middle\">" << num(x)
        << "</text>\n";
    out << "  <text x=\"" << num(px(0) - 6) << "\" y=\"" << num(py(y) + 4) << "\" text-anchor=\"end\">" << num(y)
        << "</text>\n";
  }
  out << "</g>\n";

  out << "<g id=\"hyperplanes\">\n";
  for (const Hyperplane& h : candidates.hyperplanes()) {
    if (h.kind == HyperplaneKind::axis) continue;
    const auto seg = clip(to_double(h.coefficients[horizontal]), to_double(h.coefficients[vertical]),
                          to_double(h.constant), xmax, ymax);
    if (!seg) continue;
    const char* cls = h.kind == HyperplaneKind::budget ? "budget" : "indifference";
    out << "  <line class=\"" << cls << "\" x1=\"" << num(px(seg->x0)) << "\" y1=\"" << num(py(seg->y0))
        << "\" x2=\"" << num(px(seg->x1)) << "\" y2=\"" << num(py(seg->y1)) << "\"><title>"
        << escape(h.describe(market)) << "</title></line>\n";
  }
  out << "</g>\n";

  out << "<g id=\"candidates\">\n";
  for (std::size_t k : shown) {
    const double x = px(to_double(candidates[k].prices[horizontal]));
    const double y = py(to_double(candidates[k].prices[vertical]));
    out << "  <circle class=\"candidate\" cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"3.50\"><title>#"
        << k + 1 << " (" << hname << ' ' << to_fixed(candidates[k].prices[horizontal], 2) << ", " << vname << ' '
        << to_fixed(candidates[k].prices[vertical], 2) << ")</title></circle>\n";
    out << "  <text class=\"label\" x=\"" << num(x + 5) << "\" y=\"" << num(y - 5) << "\">" << k + 1 << "</text>\n";
  }
  out << "</g>\n";

  out << "<g id=\"legend\">\n";
  const double lx = kWidth - kMargin - 150;
  out << "  <line class=\"budget legend\" x1=\"" << num(lx) << "\" y1=\"30.00\" x2=\"" << num(lx + 30)
      << "\" y2=\"30.00\"/><text x=\"" << num(lx + 36) << "\" y=\"34.00\">budget line</text>\n";
  out << "  <line class=\"indifference legend\" x1=\"" << num(lx) << "\" y1=\"46.00\" x2=\"" << num(lx + 30)
      << "\" y2=\"46.00\"/><text x=\"" << num(lx + 36) << "\" y=\"50.00\">indifference line</text>\n";
  if (!hidden.empty()) {
    std::string note = "outside view:";
    for (std::size_t k : hidden) {
      note += " #" + std::to_string(k + 1) + " (" + to_fixed(candidates[k].prices[horizontal], 2) + ", " +
              to_fixed(candidates[k].prices[vertical], 2) + ")";
    }
    out << "  <text x=\"" << num(kMargin) << "\" y=\"" << num(kHeight - 12) << "\">" << escape(note) << "</text>\n";
  }
  out << "</g>\n";
  out << "</svg>\n";
}

}  // namespace sugartax::io

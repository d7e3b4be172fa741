#include "sugartax/io/report.hpp"

#include <cstdio>
#include <ostream>

#include "json.hpp"

namespace sugartax::io {

namespace {

using Json = nlohmann::ordered_json;

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

std::string fixed(const Rational& value, int decimals) { return to_fixed(value, decimals); }

Json exact(const Rational& value) { return to_exact_string(value); }

Json prices_json(const Market& market, const PriceVector& prices, int precision) {
  Json out = Json::array();
  for (std::size_t j = 0; j < prices.size(); ++j) {
    out.push_back(Json{{"product", market.products()[j].id},
                       {"exact", exact(prices[j])},
                       {"display", fixed(prices[j], precision)}});
  }
  return out;
}

Json choices_json(const Market& market, const PriceVector& prices, const Assignment& choices) {
  Json out = Json::array();
  for (std::size_t i = 0; i < choices.size(); ++i) {
    const Consumer& c = market.consumers()[i];
    Json row{{"consumer", c.id}};
    if (choices[i].purchases()) {
      row["product"] = market.products()[choices[i].product()].id;
      row["utility"] = exact(clipped_utility(c, choices[i].product(), prices));
    } else {
      row["product"] = nullptr;
    }
    out.push_back(std::move(row));
  }
  return out;
}

Json welfare_json(const WelfareBreakdown& w) {
  return Json{{"mode", std::string(to_string(w.mode))},
              {"consumer_surplus", w.consumer_surplus},
              {"firm_utility", exact(w.firm_utility)},
              {"tax", exact(w.tax)},
              {"exact_part", exact(w.exact_part)},
              {"total", w.total}};
}

Json revenue_json(const RevenueSplit& r) {
  return Json{{"untaxed", exact(r.untaxed)}, {"taxed", exact(r.taxed)}, {"gross", exact(r.gross())}};
}

std::string choice_cell(const Market& market, const Consumer& c, const Choice& choice, const PriceVector& prices,
                        int precision) {
  if (!choice.purchases()) return "-";
  return market.products()[choice.product()].id + " u=" +
         fixed(clipped_utility(c, choice.product(), prices), precision);
}

void emit_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += "  ";
      line += row[c];
      if (c + 1 < row.size()) line.append(width[c] - row[c].size(), ' ');
    }
    out << line << '\n';
  }
}

std::string mode_label(WelfareMode mode, WelfareMode selected) {
  return std::string(to_string(mode)) + (mode == selected ? " (selected)" : "");
}

}  // namespace

std::string format_prices(const PriceVector& prices, int precision) {
  std::string s = "(";
  for (std::size_t j = 0; j < prices.size(); ++j) {
    if (j > 0) s += ", ";
    s += to_fixed(prices[j], precision);
  }
  return s + ")";
}

GridSpec grid_for(const Market& market, const CandidateSet& candidates, const RunConfig& config) {
  GridSpec grid = default_grid(market, candidates);
  if (config.grid_step) grid.price_step = *config.grid_step;
  if (config.alpha_step) grid.alpha_step = *config.alpha_step;
  return grid;
}

SolveReport solve(const Market& market, const CandidateSet& candidates, const RunConfig& config) {
  SolveReport report;
  report.solution = optimize(market, candidates, config.mode, SolveOptions{config.threads});

  const ResponseOutcome& r = report.solution.response;
  const double surplus = r.welfare.consumer_surplus;
  report.definition = make_welfare(surplus, r.revenue, report.solution.alpha, WelfareMode::definition);
  report.tax_double_counted = make_welfare(surplus, r.revenue, report.solution.alpha, WelfareMode::tax_double_counted);

  DisplayEvaluation& d = report.display;
  for (const Rational& p : r.prices) d.prices.push_back(round_to(p, config.precision));
  d.choices = assign(market, d.prices, report.solution.alpha.value());
  d.revenue = revenue_split(market, d.prices, d.choices);
  const double display_surplus = consumer_surplus(market, d.prices, d.choices);
  d.definition = make_welfare(display_surplus, d.revenue, report.solution.alpha, WelfareMode::definition);
  d.tax_double_counted =
      make_welfare(display_surplus, d.revenue, report.solution.alpha, WelfareMode::tax_double_counted);

  if (config.oracle) {
    report.grid = grid_for(market, candidates, config);
    report.verification = verify_solution(market, candidates, report.solution, *report.grid, config.threads);
  }
  return report;
}

void write_solve_report(std::ostream& out, const Market& market, const CandidateSet& candidates,
                        const SolveReport& report, const RunConfig& config) {
  const int prec = config.precision;
  const TaxSolution& s = report.solution;
  const ResponseOutcome& r = s.response;

  if (config.format == OutputFormat::json) {
    Json doc;
    doc["welfare_mode"] = std::string(to_string(s.mode));
    doc["products"] = market.product_count();
    doc["consumers"] = market.consumer_count();
    doc["hyperplanes"] = candidates.hyperplanes().size();
    doc["candidates"] = candidates.size();
    Json rates = Json::array();
    for (const BreakEven& b : s.break_evens) {
      Json row{{"alpha", exact(b.alpha)}, {"display", fixed(b.alpha, prec)}};
      row["pair"] = b.pair ? Json::array({b.pair->first + 1, b.pair->second + 1}) : Json(nullptr);
      rates.push_back(std::move(row));
    }
    doc["break_evens"] = std::move(rates);
    doc["alpha"] = Json{{"exact", exact(s.alpha.value())}, {"display", fixed(s.alpha.value(), prec)}};
    doc["candidate"] = r.candidate + 1;
    doc["prices"] = prices_json(market, r.prices, prec);
    doc["choices"] = choices_json(market, r.prices, r.choices);
    doc["revenue"] = revenue_json(r.revenue);
    doc["tax"] = exact(r.tax);
    doc["net"] = exact(r.net);
    Json welfare = Json::object();
    welfare["definition"] = welfare_json(report.definition);
    welfare["definition"]["selected"] = s.mode == WelfareMode::definition;
    welfare["paper-example"] = welfare_json(report.tax_double_counted);
    welfare["paper-example"]["selected"] = s.mode == WelfareMode::tax_double_counted;
    doc["welfare"] = std::move(welfare);
    doc["display_evaluation"] = Json{{"prices", prices_json(market, report.display.prices, prec)},
                                     {"choices", choices_json(market, report.display.prices, report.display.choices)},
                                     {"revenue", revenue_json(report.display.revenue)},
                                     {"definition", welfare_json(report.display.definition)},
                                     {"paper-example", welfare_json(report.display.tax_double_counted)}};
    Json steps = Json::array();
    for (const WelfareStep& st : s.staircase) {
      steps.push_back(Json{{"from", exact(st.from)},
                           {"to", exact(st.to)},
                           {"candidate", st.candidate + 1},
                           {"prices", prices_json(market, candidates[st.candidate].prices, prec)},
                           {"welfare_from", st.at_from.total},
                           {"welfare_to", st.at_to.total}});
    }
    doc["staircase"] = std::move(steps);
    Json evals = Json::array();
    for (const AlphaEvaluation& e : s.evaluated) {
      evals.push_back(Json{{"alpha", exact(e.alpha)},
                           {"candidate", e.candidate + 1},
                           {"net", exact(e.net)},
                           {"welfare", e.welfare.total}});
    }
    doc["evaluated"] = std::move(evals);
    if (report.verification) {
      Json v{{"passed", report.verification->passed()},
             {"rates_checked", report.verification->rates_checked},
             {"grid_points", report.verification->grid_points},
             {"price_step", exact(report.grid->price_step)},
             {"alpha_step", exact(report.grid->alpha_step)}};
      Json violations = Json::array();
      for (const Violation& viol : report.verification->violations) {
        violations.push_back(Json{{"alpha", exact(viol.alpha)},
                                  {"prices", prices_json(market, viol.prices, prec)},
                                  {"message", viol.message}});
      }
      v["violations"] = std::move(violations);
      doc["verification"] = std::move(v);
    }
    out << doc.dump(2) << '\n';
    return;
  }

  out << "sugar tax solve report\n\n";
  out << "products        " << market.product_count() << " (";
  for (std::size_t j = 0; j < market.product_count(); ++j) {
    const Product& p = market.products()[j];
    out << (j ? ", " : "") << p.id << (p.taxed ? " taxed" : "");
  }
  out << ")\n";
  out << "consumers       " << market.consumer_count() << '\n';
  out << "hyperplanes     " << candidates.hyperplanes().size() << '\n';
  out << "candidates      " << candidates.size() << '\n';
  out << "break-evens     " << s.break_evens.size() << " in [0, 1]:";
  for (std::size_t k = 0; k < s.break_evens.size(); ++k) {
    out << (k % 12 == 0 ? "\n  " : " ") << fixed(s.break_evens[k].alpha, prec);
  }
  out << "\n\n";

  out << "welfare mode    " << to_string(s.mode) << '\n';
  out << "optimal rate    " << fixed(s.alpha.value(), prec) << " (exact " << to_exact_string(s.alpha.value())
      << ")\n";
  out << "firm prices     " << format_prices(r.prices, prec) << " candidate #" << r.candidate + 1 << '\n';
  for (std::size_t j = 0; j < market.product_count(); ++j) {
    out << "  " << market.products()[j].id << "  " << fixed(r.prices[j], prec) << "  exact "
        << to_exact_string(r.prices[j]) << '\n';
  }
  out << "choices\n";
  for (std::size_t i = 0; i < market.consumer_count(); ++i) {
    out << "  " << market.consumers()[i].id << "  "
        << choice_cell(market, market.consumers()[i], r.choices[i], r.prices, prec) << '\n';
  }
  out << "revenue         untaxed " << fixed(r.revenue.untaxed, prec) << "  taxed " << fixed(r.revenue.taxed, prec)
      << "  gross " << fixed(r.gross, prec) << '\n';
  out << "firm            tax " << fixed(r.tax, prec) << "  net " << fixed(r.net, prec) << "\n\n";

  std::vector<std::vector<std::string>> welfare{{"welfare", "U_c", "U_f", "T", "W"}};
  for (const WelfareBreakdown* w : {&report.definition, &report.tax_double_counted}) {
    welfare.push_back({mode_label(w->mode, s.mode), fixed(w->consumer_surplus, 6), fixed(w->firm_utility, prec),
                       fixed(w->tax, prec), fixed(w->total, prec)});
  }
  emit_table(out, welfare);

  const DisplayEvaluation& d = report.display;
  out << "\nat display prices " << format_prices(d.prices, prec) << ": gross " << fixed(d.revenue.gross(), prec)
      << ", W definition " << fixed(d.definition.total, prec) << ", W paper-example "
      << fixed(d.tax_double_counted.total, prec) << "\n\n";

  out << "staircase\n";
  std::vector<std::vector<std::string>> steps;
  for (const WelfareStep& st : s.staircase) {
    steps.push_back({"  [" + fixed(st.from, prec) + ", " + fixed(st.to, prec) + "]",
                     "#" + std::to_string(st.candidate + 1), format_prices(candidates[st.candidate].prices, prec),
                     "W " + fixed(st.at_from.total, prec) + " .. " + fixed(st.at_to.total, prec)});
  }
  emit_table(out, steps);

  if (report.verification) {
    const VerificationReport& v = *report.verification;
    out << "\noracle          " << (v.passed() ? "passed" : "FAILED") << " (" << v.rates_checked << " rates, "
        << v.grid_points << " grid points, step " << to_exact_string(report.grid->price_step) << ")\n";
    for (const Violation& viol : v.violations) {
      out << "  alpha " << fixed(viol.alpha, prec) << " at " << format_prices(viol.prices, prec) << ": "
          << viol.message << '\n';
    }
  }
}

void write_candidates(std::ostream& out, const Market& market, const CandidateSet& candidates,
                      const RunConfig& config) {
  const int prec = config.precision;
  // One row per candidate: its assignment at zero tax.
  std::vector<EvaluatedCandidate> evaluated;
  for (EvaluatedCandidate& e : evaluate_candidates(market, candidates, config.threads)) {
    if (e.valid_at(Rational(0))) evaluated.push_back(std::move(e));
  }

  if (config.format == OutputFormat::json) {
    Json rows = Json::array();
    for (std::size_t k = 0; k < evaluated.size(); ++k) {
      const EvaluatedCandidate& e = evaluated[k];
      Json on = Json::array();
      for (std::size_t h : candidates[k].incident) on.push_back(candidates.hyperplanes()[h].describe(market));
      rows.push_back(Json{{"nr", k + 1},
                          {"prices", prices_json(market, e.prices, prec)},
                          {"hyperplanes", std::move(on)},
                          {"choices", choices_json(market, e.prices, e.choices)},
                          {"revenue", revenue_json(e.revenue)},
                          {"consumer_surplus", e.consumer_surplus}});
    }
    out << Json{{"candidates", std::move(rows)}}.dump(2) << '\n';
    return;
  }

  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"nr"};
  for (const Product& p : market.products()) header.push_back(p.id);
  for (const Consumer& c : market.consumers()) header.push_back(c.id);
  header.push_back("revenue");
  rows.push_back(std::move(header));
  for (std::size_t k = 0; k < evaluated.size(); ++k) {
    const EvaluatedCandidate& e = evaluated[k];
    std::vector<std::string> row{std::to_string(k + 1)};
    for (const Rational& p : e.prices) row.push_back(fixed(p, prec));
    for (std::size_t i = 0; i < market.consumer_count(); ++i) {
      row.push_back(choice_cell(market, market.consumers()[i], e.choices[i], e.prices, prec));
    }
    row.push_back(fixed(e.revenue.gross(), prec));
    rows.push_back(std::move(row));
  }
  emit_table(out, rows);
}

void write_welfare_curve(std::ostream& out, const Market& market, const CandidateSet& candidates,
                         const WelfareCurve& curve, const RunConfig& config) {
  const int prec = config.precision;
  if (config.format == OutputFormat::json) {
    Json points = Json::array();
    for (const CurvePoint& p : curve.points) {
      points.push_back(Json{{"alpha", exact(p.alpha)},
                            {"break_even", p.break_even},
                            {"candidate", p.candidate + 1},
                            {"prices", prices_json(market, candidates[p.candidate].prices, prec)},
                            {"definition", welfare_json(p.definition)},
                            {"paper-example", welfare_json(p.tax_double_counted)}});
    }
    Json steps = Json::array();
    for (const WelfareStep& st : curve.steps) {
      steps.push_back(Json{{"from", exact(st.from)}, {"to", exact(st.to)}, {"candidate", st.candidate + 1}});
    }
    out << Json{{"welfare_mode", std::string(to_string(config.mode))},
                {"points", std::move(points)},
                {"steps", std::move(steps)}}
               .dump(2)
        << '\n';
    return;
  }

  std::vector<std::vector<std::string>> rows{{"alpha", "kind", "candidate", "prices", "W definition",
                                              "W paper-example"}};
  for (const CurvePoint& p : curve.points) {
    rows.push_back({fixed(p.alpha, std::max(prec, 3)), p.break_even ? "break-even" : "sample",
                    "#" + std::to_string(p.candidate + 1), format_prices(candidates[p.candidate].prices, prec),
                    fixed(p.definition.total, prec), fixed(p.tax_double_counted.total, prec)});
  }
  emit_table(out, rows);
  out << "\nsteps (" << to_string(config.mode) << " tie-break): " << curve.steps.size() << '\n';
  for (const WelfareStep& st : curve.steps) {
    out << "  [" << fixed(st.from, std::max(prec, 3)) << ", " << fixed(st.to, std::max(prec, 3)) << "]  #"
        << st.candidate + 1 << ' ' << format_prices(candidates[st.candidate].prices, prec) << '\n';
  }
}

void write_verification(std::ostream& out, const Market& market, const SolveReport& report,
                        const RunConfig& config) {
  const int prec = config.precision;
  const VerificationReport& v = *report.verification;
  if (config.format == OutputFormat::json) {
    Json violations = Json::array();
    for (const Violation& viol : v.violations) {
      violations.push_back(Json{{"alpha", exact(viol.alpha)},
                                {"prices", prices_json(market, viol.prices, prec)},
                                {"message", viol.message}});
    }
    out << Json{{"passed", v.passed()},
                {"rates_checked", v.rates_checked},
                {"grid_points", v.grid_points},
                {"price_step", exact(report.grid->price_step)},
                {"alpha_step", exact(report.grid->alpha_step)},
                {"alpha", exact(report.solution.alpha.value())},
                {"welfare", report.solution.welfare().total},
                {"violations", std::move(violations)}}
               .dump(2)
        << '\n';
    return;
  }
  out << "oracle verification " << (v.passed() ? "passed" : "FAILED") << '\n';
  out << "  rates checked  " << v.rates_checked << '\n';
  out << "  grid points    " << v.grid_points << " (price step " << to_exact_string(report.grid->price_step)
      << ", rate step " << to_exact_string(report.grid->alpha_step) << ")\n";
  out << "  optimum        alpha " << fixed(report.solution.alpha.value(), prec) << ", W "
      << fixed(report.solution.welfare().total, prec) << '\n';
  for (const Violation& viol : v.violations) {
    out << "  violation at alpha " << fixed(viol.alpha, prec) << " " << format_prices(viol.prices, prec) << ": "
        << viol.message << '\n';
  }
}

}  // namespace sugartax::io

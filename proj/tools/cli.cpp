#include "cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "sugartax/io/instance.hpp"
#include "sugartax/io/plot.hpp"
#include "sugartax/io/report.hpp"

namespace sugartax::cli {

namespace {

struct Options {
  std::string instance;
  std::string config_path;
  std::string welfare_mode;
  std::string grid_step;
  std::string alpha_step;
  std::string out;
  std::string format;
  std::optional<int> precision;
  unsigned threads = 0;
  std::size_t samples = 0;
  bool oracle = false;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

io::RunConfig make_config(const Options& o) {
  io::RunConfig config;
  try {
    if (!o.config_path.empty()) config = io::load_config(o.config_path);
    if (!o.welfare_mode.empty()) config.mode = parse_welfare_mode(o.welfare_mode);
    if (!o.grid_step.empty()) config.grid_step = parse_rational(o.grid_step);
    if (!o.alpha_step.empty()) config.alpha_step = parse_rational(o.alpha_step);
    if (!o.out.empty()) config.out = o.out;
    if (!o.format.empty()) config.format = io::parse_output_format(o.format);
    if (o.precision) config.precision = *o.precision;
    if (o.threads > 0) config.threads = o.threads;
    if (o.samples > 0) config.curve_samples = o.samples;
    if (o.oracle) config.oracle = true;
    config.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return config;
}

void add_common(CLI::App& cmd, Options& o) {
  cmd.add_option("--instance", o.instance, "Market instance file")->required();
  cmd.add_option("--config", o.config_path, "JSON run configuration; flags override it");
  cmd.add_option("--out", o.out, "Write the report here instead of stdout");
  cmd.add_option("--format", o.format, "Report format: text or json");
  cmd.add_option("--precision", o.precision, "Decimals shown in reports (default 2)");
  cmd.add_option("--threads", o.threads, "Worker threads (default 1)");
}

void add_solver(CLI::App& cmd, Options& o) {
  cmd.add_option("--welfare-mode", o.welfare_mode, "definition or paper-example");
  cmd.add_option("--grid-step", o.grid_step, "Oracle price step, exact (e.g. 0.01 or 1/100)");
  cmd.add_option("--alpha-step", o.alpha_step, "Oracle tax-rate step, exact");
}

// Writes through a buffer so a failed run never leaves a partial report.
void emit(const io::RunConfig& config, std::ostream& out, const std::function<void(std::ostream&)>& body) {
  std::ostringstream buffer;
  body(buffer);
  if (config.out) {
    std::ofstream file(*config.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + config.out->string());
    file << buffer.str();
    if (!file) throw std::runtime_error("failed writing " + config.out->string());
  } else {
    out << buffer.str();
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Optimal sugar tax rate by exact enumeration of firm pricing strategies", "sugartax"};
  app.require_subcommand(1);
  Options o;

  auto* solve_cmd = app.add_subcommand("solve", "Optimal tax rate, firm prices and welfare");
  add_common(*solve_cmd, o);
  add_solver(*solve_cmd, o);
  solve_cmd->add_flag("--oracle", o.oracle, "Cross-check with the brute-force grid oracle");

  auto* candidates_cmd = app.add_subcommand("candidates", "Table of candidate price points");
  add_common(*candidates_cmd, o);

  auto* curve_cmd = app.add_subcommand("welfare-curve", "Welfare at every break-even and sampled rate");
  add_common(*curve_cmd, o);
  add_solver(*curve_cmd, o);
  curve_cmd->add_option("--samples", o.samples, "Evenly spaced rates in [0, 1] (default 11)");

  auto* plot_cmd = app.add_subcommand("plot", "SVG diagram of the two-product price space");
  add_common(*plot_cmd, o);

  auto* verify_cmd = app.add_subcommand("verify", "Solve, then verify against the grid oracle");
  add_common(*verify_cmd, o);
  add_solver(*verify_cmd, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  try {
    const io::RunConfig config = make_config(o);
    const Market market = io::load_instance(o.instance);
    const CandidateSet candidates = enumerate_candidates(market, EnumerationOptions{config.threads});

    if (solve_cmd->parsed()) {
      const io::SolveReport report = io::solve(market, candidates, config);
      emit(config, out, [&](std::ostream& s) { io::write_solve_report(s, market, candidates, report, config); });
      if (report.verification && !report.verification->passed()) {
        err << "oracle verification failed\n";
        return kExitOracleFailed;
      }
    } else if (candidates_cmd->parsed()) {
      emit(config, out, [&](std::ostream& s) { io::write_candidates(s, market, candidates, config); });
    } else if (curve_cmd->parsed()) {
      const WelfareCurve curve =
          welfare_curve(market, candidates, config.mode, config.curve_samples, SolveOptions{config.threads});
      emit(config, out, [&](std::ostream& s) { io::write_welfare_curve(s, market, candidates, curve, config); });
    } else if (plot_cmd->parsed()) {
      if (market.product_count() != 2) throw InputError("plot requires exactly two products");
      emit(config, out, [&](std::ostream& s) { io::write_price_space_svg(s, market, candidates); });
    } else if (verify_cmd->parsed()) {
      io::RunConfig with_oracle = config;
      with_oracle.oracle = true;
      const io::SolveReport report = io::solve(market, candidates, with_oracle);
      emit(config, out, [&](std::ostream& s) { io::write_verification(s, market, report, config); });
      if (!report.verification->passed()) return kExitOracleFailed;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const io::InstanceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const ModelError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitOk;
}

}  // namespace sugartax::cli

#include "tvpoint/cli.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tvpoint/error.hpp"
#include "tvpoint/estimator.hpp"
#include "tvpoint/evaluate.hpp"
#include "tvpoint/grid.hpp"
#include "tvpoint/io.hpp"
#include "tvpoint/simulate.hpp"
#include "tvpoint/studies.hpp"
#include "tvpoint/weights.hpp"

namespace tvpoint::cli {

namespace {

using ordered_json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

std::string num(double v) {
  if (std::isnan(v)) return "NA";
  return fmt::format("{}", v);
}

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

struct FitOptions {
  std::string input;
  std::string format = "timestamps";
  std::optional<std::size_t> bins;
  double x = 1.0;
  std::optional<double> scale;
  bool cv = false;
  bool unweighted = false;
  std::uint64_t seed = 0;
  int folds = 10;
  std::vector<double> scale_grid = default_scale_grid();
  std::string out;
  std::string table;
  bool timings = false;
};

struct SimulateOptions {
  std::optional<int> example;
  std::string intensity;
  std::int64_t n = 0;
  std::uint64_t seed = 0;
  std::string out;
};

struct StudyOptions {
  int example = 1;
  std::vector<std::int64_t> n_grid;
  int mc = 20;
  std::uint64_t seed = 0;
  bool unweighted = false;
  std::string mode;
  double x = 1.0;
  int folds = 10;
  std::vector<double> scale_grid = default_scale_grid();
  std::optional<double> scale;
  std::optional<std::size_t> bins;
  std::string out;
};

void add_study_options(CLI::App* cmd, StudyOptions& o) {
  cmd->add_option("--example", o.example, "Bundled intensity id")
      ->check(CLI::IsMember({1, 2}))
      ->required();
  cmd->add_option("--n-grid", o.n_grid, "Comma-separated replicate counts")
      ->delimiter(',')
      ->check(CLI::PositiveNumber)
      ->required();
  cmd->add_option("--mc", o.mc, "Monte-Carlo replicates per n")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o.seed, "Root seed");
  cmd->add_flag("--unweighted", o.unweighted, "Use uniform weights (w = 1) times the scale");
  cmd->add_option("--x", o.x, "Confidence parameter of the data-driven weights")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--folds", o.folds, "Cross-validation folds")->check(CLI::Range(2, 1000));
  cmd->add_option("--scale-grid", o.scale_grid, "Candidate weight multipliers")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  cmd->add_option("--scale", o.scale, "Fixed weight multiplier (disables cross-validation)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--bins", o.bins, "Bin count (default ceil(sqrt(n)))")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--out", o.out, "Output TSV path")->required();
}

StudyConfig study_config(const StudyOptions& o, WeightMode mode) {
  StudyConfig cfg;
  cfg.example = o.example;
  cfg.n_grid = o.n_grid;
  cfg.replicates = o.mc;
  cfg.seed = o.seed;
  cfg.mode = mode;
  cfg.weights.x = o.x;
  cfg.folds = o.folds;
  cfg.scale_grid = o.scale_grid;
  cfg.fixed_scale = o.scale;
  cfg.bins = o.bins;
  return cfg;
}

int cmd_fit(const FitOptions& o, std::ostream& out) {
  const auto t_start = Clock::now();
  const EventSeries events = io::read_event_file(o.input, io::parse_format(o.format));
  const double read_ms = elapsed_ms(t_start);

  const std::size_t m = o.bins.value_or(default_bins(events.replicates()));
  const WeightMode mode = o.unweighted ? WeightMode::uniform : WeightMode::data_driven;
  WeightConfig wcfg;
  wcfg.x = o.x;
  wcfg.validate();

  const auto t_cv = Clock::now();
  double scale = o.scale.value_or(1.0);
  std::optional<CvResult> cv;
  if (o.cv) {
    cv = cross_validate_scale(events, m, {o.folds, o.scale_grid, o.seed}, mode, wcfg);
    scale = cv->best_scale;
  }
  const double cv_ms = elapsed_ms(t_cv);

  const auto t_fit = Clock::now();
  const auto counts = grid_counts(events, m);
  const BinnedSignal signal = scale_counts(counts, events.replicates());
  const WeightVector weights = base_weights(counts, events.replicates(), mode, wcfg).scaled(scale);
  const FitResult f = fit_binned(signal, weights);
  const double fit_ms = elapsed_ms(t_fit);

  ordered_json report;
  report["config"] = {{"input", o.input},
                      {"format", o.format},
                      {"bins", m},
                      {"n", events.replicates()},
                      {"x", o.x},
                      {"weights", o.unweighted ? "uniform" : "data_driven"},
                      {"scale", scale},
                      {"cv", o.cv},
                      {"folds", o.folds},
                      {"seed", o.seed}};
  report["n_events"] = events.size();
  report["l_hat"] = f.l_hat;
  report["jump_set"] = f.jump_set;
  report["tau_hat"] = f.tau_hat;
  report["tau_boundary"] = f.tau_boundary;
  report["kkt_residual"] = f.kkt_residual;
  report["clamped"] = f.clamped;
  report["beta"] = f.beta;
  report["beta_prox"] = f.beta_prox;
  report["weights"] = std::vector<double>(weights.values().begin(), weights.values().end());
  report["intensity"] = {
      {"breakpoints", std::vector<double>(f.intensity.breakpoints().begin(),
                                          f.intensity.breakpoints().end())},
      {"levels", std::vector<double>(f.intensity.levels().begin(), f.intensity.levels().end())}};
  report["bin_counts"] = counts;
  if (cv) {
    ordered_json curve = ordered_json::array();
    for (const auto& p : cv->curve) curve.push_back({p.scale, p.risk});
    report["cv_curve"] = std::move(curve);
  }
  if (o.timings) report["timings_ms"] = {{"read", read_ms}, {"cv", cv_ms}, {"fit", fit_ms}};

  const std::string json_text = report.dump(2) + "\n";
  if (o.out.empty()) {
    out << json_text;
  } else {
    io::write_text(o.out, json_text);
  }

  if (!o.table.empty()) {
    const double root_m = std::sqrt(static_cast<double>(m));
    std::string tsv = "bin\tleft\tright\tcount\tlevel\n";
    for (std::size_t j = 0; j < m; ++j) {
      const double left = j == 0 ? 0.0 : grid_edge(j - 1, m);
      fmt::format_to(std::back_inserter(tsv), "{}\t{}\t{}\t{}\t{}\n", j + 1, num(left),
                     num(grid_edge(j, m)), counts[j], num(root_m * f.beta[j]));
    }
    io::write_text(o.table, tsv);
  }
  return kOk;
}

int cmd_simulate(const SimulateOptions& o) {
  const StepFunction intensity =
      o.example ? example_intensity(*o.example) : io::read_intensity_json(o.intensity);
  const EventSeries events = sample_events({intensity, o.n, o.seed});
  io::write_event_file(o.out, events);
  return kOk;
}

std::vector<WeightMode> study_modes(const StudyOptions& o) {
  if (o.mode == "both") return {WeightMode::data_driven, WeightMode::uniform};
  if (o.mode == "unweighted" || o.unweighted) return {WeightMode::uniform};
  return {WeightMode::data_driven};
}

int cmd_mise_study(const StudyOptions& o) {
  std::string tsv = "n\tmode\tmean_mise\tsd_mise\tm\n";
  std::vector<std::vector<MiseRow>> per_mode;
  for (WeightMode mode : study_modes(o)) per_mode.push_back(run_mise_study(study_config(o, mode)));
  for (std::size_t i = 0; i < o.n_grid.size(); ++i) {
    for (const auto& rows : per_mode) {
      const auto& r = rows[i];
      fmt::format_to(std::back_inserter(tsv), "{}\t{}\t{}\t{}\t{}\n", r.n, mode_name(r.mode),
                     num(r.mean_mise), num(r.sd_mise), r.m);
    }
  }
  io::write_text(o.out, tsv);
  return kOk;
}

int cmd_consistency_study(const StudyOptions& o) {
  const auto modes = study_modes(o);
  if (modes.size() != 1) throw ConfigError("consistency-study runs a single weight mode");
  const auto rows = run_consistency_study(study_config(o, modes.front()));
  std::string tsv =
      "n\tfrac_correct_L\tmean_max_err_given_correct_L\tmean_E_That_T0\tm\t"
      "frac_E_within_2_over_m\n";
  for (const auto& r : rows) {
    fmt::format_to(std::back_inserter(tsv), "{}\t{}\t{}\t{}\t{}\t{}\n", r.n, num(r.frac_correct_l),
                   num(r.mean_max_err_given_correct_l), num(r.mean_coverage), r.m,
                   num(r.frac_coverage_within_two_bins));
  }
  io::write_text(o.out, tsv);
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Piecewise-constant intensity estimation with weighted total variation", "tvpoint"};
  app.require_subcommand(1);

  FitOptions fit_opts;
  auto* fit_cmd = app.add_subcommand("fit", "Fit an intensity to an event file");
  fit_cmd->add_option("--input", fit_opts.input, "Event file")->required();
  fit_cmd->add_option("--format", fit_opts.format, "timestamps or positions")
      ->check(CLI::IsMember({"timestamps", "positions"}));
  fit_cmd->add_option("--bins", fit_opts.bins, "Bin count (default ceil(sqrt(n)))")
      ->check(CLI::PositiveNumber);
  fit_cmd->add_option("--x", fit_opts.x, "Confidence parameter of the data-driven weights")
      ->check(CLI::PositiveNumber);
  auto* scale_opt = fit_cmd->add_option("--scale", fit_opts.scale, "Weight multiplier")
                        ->check(CLI::PositiveNumber);
  auto* cv_flag = fit_cmd->add_flag("--cv", fit_opts.cv, "Select the multiplier by cross-validation");
  scale_opt->excludes(cv_flag);
  fit_cmd->add_flag("--unweighted", fit_opts.unweighted, "Uniform weights (w = 1) times the scale");
  fit_cmd->add_option("--seed", fit_opts.seed, "Seed of the cross-validation split");
  fit_cmd->add_option("--folds", fit_opts.folds, "Cross-validation folds")->check(CLI::Range(2, 1000));
  fit_cmd->add_option("--scale-grid", fit_opts.scale_grid, "Candidate multipliers for --cv")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  fit_cmd->add_option("--out", fit_opts.out, "JSON report path (stdout if omitted)");
  fit_cmd->add_option("--table", fit_opts.table, "Per-bin TSV path");
  fit_cmd->add_flag("--timings", fit_opts.timings, "Include wall-clock timings in the report");

  SimulateOptions sim_opts;
  auto* sim_cmd = app.add_subcommand("simulate", "Simulate counting-process replicates");
  auto* example_opt = sim_cmd->add_option("--example", sim_opts.example, "Bundled intensity id")
                          ->check(CLI::IsMember({1, 2}));
  auto* intensity_opt =
      sim_cmd->add_option("--intensity", sim_opts.intensity, "Intensity JSON file");
  example_opt->excludes(intensity_opt);
  sim_cmd->add_option("--n", sim_opts.n, "Replicate count")->check(CLI::PositiveNumber)->required();
  sim_cmd->add_option("--seed", sim_opts.seed, "Seed");
  sim_cmd->add_option("--out", sim_opts.out, "Output event file")->required();

  StudyOptions mise_opts;
  auto* mise_cmd = app.add_subcommand("mise-study", "Monte-Carlo MISE versus n");
  add_study_options(mise_cmd, mise_opts);
  mise_cmd->add_option("--mode", mise_opts.mode, "weighted, unweighted or both")
      ->check(CLI::IsMember({"weighted", "unweighted", "both"}));

  StudyOptions cons_opts;
  auto* cons_cmd = app.add_subcommand("consistency-study", "Monte-Carlo change-point recovery");
  add_study_options(cons_cmd, cons_opts);

  try {
    app.parse(argc, argv);
    if (sim_cmd->parsed() && !sim_opts.example && sim_opts.intensity.empty()) {
      throw CLI::RequiredError("--example or --intensity");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (fit_cmd->parsed()) return cmd_fit(fit_opts, out);
    if (sim_cmd->parsed()) return cmd_simulate(sim_opts);
    if (mise_cmd->parsed()) return cmd_mise_study(mise_opts);
    if (cons_cmd->parsed()) return cmd_consistency_study(cons_opts);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace tvpoint::cli

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "bas/harness.hpp"
#include "bas/results_io.hpp"

namespace {

using namespace bas;

struct CliOptions {
  std::string problem;
  std::optional<double> alpha, c, d0, delta0, d_init, step_floor, rho;
  std::optional<std::uint64_t> kmax;
  std::uint64_t seed = 0;
  std::size_t runs = 100;
  std::size_t threads = 0;
  bool early_stop = false;
  std::string out;
  std::string format = "json";
};

void add_common_flags(CLI::App* cmd, CliOptions& o) {
  cmd->add_option("--problem", o.problem, "problem id, one of `bas list`")->required();
  cmd->add_option("--seed", o.seed, "base seed for the run streams");
  cmd->add_option("--alpha", o.alpha, "step-size decay rate");
  cmd->add_option("--c", o.c, "antenna-length decay rate");
  cmd->add_option("--d0", o.d0, "antenna-length floor constant");
  cmd->add_option("--delta0", o.delta0, "initial step size");
  cmd->add_option("--d-init", o.d_init, "initial antenna length");
  cmd->add_option("--step-floor", o.step_floor, "step-size floor constant");
  cmd->add_option("--kmax", o.kmax, "iterations per run");
  cmd->add_option("--rho", o.rho, "penalty weight (engineering problems)");
  cmd->add_option("--out", o.out, "also write the payload to this file");
  cmd->add_option("--format", o.format, "payload format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  cmd->add_flag("--early-stop", o.early_stop,
                "stop a run once the success predicate holds (benchmarks)");
}

// Flag-level range checks, reported against the flag the user set.
void check_flags(const CliOptions& o) {
  if (o.alpha && !(*o.alpha > 0.0 && *o.alpha < 1.0)) {
    throw std::invalid_argument("--alpha must lie strictly between 0 and 1");
  }
  if (o.c && !(*o.c > 0.0)) throw std::invalid_argument("--c must be positive");
  if (o.d0 && !(*o.d0 > 0.0)) throw std::invalid_argument("--d0 must be positive");
  if (o.delta0 && !(*o.delta0 > 0.0)) throw std::invalid_argument("--delta0 must be positive");
  if (o.d_init && !(*o.d_init > 0.0)) throw std::invalid_argument("--d-init must be positive");
  if (o.step_floor && !(*o.step_floor >= 0.0)) {
    throw std::invalid_argument("--step-floor must be non-negative");
  }
  if (o.rho && !(*o.rho > 0.0)) throw std::invalid_argument("--rho must be positive");
  if (o.runs == 0) throw std::invalid_argument("--runs must be at least 1");
}

ProblemId resolve_problem(const std::string& name) {
  if (auto id = parse_problem_id(name)) return *id;
  throw std::invalid_argument("--problem: unknown id '" + name + "' (see `bas list`)");
}

BasParams problem_defaults(const ProblemId& id) {
  if (const auto* b = std::get_if<BenchmarkId>(&id)) return default_benchmark_params(*b);
  return default_engineering_params(std::get<EngineeringId>(id));
}

ExperimentConfig build_config(const CliOptions& o, std::size_t runs) {
  const auto id = resolve_problem(o.problem);
  ExperimentConfig cfg;
  cfg.problem = id;
  cfg.params = problem_defaults(id);
  if (o.alpha) cfg.params.alpha = *o.alpha;
  if (o.c) cfg.params.c = *o.c;
  if (o.d0) cfg.params.d0 = *o.d0;
  if (o.delta0) cfg.params.delta0 = *o.delta0;
  if (o.d_init) cfg.params.d_init = *o.d_init;
  if (o.step_floor) cfg.params.step_floor = *o.step_floor;
  if (o.kmax) cfg.params.k_max = *o.kmax;
  cfg.params.seed = o.seed;
  if (o.rho) {
    if (!std::holds_alternative<EngineeringId>(id)) {
      throw std::invalid_argument("--rho applies only to engineering problems");
    }
    cfg.rho = *o.rho;
  }
  cfg.n_runs = runs;
  cfg.early_stop = o.early_stop;
  cfg.threads = o.threads;
  cfg.record_traces = false;
  return cfg;
}

std::string join_vector(const std::vector<double>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_double(v[i]);
  }
  return out + ")";
}

void emit_payload(const ExperimentStats& stats, const std::vector<RunResult>& results,
                  const CliOptions& o, const ExportOptions& options) {
  const auto format = *parse_export_format(o.format);
  const auto payload = format_results(stats, results, format, options);
  std::cout << payload;
  if (!o.out.empty()) {
    export_results(stats, results, format, o.out, options);
  }
}

int run_list() {
  for (const auto id : all_benchmarks()) {
    const auto spec = benchmark(id);
    const auto p = default_benchmark_params(id);
    std::cout << to_string(id) << "  dim=" << spec.dimension << "  box=["
              << format_double(spec.lb) << ", " << format_double(spec.ub) << "]"
              << "  alpha=" << format_double(p.alpha) << " c=" << format_double(p.c)
              << " d0=" << format_double(p.d0) << " delta0=" << format_double(p.delta0)
              << " d-init=" << format_double(p.d_init)
              << " step-floor=" << format_double(p.step_floor) << " kmax=" << p.k_max << "\n";
  }
  for (const auto id : all_engineering_problems()) {
    const auto problem = engineering_problem(id);
    const auto p = default_engineering_params(id);
    std::cout << to_string(id) << "  dim=" << problem.objective.dimension
              << "  constraints=" << problem.constraints.size()
              << "  rho=" << format_double(problem.rho) << "  alpha=" << format_double(p.alpha)
              << " c=" << format_double(p.c) << " d0=" << format_double(p.d0)
              << " delta0=" << format_double(p.delta0) << " d-init=" << format_double(p.d_init)
              << " step-floor=" << format_double(p.step_floor) << " kmax=" << p.k_max << "\n";
  }
  return 0;
}

int run_solve(const CliOptions& o) {
  check_flags(o);
  const auto cfg = build_config(o, 1);
  const auto [stats, results] = run_experiment(cfg);
  const auto& r = results[0];

  ExportOptions options;
  std::optional<ConstrainedProblem> problem;
  if (const auto* b = std::get_if<BenchmarkId>(&cfg.problem)) {
    const auto spec = benchmark(*b);
    options.success = SuccessCriterion{spec.x_star, spec.lb, spec.ub};
    std::cerr << to_string(cfg.problem) << ": f_best=" << format_double(r.f_best)
              << " evaluations=" << r.evaluations << " seed=" << r.seed
              << " x_best=" << join_vector(r.x_best) << "\n";
  } else {
    problem = engineering_problem(std::get<EngineeringId>(cfg.problem));
    if (cfg.rho) problem->rho = *cfg.rho;
    options.problem = &*problem;
    const auto report = feasibility(*problem, r.x_best);
    std::cerr << to_string(cfg.problem) << ": f_best=" << format_double(r.f_best)
              << " evaluations=" << r.evaluations << " seed=" << r.seed
              << " x_best=" << join_vector(r.x_best)
              << " raw_f=" << format_double(problem->objective.eval(r.x_best))
              << " max_violation=" << format_double(report.max_violation)
              << " in_bounds=" << (report.in_bounds ? "true" : "false")
              << " g=" << join_vector(report.constraint_values) << "\n";
  }
  emit_payload(stats, results, o, options);
  return 0;
}

int run_bench(const CliOptions& o) {
  check_flags(o);
  const auto cfg = build_config(o, o.runs);
  const auto [stats, results] = run_experiment(cfg);

  ExportOptions options;
  std::optional<ConstrainedProblem> problem;
  std::cerr << to_string(cfg.problem) << ":";
  if (stats.success_rate) {
    std::cerr << " success_rate=" << format_double(*stats.success_rate);
  }
  std::cerr << " best=" << format_double(stats.best_f) << " mean=" << format_double(stats.mean_f)
            << " std=" << format_double(stats.std_f) << " (n=" << stats.n_runs << ")";
  if (const auto* b = std::get_if<BenchmarkId>(&cfg.problem)) {
    const auto spec = benchmark(*b);
    options.success = SuccessCriterion{spec.x_star, spec.lb, spec.ub};
  } else {
    problem = engineering_problem(std::get<EngineeringId>(cfg.problem));
    if (cfg.rho) problem->rho = *cfg.rho;
    options.problem = &*problem;
    const RunResult* best = &results[0];
    for (const auto& r : results) {
      if (r.f_best < best->f_best) best = &r;
    }
    const auto report = feasibility(*problem, best->x_best);
    std::cerr << " best_run_max_violation=" << format_double(report.max_violation);
  }
  std::cerr << "\n";
  emit_payload(stats, results, o, options);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Beetle antennae search: single-beetle derivative-free global minimization"};
  app.require_subcommand(1);

  app.add_subcommand("list", "print every problem id with its default parameters");

  CliOptions solve_opts;
  auto* solve = app.add_subcommand("solve", "run the optimizer once on a problem");
  add_common_flags(solve, solve_opts);

  CliOptions bench_opts;
  auto* bench = app.add_subcommand("bench", "run a repeated-run experiment with statistics");
  add_common_flags(bench, bench_opts);
  bench->add_option("--runs", bench_opts.runs, "number of independent runs");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("list")) return run_list();
    if (app.got_subcommand("solve")) return run_solve(solve_opts);
    return run_bench(bench_opts);
  } catch (const std::exception& e) {
    std::cerr << "bas: error: " << e.what() << "\n";
    return 1;
  }
}

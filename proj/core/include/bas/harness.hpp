#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "bas/constrained.hpp"
#include "bas/objectives.hpp"
#include "bas/params.hpp"
#include "bas/rng.hpp"

namespace bas {

using ProblemId = std::variant<BenchmarkId, EngineeringId>;

std::string to_string(const ProblemId& id);
std::optional<ProblemId> parse_problem_id(std::string_view name);

// A repeated-run experiment on one problem.
struct ExperimentConfig {
  ProblemId problem;
  BasParams params;           // params.seed is the experiment base seed
  std::size_t n_runs = 100;
  std::optional<double> rho;  // penalty weight override (engineering only)
  // Reference minimizer for the success predicate; defaults to the benchmark's
  // tabulated x*. Must stay empty for engineering problems, whose boxes have
  // no identical scalar bounds.
  std::optional<std::vector<double>> success_reference;
  bool early_stop = false;    // stop a run as soon as is_success holds
  bool record_traces = true;  // drop per-run traces when false
  std::size_t threads = 0;    // 0 = hardware concurrency
};

struct ExperimentStats {
  std::optional<double> success_rate;  // percentage; absent without a reference
  double best_f = 0.0;
  double mean_f = 0.0;
  double std_f = 0.0;  // population standard deviation
  std::size_t n_runs = 0;
};

// True iff sum_i (x_best_i - x_star_i)^2 <= (ub - lb) * 1e-4 (non-strict).
bool is_success(const std::vector<double>& x_best, const std::vector<double>& x_star,
                double lb, double ub);

// 100 * successes / total. Throws on an empty list.
double success_rate(const std::vector<bool>& outcomes);

// Componentwise uniform draw from a fully bounded box.
std::vector<double> random_init(const SearchSpace& space, RandomStream& rng);

// Runs n_runs independent runs. Run j draws its initial point and directions
// from a stream seeded with derive_seed(params.seed, j), so results do not
// depend on scheduling; runs may execute on several threads. Statistics are
// aggregated over the per-run best values in run order.
std::pair<ExperimentStats, std::vector<RunResult>> run_experiment(const ExperimentConfig& config);

}  // namespace bas

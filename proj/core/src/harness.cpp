#include "bas/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "bas/engine.hpp"

namespace bas {

std::string to_string(const ProblemId& id) {
  return std::visit([](auto v) { return to_string(v); }, id);
}

std::optional<ProblemId> parse_problem_id(std::string_view name) {
  if (auto b = parse_benchmark_id(name)) return ProblemId{*b};
  if (auto e = parse_engineering_id(name)) return ProblemId{*e};
  return std::nullopt;
}

bool is_success(const std::vector<double>& x_best, const std::vector<double>& x_star,
                double lb, double ub) {
  if (x_best.size() != x_star.size()) {
    throw std::invalid_argument("is_success: dimension mismatch");
  }
  if (!(ub > lb)) throw std::invalid_argument("is_success: requires ub > lb");
  double dist_sq = 0.0;
  for (std::size_t i = 0; i < x_best.size(); ++i) {
    const double diff = x_best[i] - x_star[i];
    dist_sq += diff * diff;
  }
  return dist_sq <= (ub - lb) * 1e-4;
}

double success_rate(const std::vector<bool>& outcomes) {
  if (outcomes.empty()) throw std::invalid_argument("success_rate: empty outcome list");
  const auto successes = std::count(outcomes.begin(), outcomes.end(), true);
  return 100.0 * static_cast<double>(successes) / static_cast<double>(outcomes.size());
}

std::vector<double> random_init(const SearchSpace& space, RandomStream& rng) {
  if (!space.bounded()) {
    throw std::invalid_argument("random_init: uniform initialization needs a bounded space");
  }
  std::vector<double> x(space.dimension());
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = rng.uniform(space.lower()[i], space.upper()[i]);
  }
  return x;
}

namespace {

struct ResolvedProblem {
  Objective objective;
  SearchSpace space;
  std::optional<std::vector<double>> reference;  // success predicate target
  double lb = 0.0;                               // valid only with a reference
  double ub = 0.0;
};

ResolvedProblem resolve(const ExperimentConfig& config) {
  if (const auto* id = std::get_if<BenchmarkId>(&config.problem)) {
    auto spec = benchmark(*id);
    auto reference = config.success_reference ? *config.success_reference : spec.x_star;
    if (reference.size() != spec.dimension) {
      throw std::invalid_argument("run_experiment: success reference dimension mismatch");
    }
    return ResolvedProblem{std::move(spec.objective), std::move(spec.space),
                           std::move(reference), spec.lb, spec.ub};
  }
  const auto id = std::get<EngineeringId>(config.problem);
  auto problem = engineering_problem(id);
  if (config.rho) problem.rho = *config.rho;
  if (config.success_reference) {
    throw std::invalid_argument(
        "run_experiment: success references require identical scalar bounds; "
        "engineering problems have none");
  }
  auto space = problem.space;
  return ResolvedProblem{penalized_objective(problem), std::move(space), std::nullopt, 0.0, 0.0};
}

}  // namespace

std::pair<ExperimentStats, std::vector<RunResult>> run_experiment(const ExperimentConfig& config) {
  if (config.n_runs == 0) throw std::invalid_argument("run_experiment: n_runs must be positive");
  validate(config.params);
  const ResolvedProblem problem = resolve(config);

  StopPredicate stop;
  if (config.early_stop && problem.reference) {
    const auto& reference = *problem.reference;
    const double lb = problem.lb;
    const double ub = problem.ub;
    stop = [&reference, lb, ub](const std::vector<double>& x_best, double, std::uint64_t) {
      return is_success(x_best, reference, lb, ub);
    };
  }

  std::vector<RunResult> results(config.n_runs);
  std::atomic<std::size_t> next_run{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;

  auto worker = [&] {
    for (;;) {
      const std::size_t j = next_run.fetch_add(1);
      if (j >= config.n_runs) return;
      try {
        BasParams params = config.params;
        params.seed = derive_seed(config.params.seed, j);
        RandomStream rng(params.seed);
        const auto x0 = random_init(problem.space, rng);
        RunResult result = run(problem.objective, problem.space, x0, params, rng, stop);
        if (!config.record_traces) {
          result.trace.clear();
          result.trace.shrink_to_fit();
        }
        results[j] = std::move(result);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  std::size_t n_threads = config.threads;
  if (n_threads == 0) {
    n_threads = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  }
  n_threads = std::min(n_threads, config.n_runs);

  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  ExperimentStats stats;
  stats.n_runs = config.n_runs;
  stats.best_f = results[0].f_best;
  double sum = 0.0;
  for (const auto& r : results) {
    stats.best_f = std::min(stats.best_f, r.f_best);
    sum += r.f_best;
  }
  stats.mean_f = sum / static_cast<double>(config.n_runs);
  double sq_dev = 0.0;
  for (const auto& r : results) {
    const double d = r.f_best - stats.mean_f;
    sq_dev += d * d;
  }
  stats.std_f = std::sqrt(sq_dev / static_cast<double>(config.n_runs));

  if (problem.reference) {
    std::vector<bool> outcomes;
    outcomes.reserve(config.n_runs);
    for (const auto& r : results) {
      outcomes.push_back(is_success(r.x_best, *problem.reference, problem.lb, problem.ub));
    }
    stats.success_rate = success_rate(outcomes);
  }
  return {stats, std::move(results)};
}

}  // namespace bas

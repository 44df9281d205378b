#include "bas/engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bas {

namespace {

// Three-valued sign; sgn(0) = 0 so tied antennae leave the position in place.
double sign(double v) {
  if (v > 0.0) return 1.0;
  if (v < 0.0) return -1.0;
  return 0.0;
}

}  // namespace

void validate(const BasParams& params) {
  if (!(params.alpha > 0.0 && params.alpha < 1.0)) {
    throw std::invalid_argument("BasParams: alpha must lie in (0, 1)");
  }
  if (!(params.c > 0.0)) throw std::invalid_argument("BasParams: c must be positive");
  if (!(params.delta0 > 0.0)) throw std::invalid_argument("BasParams: delta0 must be positive");
  if (!(params.d_init > 0.0)) throw std::invalid_argument("BasParams: d_init must be positive");
  if (!(params.d0 > 0.0)) throw std::invalid_argument("BasParams: d0 must be positive");
  if (!(params.step_floor >= 0.0)) {
    throw std::invalid_argument("BasParams: step_floor must be non-negative");
  }
}

std::vector<double> sample_direction(std::size_t n, RandomStream& rng) {
  if (n == 0) throw std::invalid_argument("sample_direction: dimension must be at least 1");
  std::vector<double> b(n);
  double norm = 0.0;
  do {
    norm = 0.0;
    for (double& bi : b) {
      bi = rng.uniform_symmetric();
      norm += bi * bi;
    }
    norm = std::sqrt(norm);
  } while (norm < 1e-12);
  for (double& bi : b) bi /= norm;
  return b;
}

std::pair<std::vector<double>, std::vector<double>> antennae_points(
    const std::vector<double>& x, double d, const std::vector<double>& b) {
  if (x.size() != b.size()) throw std::invalid_argument("antennae_points: dimension mismatch");
  if (d < 0.0) throw std::invalid_argument("antennae_points: antenna length must be non-negative");
  std::vector<double> left(x.size());
  std::vector<double> right(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double offset = d * b[i];
    left[i] = x[i] + offset;
    right[i] = x[i] - offset;
  }
  return {std::move(left), std::move(right)};
}

std::pair<double, double> update_schedules(double delta, double d, const BasParams& params) {
  return {params.alpha * delta + params.step_floor, params.c * d + params.d0};
}

BeetleState bas_step_along(const BeetleState& state, const Objective& objective,
                           const SearchSpace& space, const BasParams& params,
                           const std::vector<double>& direction) {
  if (state.x.size() != space.dimension() || direction.size() != space.dimension()) {
    throw std::invalid_argument("bas_step: dimension mismatch");
  }
  const auto [left, right] = antennae_points(state.x, state.d, direction);
  const double f_left = eval_checked(objective, left);
  const double f_right = eval_checked(objective, right);
  const double s = sign(f_left - f_right);

  BeetleState next;
  next.x.resize(state.x.size());
  for (std::size_t i = 0; i < state.x.size(); ++i) {
    next.x[i] = state.x[i] - state.delta * direction[i] * s;
  }
  next.x = project(next.x, space);
  const auto [delta_next, d_next] = update_schedules(state.delta, state.d, params);
  next.delta = delta_next;
  next.d = d_next;
  next.k = state.k + 1;
  return next;
}

BeetleState bas_step(const BeetleState& state, const Objective& objective,
                     const SearchSpace& space, const BasParams& params, RandomStream& rng) {
  return bas_step_along(state, objective, space, params,
                        sample_direction(space.dimension(), rng));
}

RunResult run(const Objective& objective, const SearchSpace& space,
              const std::vector<double>& x0, const BasParams& params, RandomStream& rng,
              const StopPredicate& stop) {
  validate(params);
  if (objective.dimension != space.dimension()) {
    throw std::invalid_argument("run: objective and space dimensions differ");
  }
  if (!space.contains(x0)) {
    throw std::invalid_argument("run: x0 lies outside the search space");
  }

  RunResult result;
  result.seed = params.seed;
  result.x_best = x0;
  result.f_best = eval_checked(objective, x0);
  result.evaluations = 1;
  result.trace.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(params.k_max, 1u << 20)) + 1);
  result.trace.push_back(result.f_best);

  BeetleState state{x0, params.delta0, params.d_init, 0};
  for (std::uint64_t k = 0; k < params.k_max; ++k) {
    state = bas_step(state, objective, space, params, rng);
    const double f_centroid = eval_checked(objective, state.x);
    result.evaluations += 3;
    if (f_centroid < result.f_best) {
      result.f_best = f_centroid;
      result.x_best = state.x;
    }
    result.trace.push_back(result.f_best);
    if (stop && stop(result.x_best, result.f_best, state.k)) break;
  }
  return result;
}

RunResult run(const Objective& objective, const SearchSpace& space,
              const std::vector<double>& x0, const BasParams& params,
              const StopPredicate& stop) {
  RandomStream rng(params.seed);
  return run(objective, space, x0, params, rng, stop);
}

}  // namespace bas

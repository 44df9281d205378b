#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "bas/objective.hpp"
#include "bas/params.hpp"
#include "bas/rng.hpp"
#include "bas/search_space.hpp"

namespace bas {

// Random direction on the unit sphere: components i.i.d. uniform on [-1, 1],
// then normalized. Draws with two-norm below 1e-12 are resampled.
std::vector<double> sample_direction(std::size_t n, RandomStream& rng);

// Antenna probe points (x + d*b, x - d*b). Throws on dimension mismatch or
// negative d.
std::pair<std::vector<double>, std::vector<double>> antennae_points(
    const std::vector<double>& x, double d, const std::vector<double>& b);

// One decay step: (alpha*delta + step_floor, c*d + d0).
std::pair<double, double> update_schedules(double delta, double d, const BasParams& params);

// One iteration along a caller-supplied direction: probe both antennae (two
// objective evaluations), move the centroid delta along -b*sgn(f_l - f_r),
// project onto the box, and advance the schedules. A tie between the antennae
// leaves the position at project(x).
BeetleState bas_step_along(const BeetleState& state, const Objective& objective,
                           const SearchSpace& space, const BasParams& params,
                           const std::vector<double>& direction);

// One iteration with a freshly sampled direction.
BeetleState bas_step(const BeetleState& state, const Objective& objective,
                     const SearchSpace& space, const BasParams& params, RandomStream& rng);

// Called after every iteration with the incumbent; returning true stops the
// run early.
using StopPredicate =
    std::function<bool(const std::vector<double>& x_best, double f_best, std::uint64_t iteration)>;

// Full minimization loop from x0: initializes the best to f(x0), then runs
// bas_step until k_max iterations or the stop predicate fires. Only centroid
// iterates update the best, and only on strict improvement. Each iteration
// consumes three objective evaluations (two antennae plus the new centroid),
// so evaluations == 1 + 3*(iterations run).
RunResult run(const Objective& objective, const SearchSpace& space,
              const std::vector<double>& x0, const BasParams& params,
              const StopPredicate& stop = {});

// As above, but drawing directions from an existing stream. result.seed is
// taken from params.seed; callers keep it in sync with the stream they pass.
RunResult run(const Objective& objective, const SearchSpace& space,
              const std::vector<double>& x0, const BasParams& params, RandomStream& rng,
              const StopPredicate& stop = {});

}  // namespace bas

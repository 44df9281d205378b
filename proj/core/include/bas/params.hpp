#pragma once

#include <cstdint>
#include <vector>

namespace bas {

// Scalar hyperparameters of the search.
//
// The step size decays as delta' = alpha*delta + step_floor and the antenna
// length as d' = c*d + d0, so their asymptotic values are
// step_floor/(1-alpha) and d0/(1-c).
struct BasParams {
  double alpha = 0.95;        // step-size decay rate, in (0, 1)
  double c = 0.95;            // antenna-length decay rate, > 0
  double delta0 = 10.0;       // initial step size, > 0
  double d_init = 10.0;       // initial antenna length, > 0
  double d0 = 0.001;          // antenna-length floor constant, > 0
  double step_floor = 0.001;  // step-size floor constant, >= 0
  std::uint64_t k_max = 100000;
  std::uint64_t seed = 0;
};

// Throws std::invalid_argument when a parameter is out of range.
void validate(const BasParams& params);

// The iterate: centroid position, current step size and antenna length, and
// the iteration counter.
struct BeetleState {
  std::vector<double> x;
  double delta = 0.0;
  double d = 0.0;
  std::uint64_t k = 0;
};

// Outcome of a single run. trace[i] is the best value after i iterations
// (trace[0] is f(x0)); the sequence is non-increasing and its last entry
// equals f_best. The harness may drop traces, leaving the vector empty.
struct RunResult {
  std::vector<double> x_best;
  double f_best = 0.0;
  std::uint64_t evaluations = 0;
  std::vector<double> trace;
  std::uint64_t seed = 0;
};

}  // namespace bas

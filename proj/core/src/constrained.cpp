#include "bas/constrained.hpp"

#include <cmath>
#include <stdexcept>

namespace bas {

namespace {

// Spring design: x = (W, D, L) = wire diameter, mean coil diameter, coils.
double spring_weight(const std::vector<double>& x) {
  const double w = x[0], d = x[1], l = x[2];
  return (l + 2.0) * w * w * d;
}

std::vector<Objective> spring_constraints() {
  return {
      Objective{3, [](const std::vector<double>& x) {
                  const double w = x[0], d = x[1], l = x[2];
                  return 1.0 - d * d * d * l / (71785.0 * w * w * w * w);
                }},
      Objective{3, [](const std::vector<double>& x) {
                  const double w = x[0], d = x[1], l = x[2];
                  return 1.0 - 140.45 * w / (d * d * l);
                }},
      Objective{3, [](const std::vector<double>& x) {
                  const double w = x[0], d = x[1];
                  return 2.0 * (w + d) / 3.0 - 1.0;
                }},
      Objective{3, [](const std::vector<double>& x) {
                  const double w = x[0], d = x[1];
                  return d * (4.0 * d - w) / (w * w * w * (12566.0 * d - w)) +
                         1.0 / (5108.0 * w * w) - 1.0;
                }},
  };
}

// Speed reducer: x = (B, H, Z, L1, L2, D1, D2).
double reducer_cost(const std::vector<double>& x) {
  const double b = x[0], h = x[1], z = x[2], l1 = x[3], l2 = x[4], d1 = x[5], d2 = x[6];
  return 0.7854 * b * h * h * (3.3333 * z * z + 14.9334 * z - 43.0934) -
         1.508 * b * (d1 * d1 + d2 * d2) + 7.4777 * (d1 * d1 * d1 + d2 * d2 * d2) +
         0.7854 * (l1 * d1 * d1 + l2 * d2 * d2);
}

std::vector<Objective> reducer_constraints() {
  return {
      Objective{7, [](const std::vector<double>& x) {
                  return 27.0 / (x[0] * x[1] * x[1] * x[2]) - 1.0;
                }},
      Objective{7, [](const std::vector<double>& x) {
                  return 397.5 / (x[0] * x[1] * x[1] * x[2] * x[2]) - 1.0;
                }},
      Objective{7, [](const std::vector<double>& x) {
                  const double l1 = x[3], d1 = x[5];
                  return 1.93 * l1 * l1 * l1 / (x[1] * x[2] * d1 * d1 * d1 * d1) - 1.0;
                }},
      Objective{7, [](const std::vector<double>& x) {
                  const double l2 = x[4], d2 = x[6];
                  return 1.93 * l2 * l2 * l2 / (x[1] * x[2] * d2 * d2 * d2 * d2) - 1.0;
                }},
      Objective{7, [](const std::vector<double>& x) {
                  const double t = 745.0 * x[3] / (x[1] * x[2]);
                  return std::sqrt(t * t + 16.9e6) / (110.0 * x[5] * x[5] * x[5]) - 1.0;
                }},
      Objective{7, [](const std::vector<double>& x) {
                  const double t = 745.0 * x[4] / (x[1] * x[2]);
                  return std::sqrt(t * t + 157.5e6) / (85.0 * x[6] * x[6] * x[6]) - 1.0;
                }},
      Objective{7, [](const std::vector<double>& x) { return x[1] * x[2] / 40.0 - 1.0; }},
      Objective{7, [](const std::vector<double>& x) { return 5.0 * x[1] / x[0] - 1.0; }},
      Objective{7, [](const std::vector<double>& x) { return x[0] / (12.0 * x[1]) - 1.0; }},
      Objective{7, [](const std::vector<double>& x) {
                  return (1.5 * x[5] + 1.9) / x[3] - 1.0;
                }},
      Objective{7, [](const std::vector<double>& x) {
                  return (1.1 * x[6] + 1.9) / x[4] - 1.0;
                }},
  };
}

// Three-bar truss: x = (x1, x2) = cross-section areas.
double truss_weight(const std::vector<double>& x) {
  return 100.0 * (2.0 * std::sqrt(2.0) * x[0] + x[1]);
}

std::vector<Objective> truss_constraints() {
  return {
      Objective{2, [](const std::vector<double>& x) {
                  const double r2 = std::sqrt(2.0);
                  return 2.0 * (r2 * x[0] + x[1]) / (r2 * x[0] * x[0] + 2.0 * x[0] * x[1]) - 2.0;
                }},
      Objective{2, [](const std::vector<double>& x) {
                  const double r2 = std::sqrt(2.0);
                  return 2.0 * x[1] / (r2 * x[0] * x[0] + 2.0 * x[0] * x[1]) - 2.0;
                }},
      Objective{2, [](const std::vector<double>& x) {
                  return 2.0 / (x[0] + std::sqrt(2.0) * x[1]) - 2.0;
                }},
  };
}

}  // namespace

Objective penalized_objective(const ConstrainedProblem& problem) {
  if (!(problem.rho > 0.0)) {
    throw std::invalid_argument("penalized_objective: rho must be positive");
  }
  for (const auto& g : problem.constraints) {
    if (g.dimension != problem.objective.dimension) {
      throw std::invalid_argument("penalized_objective: constraint dimension mismatch");
    }
  }
  return Objective{problem.objective.dimension,
                   [p = problem](const std::vector<double>& x) {
                     double value = p.objective.eval(x);
                     for (const auto& g : p.constraints) {
                       const double gi = g.eval(x);
                       if (gi > 0.0) value += p.rho * gi;
                     }
                     return value;
                   }};
}

FeasibilityReport feasibility(const ConstrainedProblem& problem, const std::vector<double>& x) {
  if (x.size() != problem.objective.dimension) {
    throw std::invalid_argument("feasibility: dimension mismatch");
  }
  FeasibilityReport report;
  report.constraint_values.reserve(problem.constraints.size());
  for (const auto& g : problem.constraints) {
    const double gi = g.eval(x);
    report.constraint_values.push_back(gi);
    if (gi > report.max_violation) report.max_violation = gi;
  }
  report.in_bounds = problem.space.contains(x);
  return report;
}

std::vector<EngineeringId> all_engineering_problems() {
  return {EngineeringId::spring, EngineeringId::speed_reducer, EngineeringId::three_bar_truss};
}

ConstrainedProblem engineering_problem(EngineeringId id) {
  switch (id) {
    case EngineeringId::spring:
      return ConstrainedProblem{
          "spring",
          Objective{3, spring_weight},
          spring_constraints(),
          SearchSpace({0.05, 0.25, 2.0}, {2.0, 1.3, 15.0}),
          1e5,
      };
    case EngineeringId::speed_reducer:
      return ConstrainedProblem{
          "speed_reducer",
          Objective{7, reducer_cost},
          reducer_constraints(),
          SearchSpace({2.6, 0.7, 17.0, 7.3, 7.8, 2.9, 5.0}, {3.6, 0.8, 28.0, 8.3, 8.3, 3.9, 5.5}),
          1e6,
      };
    case EngineeringId::three_bar_truss:
      // The stated bounds are the open box (0,1)^2; a tiny positive floor
      // keeps the projection domain closed without moving the optimum.
      return ConstrainedProblem{
          "three_bar_truss",
          Objective{2, truss_weight},
          truss_constraints(),
          SearchSpace({1e-9, 1e-9}, {1.0, 1.0}),
          1e5,
      };
  }
  throw std::invalid_argument("unknown engineering problem id");
}

std::string to_string(EngineeringId id) {
  switch (id) {
    case EngineeringId::spring: return "spring";
    case EngineeringId::speed_reducer: return "speed_reducer";
    case EngineeringId::three_bar_truss: return "three_bar_truss";
  }
  throw std::invalid_argument("unknown engineering problem id");
}

std::optional<EngineeringId> parse_engineering_id(std::string_view name) {
  if (name == "spring") return EngineeringId::spring;
  if (name == "speed_reducer") return EngineeringId::speed_reducer;
  if (name == "three_bar_truss") return EngineeringId::three_bar_truss;
  return std::nullopt;
}

// alpha, c and d0 follow the published settings; the remaining knobs are
// unstated there and are tuned so the reference results reproduce.
BasParams default_engineering_params(EngineeringId id) {
  BasParams params;
  params.alpha = 0.8;
  params.c = 0.8;
  params.delta0 = 10.0;
  params.step_floor = 0.001;
  params.seed = 0;
  switch (id) {
    case EngineeringId::spring:
      params.d0 = 0.01;
      params.d_init = 1.0;
      params.k_max = 1000;
      break;
    case EngineeringId::speed_reducer:
      params.d0 = 0.001;
      params.d_init = 28.0;
      params.k_max = 10000;
      break;
    case EngineeringId::three_bar_truss:
      params.d0 = 0.01;
      params.d_init = 0.5;
      params.step_floor = 1e-4;
      params.k_max = 10000;
      break;
  }
  return params;
}

}  // namespace bas

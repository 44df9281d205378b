#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bas/objective.hpp"
#include "bas/params.hpp"
#include "bas/search_space.hpp"

namespace bas {

// Inequality-constrained problem: minimize objective over the box subject to
// g_i(x) <= 0 for every constraint, with penalty weight rho.
struct ConstrainedProblem {
  std::string name;
  Objective objective;
  std::vector<Objective> constraints;
  SearchSpace space;
  double rho = 0.0;
};

struct FeasibilityReport {
  std::vector<double> constraint_values;  // g_i(x) for every i
  double max_violation = 0.0;             // max_i max(0, g_i(x))
  bool in_bounds = false;
};

// F(x) = f(x) + rho * sum_i max(0, g_i(x)). Equals f exactly wherever every
// constraint holds. The returned objective owns a copy of the problem.
Objective penalized_objective(const ConstrainedProblem& problem);

FeasibilityReport feasibility(const ConstrainedProblem& problem, const std::vector<double>& x);

// The three engineering design problems.
enum class EngineeringId { spring, speed_reducer, three_bar_truss };

std::vector<EngineeringId> all_engineering_problems();

ConstrainedProblem engineering_problem(EngineeringId id);

// Stable ids "spring", "speed_reducer", "three_bar_truss".
std::string to_string(EngineeringId id);
std::optional<EngineeringId> parse_engineering_id(std::string_view name);

BasParams default_engineering_params(EngineeringId id);

}  // namespace bas

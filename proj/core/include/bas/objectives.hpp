#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bas/objective.hpp"
#include "bas/params.hpp"
#include "bas/search_space.hpp"

namespace bas {

// The seven benchmark test functions.
enum class BenchmarkId { f1, f2, f3, f4, f5, f6, f7 };

struct BenchmarkSpec {
  BenchmarkId id;
  std::size_t dimension;
  Objective objective;
  SearchSpace space;
  std::vector<double> x_star;  // tabulated global minimizer
  double lb;                   // identical scalar lower bound
  double ub;                   // identical scalar upper bound
};

std::vector<BenchmarkId> all_benchmarks();

BenchmarkSpec benchmark(BenchmarkId id);

double eval_benchmark(BenchmarkId id, const std::vector<double>& x);

// Stable lowercase ids "f1".."f7".
std::string to_string(BenchmarkId id);
std::optional<BenchmarkId> parse_benchmark_id(std::string_view name);

// Per-function search settings: tuned decay rates plus the shared protocol
// (delta0 = 10, d_init = upper bound, k_max = 1e5).
BasParams default_benchmark_params(BenchmarkId id);

}  // namespace bas

#include "bas/objectives.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bas {

namespace {

double norm2(const std::vector<double>& x) {
  double s = 0.0;
  for (double xi : x) s += xi * xi;
  return std::sqrt(s);
}

// f2: sum of absolute values plus their product.
double abs_sum_prod(const std::vector<double>& x) {
  double sum = 0.0;
  double prod = 1.0;
  for (double xi : x) {
    const double a = std::abs(xi);
    sum += a;
    prod *= a;
  }
  return sum + prod;
}

// f3: Rosenbrock.
double rosenbrock(const std::vector<double>& x) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double a = x[i + 1] - x[i] * x[i];
    const double b = x[i] - 1.0;
    s += 100.0 * a * a + b * b;
  }
  return s;
}

// f4: Ackley.
double ackley(const std::vector<double>& x) {
  const double n = static_cast<double>(x.size());
  double sum_sq = 0.0;
  double sum_cos = 0.0;
  for (double xi : x) {
    sum_sq += xi * xi;
    sum_cos += std::cos(2.0 * std::numbers::pi * xi);
  }
  return -20.0 * std::exp(-0.2 * std::sqrt(sum_sq / n)) - std::exp(sum_cos / n) + 20.0 +
         std::numbers::e;
}

// f5 as tabulated: the product term is cos(x_i)/sqrt(i), with 1-based i.
double griewank_variant(const std::vector<double>& x) {
  double sum_sq = 0.0;
  double prod = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum_sq += x[i] * x[i];
    prod *= std::cos(x[i]) / std::sqrt(static_cast<double>(i + 1));
  }
  return 1.0 + sum_sq / 4000.0 - prod;
}

// f6: l1 norm damped by exp(-sum sin(x_i^2)).
double abs_sum_sine_exp(const std::vector<double>& x) {
  double sum_abs = 0.0;
  double sum_sin = 0.0;
  for (double xi : x) {
    sum_abs += std::abs(xi);
    sum_sin += std::sin(xi * xi);
  }
  return sum_abs * std::exp(-sum_sin);
}

// f7: Zakharov.
double zakharov(const std::vector<double>& x) {
  double sum_sq = 0.0;
  double weighted = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum_sq += x[i] * x[i];
    weighted += static_cast<double>(i + 1) * x[i];
  }
  const double half = 0.5 * weighted;
  return sum_sq + half * half + half * half * half * half;
}

struct BenchmarkRow {
  BenchmarkId id;
  const char* name;
  std::size_t dimension;
  double lb;
  double ub;
  double x_star_value;  // every component of x* equals this
  double (*eval)(const std::vector<double>&);
  double alpha;
  double d0;
  double c;
};

constexpr double kTwoPi = 2.0 * std::numbers::pi;

const BenchmarkRow kRows[] = {
    {BenchmarkId::f1, "f1", 30, -10.0, 10.0, 0.0, norm2, 0.94, 0.001, 0.94},
    {BenchmarkId::f2, "f2", 20, -10.0, 10.0, 0.0, abs_sum_prod, 0.95, 0.001, 0.94},
    {BenchmarkId::f3, "f3", 10, -10.0, 10.0, 1.0, rosenbrock, 0.70, 0.001, 0.70},
    {BenchmarkId::f4, "f4", 10, -10.0, 10.0, 0.0, ackley, 0.97, 0.01, 0.97},
    {BenchmarkId::f5, "f5", 10, -10.0, 10.0, 0.0, griewank_variant, 0.94, 0.001, 0.94},
    {BenchmarkId::f6, "f6", 5, -kTwoPi, kTwoPi, 0.0, abs_sum_sine_exp, 0.96, 0.1, 0.96},
    {BenchmarkId::f7, "f7", 20, -10.0, 10.0, 0.0, zakharov, 0.80, 0.01, 0.80},
};

const BenchmarkRow& row(BenchmarkId id) {
  for (const auto& r : kRows) {
    if (r.id == id) return r;
  }
  throw std::invalid_argument("unknown benchmark id");
}

}  // namespace

std::vector<BenchmarkId> all_benchmarks() {
  std::vector<BenchmarkId> ids;
  for (const auto& r : kRows) ids.push_back(r.id);
  return ids;
}

BenchmarkSpec benchmark(BenchmarkId id) {
  const auto& r = row(id);
  return BenchmarkSpec{
      r.id,
      r.dimension,
      Objective{r.dimension, r.eval},
      SearchSpace::cube(r.dimension, r.lb, r.ub),
      std::vector<double>(r.dimension, r.x_star_value),
      r.lb,
      r.ub,
  };
}

double eval_benchmark(BenchmarkId id, const std::vector<double>& x) {
  const auto& r = row(id);
  if (x.size() != r.dimension) {
    throw std::invalid_argument("eval_benchmark: dimension mismatch");
  }
  return r.eval(x);
}

std::string to_string(BenchmarkId id) { return row(id).name; }

std::optional<BenchmarkId> parse_benchmark_id(std::string_view name) {
  for (const auto& r : kRows) {
    if (name == r.name) return r.id;
  }
  return std::nullopt;
}

BasParams default_benchmark_params(BenchmarkId id) {
  const auto& r = row(id);
  BasParams params;
  params.alpha = r.alpha;
  params.c = r.c;
  params.d0 = r.d0;
  params.delta0 = 10.0;
  params.d_init = r.ub;
  params.step_floor = 0.001;
  params.k_max = 100000;
  params.seed = 0;
  return params;
}

}  // namespace bas

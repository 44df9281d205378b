#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bas/objectives.hpp"
#include "bas/rng.hpp"

using namespace bas;

TEST_CASE("benchmark dimensions and bounds") {
  CHECK(benchmark(BenchmarkId::f1).dimension == 30);
  CHECK(benchmark(BenchmarkId::f2).dimension == 20);
  CHECK(benchmark(BenchmarkId::f3).dimension == 10);
  CHECK(benchmark(BenchmarkId::f4).dimension == 10);
  CHECK(benchmark(BenchmarkId::f5).dimension == 10);
  CHECK(benchmark(BenchmarkId::f6).dimension == 5);
  CHECK(benchmark(BenchmarkId::f7).dimension == 20);

  for (auto id : all_benchmarks()) {
    const auto spec = benchmark(id);
    if (id == BenchmarkId::f6) {
      CHECK(spec.lb == -2.0 * std::numbers::pi);
      CHECK(spec.ub == 2.0 * std::numbers::pi);
    } else {
      CHECK(spec.lb == -10.0);
      CHECK(spec.ub == 10.0);
    }
    CHECK(spec.space.dimension() == spec.dimension);
    CHECK(spec.objective.dimension == spec.dimension);
    CHECK(spec.space.contains(spec.x_star));
  }
}

TEST_CASE("benchmark minimizers") {
  CHECK(benchmark(BenchmarkId::f3).x_star == std::vector<double>(10, 1.0));
  CHECK(benchmark(BenchmarkId::f1).x_star == std::vector<double>(30, 0.0));
}

TEST_CASE("benchmark values at the tabulated minimizer") {
  // f5 is excluded: its printed formula does not vanish at the origin.
  for (auto id : all_benchmarks()) {
    if (id == BenchmarkId::f5) continue;
    const auto spec = benchmark(id);
    CHECK(std::abs(spec.objective.eval(spec.x_star)) <= 1e-12);
  }
}

TEST_CASE("f1 spot values") {
  std::vector<double> x(30, 0.0);
  CHECK(eval_benchmark(BenchmarkId::f1, x) == 0.0);
  x[0] = 1.0;
  CHECK(eval_benchmark(BenchmarkId::f1, x) == 1.0);
}

TEST_CASE("f5 at the origin equals 1 - 1/sqrt(10!)") {
  const double expected = 1.0 - 1.0 / std::sqrt(3628800.0);  // 10! = 3628800
  const double value = eval_benchmark(BenchmarkId::f5, std::vector<double>(10, 0.0));
  CHECK(std::abs(value - expected) <= 1e-12);
}

TEST_CASE("f4 vanishes at the origin by cancellation") {
  CHECK(std::abs(eval_benchmark(BenchmarkId::f4, std::vector<double>(10, 0.0))) <= 1e-12);
}

TEST_CASE("f1 and f2 are even") {
  RandomStream rng(31);
  for (int i = 0; i < 200; ++i) {
    std::vector<double> x(30), neg(30);
    for (std::size_t j = 0; j < 30; ++j) {
      x[j] = rng.uniform(-10.0, 10.0);
      neg[j] = -x[j];
    }
    CHECK(eval_benchmark(BenchmarkId::f1, x) == eval_benchmark(BenchmarkId::f1, neg));
    std::vector<double> y(x.begin(), x.begin() + 20), negy(neg.begin(), neg.begin() + 20);
    CHECK(eval_benchmark(BenchmarkId::f2, y) == eval_benchmark(BenchmarkId::f2, negy));
  }
}

TEST_CASE("benchmarks are finite and deterministic on their boxes") {
  RandomStream rng(37);
  for (auto id : all_benchmarks()) {
    const auto spec = benchmark(id);
    for (int i = 0; i < 100; ++i) {
      std::vector<double> x(spec.dimension);
      for (auto& v : x) v = rng.uniform(spec.lb, spec.ub);
      const double a = spec.objective.eval(x);
      const double b = spec.objective.eval(x);
      CHECK(std::isfinite(a));
      CHECK(a == b);
    }
  }
}

TEST_CASE("eval_benchmark rejects dimension mismatch") {
  CHECK_THROWS_AS(eval_benchmark(BenchmarkId::f1, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("benchmark id strings round-trip") {
  for (auto id : all_benchmarks()) {
    const auto name = to_string(id);
    REQUIRE(parse_benchmark_id(name).has_value());
    CHECK(*parse_benchmark_id(name) == id);
  }
  CHECK(!parse_benchmark_id("f8").has_value());
  CHECK(!parse_benchmark_id("F1").has_value());
}

TEST_CASE("default benchmark parameters follow the protocol") {
  for (auto id : all_benchmarks()) {
    const auto p = default_benchmark_params(id);
    CHECK(p.delta0 == 10.0);
    CHECK(p.k_max == 100000);
    CHECK(p.d_init == benchmark(id).ub);
    CHECK(p.step_floor == 0.001);
  }
  const auto p1 = default_benchmark_params(BenchmarkId::f1);
  CHECK(p1.alpha == 0.94);
  CHECK(p1.c == 0.94);
  CHECK(p1.d0 == 0.001);
  const auto p4 = default_benchmark_params(BenchmarkId::f4);
  CHECK(p4.alpha == 0.97);
  CHECK(p4.d0 == 0.01);
  const auto p3 = default_benchmark_params(BenchmarkId::f3);
  CHECK(p3.alpha == 0.7);
  CHECK(p3.c == 0.7);
}

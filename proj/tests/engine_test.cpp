#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "bas/engine.hpp"

using namespace bas;

namespace {

Objective counting_objective(std::size_t dim, std::size_t& calls) {
  return Objective{dim, [&calls](const std::vector<double>&) {
                     ++calls;
                     return 0.0;
                   }};
}

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

const Objective sphere{2, [](const std::vector<double>& x) {
                         return x[0] * x[0] + x[1] * x[1];
                       }};

}  // namespace

TEST_CASE("sample_direction produces unit vectors") {
  RandomStream rng(7);
  for (std::size_t n : {1, 2, 3, 10, 30}) {
    for (int i = 0; i < 200; ++i) {
      const auto b = sample_direction(n, rng);
      REQUIRE(b.size() == n);
      CHECK(std::abs(norm2(b) - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("sample_direction in one dimension is a sign") {
  RandomStream rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto b = sample_direction(1, rng);
    CHECK((b[0] == 1.0 || b[0] == -1.0));
  }
}

TEST_CASE("sample_direction components have zero mean") {
  // Monte-Carlo oracle: the distribution is symmetric, so every component
  // averages to 0; 1e5 draws put the sample mean well inside +/-0.02.
  const std::size_t n = 5;
  const int draws = 100000;
  RandomStream rng(11);
  std::vector<double> mean(n, 0.0);
  for (int i = 0; i < draws; ++i) {
    const auto b = sample_direction(n, rng);
    for (std::size_t j = 0; j < n; ++j) mean[j] += b[j];
  }
  for (std::size_t j = 0; j < n; ++j) {
    CHECK(std::abs(mean[j] / draws) <= 0.02);
  }
}

TEST_CASE("sample_direction rejects n = 0") {
  RandomStream rng(1);
  CHECK_THROWS_AS(sample_direction(0, rng), std::invalid_argument);
}

TEST_CASE("antennae_points basic placements") {
  const std::vector<double> zero{0.0, 0.0, 0.0};
  const std::vector<double> e1{1.0, 0.0, 0.0};
  auto [l, r] = antennae_points(zero, 1.0, e1);
  CHECK(l == e1);
  CHECK(r == std::vector<double>{-1.0, 0.0, 0.0});

  const std::vector<double> x{1.0, 1.0};
  auto [l2, r2] = antennae_points(x, 2.0, {1.0, 0.0});
  CHECK(l2 == std::vector<double>{3.0, 1.0});
  CHECK(r2 == std::vector<double>{-1.0, 1.0});
}

TEST_CASE("antennae_points with zero length degenerate to the centroid") {
  const std::vector<double> x{0.3, -0.7};
  auto [l, r] = antennae_points(x, 0.0, {0.6, 0.8});
  CHECK(l == x);
  CHECK(r == x);
}

TEST_CASE("antennae_points are symmetric about the centroid") {
  RandomStream rng(5);
  for (int i = 0; i < 100; ++i) {
    std::vector<double> x(4), b(4);
    for (auto& v : x) v = rng.uniform(-10.0, 10.0);
    b = sample_direction(4, rng);
    const double d = rng.uniform(0.0, 5.0);
    auto [l, r] = antennae_points(x, d, b);
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK((l[j] - x[j]) == doctest::Approx(x[j] - r[j]).epsilon(1e-14));
    }
  }
}

TEST_CASE("antennae_points rejects malformed input") {
  CHECK_THROWS_AS(antennae_points({1.0, 2.0}, 1.0, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(antennae_points({1.0}, -0.5, {1.0}), std::invalid_argument);
}

TEST_CASE("update_schedules applies the affine decay") {
  BasParams p;
  p.alpha = 0.95;
  p.step_floor = 0.001;
  p.c = 0.94;
  p.d0 = 0.001;
  auto [delta, d] = update_schedules(10.0, 10.0, p);
  CHECK(delta == doctest::Approx(9.501).epsilon(1e-12));
  CHECK(d == doctest::Approx(9.401).epsilon(1e-12));

  // Fixed point of the step recursion: step_floor / (1 - alpha).
  const double fixed = p.step_floor / (1.0 - p.alpha);
  auto [delta_fp, d_ignored] = update_schedules(fixed, 1.0, p);
  (void)d_ignored;
  CHECK(delta_fp == doctest::Approx(fixed).epsilon(1e-12));
}

TEST_CASE("update_schedules contracts toward the fixed points at rate alpha") {
  BasParams p;
  p.alpha = 0.9;
  p.step_floor = 0.001;
  p.c = 0.8;
  p.d0 = 0.01;
  const double l_delta = p.step_floor / (1.0 - p.alpha);
  const double l_d = p.d0 / (1.0 - p.c);
  double delta = 5.0, d = 7.0;
  for (int k = 0; k < 50; ++k) {
    auto [delta_next, d_next] = update_schedules(delta, d, p);
    CHECK(std::abs(delta_next - l_delta) ==
          doctest::Approx(p.alpha * std::abs(delta - l_delta)).epsilon(1e-12));
    CHECK(std::abs(d_next - l_d) ==
          doctest::Approx(p.c * std::abs(d - l_d)).epsilon(1e-12));
    delta = delta_next;
    d = d_next;
  }
}

TEST_CASE("project clamps componentwise") {
  const auto box = SearchSpace::cube(2, -10.0, 10.0);
  CHECK(project({5.0, -3.0}, box) == std::vector<double>{5.0, -3.0});
  CHECK(project({15.0, -12.0}, box) == std::vector<double>{10.0, -10.0});
}

TEST_CASE("project on an unbounded space is the identity") {
  const auto space = SearchSpace::unbounded(3);
  const std::vector<double> x{1e9, -3.5, 0.0};
  CHECK(project(x, space) == x);
}

TEST_CASE("project is idempotent") {
  RandomStream rng(17);
  const auto box = SearchSpace({-1.0, 0.0, -5.0}, {1.0, 2.0, 5.0});
  for (int i = 0; i < 1000; ++i) {
    std::vector<double> x(3);
    for (auto& v : x) v = rng.uniform(-20.0, 20.0);
    const auto once = project(x, box);
    CHECK(project(once, box) == once);
    CHECK(box.contains(once));
  }
}

TEST_CASE("project rejects dimension mismatch") {
  CHECK_THROWS_AS(project({1.0}, SearchSpace::cube(2, 0.0, 1.0)), std::invalid_argument);
}

TEST_CASE("validate rejects out-of-range parameters") {
  BasParams p;
  CHECK_NOTHROW(validate(p));
  auto bad = p;
  bad.alpha = 1.0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = p;
  bad.alpha = 0.0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = p;
  bad.c = 0.0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = p;
  bad.delta0 = -1.0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = p;
  bad.d0 = 0.0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = p;
  bad.d_init = 0.0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = p;
  bad.step_floor = -0.1;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
}

TEST_CASE("bas_step leaves the position in place on a tie") {
  const Objective constant{2, [](const std::vector<double>&) { return 5.0; }};
  const auto box = SearchSpace::cube(2, -10.0, 10.0);
  BasParams p;
  const BeetleState state{{1.0, -2.0}, 0.5, 0.25, 3};
  const auto next = bas_step_along(state, constant, box, p, {1.0, 0.0});
  CHECK(next.x == state.x);
  CHECK(next.k == 4);
  CHECK(next.delta == p.alpha * state.delta + p.step_floor);
  CHECK(next.d == p.c * state.d + p.d0);
}

TEST_CASE("bas_step moves downhill on a 1-d parabola") {
  const Objective parabola{1, [](const std::vector<double>& x) { return x[0] * x[0]; }};
  const auto space = SearchSpace::unbounded(1);
  BasParams p;
  const double delta = 0.3;
  const BeetleState state{{1.0}, delta, 0.5, 0};
  // f(1.5) > f(0.5), so the step is taken along -b.
  const auto next = bas_step_along(state, parabola, space, p, {1.0});
  CHECK(next.x[0] == 1.0 - delta);
}

TEST_CASE("bas_step consumes exactly two evaluations") {
  std::size_t calls = 0;
  const auto objective = counting_objective(2, calls);
  const auto box = SearchSpace::cube(2, -10.0, 10.0);
  BasParams p;
  const BeetleState state{{0.0, 0.0}, 1.0, 1.0, 0};
  bas_step_along(state, objective, box, p, {0.6, 0.8});
  CHECK(calls == 2);
}

TEST_CASE("bas_step is invariant under direction sign flip") {
  const auto box = SearchSpace::cube(2, -10.0, 10.0);
  BasParams p;
  RandomStream rng(23);
  for (int i = 0; i < 500; ++i) {
    BeetleState state;
    state.x = {rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
    state.delta = rng.uniform(0.01, 2.0);
    state.d = rng.uniform(0.01, 2.0);
    const auto b = sample_direction(2, rng);
    const std::vector<double> minus_b{-b[0], -b[1]};
    const auto a = bas_step_along(state, sphere, box, p, b);
    const auto c = bas_step_along(state, sphere, box, p, minus_b);
    CHECK(a.x == c.x);
    CHECK(a.delta == c.delta);
    CHECK(a.d == c.d);
    CHECK(a.k == c.k);
  }
}

TEST_CASE("bas_step surfaces non-finite objective values with the point") {
  const Objective bad{1, [](const std::vector<double>& x) {
                        return x[0] > 1.0 ? std::numeric_limits<double>::infinity() : 0.0;
                      }};
  const auto space = SearchSpace::unbounded(1);
  BasParams p;
  const BeetleState state{{1.0}, 0.1, 0.5, 0};
  try {
    bas_step_along(state, bad, space, p, {1.0});
    FAIL("expected NonFiniteObjectiveError");
  } catch (const NonFiniteObjectiveError& e) {
    CHECK(e.point() == std::vector<double>{1.5});  // the left antenna
    CHECK(std::isinf(e.value()));
  }
}

TEST_CASE("run on a constant objective keeps the initial point") {
  const Objective constant{2, [](const std::vector<double>&) { return 5.0; }};
  const auto box = SearchSpace::cube(2, -10.0, 10.0);
  BasParams p;
  p.k_max = 50;
  const std::vector<double> x0{3.0, -4.0};
  const auto result = run(constant, box, x0, p);
  CHECK(result.f_best == 5.0);
  CHECK(result.x_best == x0);
  for (double v : result.trace) CHECK(v == 5.0);
}

TEST_CASE("run with k_max = 0 performs only the initial evaluation") {
  const auto box = SearchSpace::cube(2, -10.0, 10.0);
  BasParams p;
  p.k_max = 0;
  const auto result = run(sphere, box, {1.0, 2.0}, p);
  CHECK(result.f_best == 5.0);
  CHECK(result.evaluations == 1);
  CHECK(result.trace == std::vector<double>{5.0});
}

TEST_CASE("run accounting: evaluations == 1 + 3 * iterations") {
  std::size_t calls = 0;
  const auto objective = counting_objective(2, calls);
  const auto box = SearchSpace::cube(2, -10.0, 10.0);
  BasParams p;
  p.k_max = 77;
  const auto result = run(objective, box, {0.0, 0.0}, p);
  CHECK(result.evaluations == 1 + 3 * 77);
  CHECK(calls == result.evaluations);
  CHECK(result.trace.size() == 78);
}

TEST_CASE("run is deterministic for a fixed seed") {
  const auto box = SearchSpace::cube(2, -10.0, 10.0);
  BasParams p;
  p.k_max = 500;
  p.seed = 99;
  const auto a = run(sphere, box, {5.0, 5.0}, p);
  const auto b = run(sphere, box, {5.0, 5.0}, p);
  CHECK(a.x_best == b.x_best);
  CHECK(a.f_best == b.f_best);
  CHECK(a.evaluations == b.evaluations);
  CHECK(a.trace == b.trace);
  CHECK(a.seed == b.seed);
}

TEST_CASE("run trace is non-increasing and ends at f_best") {
  const auto box = SearchSpace::cube(2, -10.0, 10.0);
  BasParams p;
  p.k_max = 2000;
  p.seed = 5;
  const auto result = run(sphere, box, {8.0, -9.0}, p);
  REQUIRE(!result.trace.empty());
  for (std::size_t i = 1; i < result.trace.size(); ++i) {
    CHECK(result.trace[i] <= result.trace[i - 1]);
  }
  CHECK(result.trace.back() == result.f_best);
  CHECK(box.contains(result.x_best));
}

TEST_CASE("run rejects an initial point outside the space") {
  const auto box = SearchSpace::cube(2, -1.0, 1.0);
  BasParams p;
  CHECK_THROWS_AS(run(sphere, box, {2.0, 0.0}, p), std::invalid_argument);
}

TEST_CASE("run propagates non-finite objective values") {
  const Objective nan_away{1, [](const std::vector<double>& x) {
                             return std::abs(x[0]) > 2.0
                                        ? std::numeric_limits<double>::quiet_NaN()
                                        : x[0] * x[0];
                           }};
  BasParams p;
  p.k_max = 100;
  p.d_init = 5.0;  // antennae reach the NaN region immediately
  CHECK_THROWS_AS(run(nan_away, SearchSpace::unbounded(1), {0.0}, p), NonFiniteObjectiveError);
}

TEST_CASE("run honors the stop predicate") {
  const auto box = SearchSpace::cube(2, -10.0, 10.0);
  BasParams p;
  p.k_max = 1000;
  const auto result = run(sphere, box, {1.0, 1.0}, p,
                          [](const std::vector<double>&, double, std::uint64_t k) {
                            return k >= 5;
                          });
  CHECK(result.evaluations == 1 + 3 * 5);
  CHECK(result.trace.size() == 6);
}

TEST_CASE("derive_seed is stateless and collision-resistant in sequence") {
  CHECK(derive_seed(1, 0) == derive_seed(1, 0));
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
}

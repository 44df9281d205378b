#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace bas {

// A deterministic scalar function of a fixed-dimension real vector.
struct Objective {
  std::size_t dimension = 0;
  std::function<double(const std::vector<double>&)> eval;

  double operator()(const std::vector<double>& x) const { return eval(x); }
};

// Thrown when an objective produces NaN or +/-inf; carries the offending point.
class NonFiniteObjectiveError : public std::runtime_error {
 public:
  NonFiniteObjectiveError(std::vector<double> point, double value);

  const std::vector<double>& point() const noexcept { return point_; }
  double value() const noexcept { return value_; }

 private:
  std::vector<double> point_;
  double value_;
};

// Evaluates the objective at x. Throws std::invalid_argument on dimension
// mismatch and NonFiniteObjectiveError on a non-finite result.
double eval_checked(const Objective& objective, const std::vector<double>& x);

}  // namespace bas

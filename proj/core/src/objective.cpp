#include "bas/objective.hpp"

#include <cmath>
#include <sstream>

namespace bas {

namespace {

std::string describe_point(const std::vector<double>& point, double value) {
  std::ostringstream msg;
  msg << "objective returned non-finite value " << value << " at (";
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i > 0) msg << ", ";
    msg << point[i];
  }
  msg << ")";
  return msg.str();
}

}  // namespace

NonFiniteObjectiveError::NonFiniteObjectiveError(std::vector<double> point, double value)
    : std::runtime_error(describe_point(point, value)), point_(std::move(point)), value_(value) {}

double eval_checked(const Objective& objective, const std::vector<double>& x) {
  if (x.size() != objective.dimension) {
    throw std::invalid_argument("objective: dimension mismatch");
  }
  const double value = objective.eval(x);
  if (!std::isfinite(value)) {
    throw NonFiniteObjectiveError(x, value);
  }
  return value;
}

}  // namespace bas

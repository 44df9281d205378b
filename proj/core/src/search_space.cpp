#include "bas/search_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace bas {

SearchSpace::SearchSpace(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.size() != upper_.size()) {
    throw std::invalid_argument("SearchSpace: lower and upper must have equal length");
  }
  if (lower_.empty()) {
    throw std::invalid_argument("SearchSpace: dimension must be at least 1");
  }
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    if (std::isnan(lower_[i]) || std::isnan(upper_[i]) || !(lower_[i] < upper_[i])) {
      throw std::invalid_argument("SearchSpace: requires lower[i] < upper[i] on every axis");
    }
  }
}

SearchSpace SearchSpace::unbounded(std::size_t dimension) {
  const double inf = std::numeric_limits<double>::infinity();
  return SearchSpace(std::vector<double>(dimension, -inf), std::vector<double>(dimension, inf));
}

SearchSpace SearchSpace::cube(std::size_t dimension, double lower, double upper) {
  return SearchSpace(std::vector<double>(dimension, lower), std::vector<double>(dimension, upper));
}

bool SearchSpace::bounded() const noexcept {
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    if (std::isinf(lower_[i]) || std::isinf(upper_[i])) return false;
  }
  return true;
}

bool SearchSpace::contains(const std::vector<double>& x) const {
  if (x.size() != dimension()) {
    throw std::invalid_argument("SearchSpace::contains: dimension mismatch");
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(lower_[i] <= x[i] && x[i] <= upper_[i])) return false;
  }
  return true;
}

std::vector<double> project(const std::vector<double>& x, const SearchSpace& space) {
  if (x.size() != space.dimension()) {
    throw std::invalid_argument("project: dimension mismatch");
  }
  std::vector<double> out(x.size());
  const auto& lo = space.lower();
  const auto& hi = space.upper();
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = std::clamp(x[i], lo[i], hi[i]);
  }
  return out;
}

}  // namespace bas

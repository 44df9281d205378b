#pragma once

#include <cstddef>
#include <vector>

namespace bas {

// Axis-aligned search box. Individual bounds may be -inf/+inf; a fully
// unbounded space makes project() the identity.
class SearchSpace {
 public:
  SearchSpace(std::vector<double> lower, std::vector<double> upper);

  static SearchSpace unbounded(std::size_t dimension);

  // Box with the same scalar bounds on every axis.
  static SearchSpace cube(std::size_t dimension, double lower, double upper);

  std::size_t dimension() const noexcept { return lower_.size(); }
  const std::vector<double>& lower() const noexcept { return lower_; }
  const std::vector<double>& upper() const noexcept { return upper_; }

  // True when every bound is finite.
  bool bounded() const noexcept;

  // Componentwise lower <= x <= upper. Throws on dimension mismatch.
  bool contains(const std::vector<double>& x) const;

 private:
  std::vector<double> lower_;
  std::vector<double> upper_;
};

// Nearest point of the box: componentwise clamp. Idempotent, and the identity
// when all bounds are infinite.
std::vector<double> project(const std::vector<double>& x, const SearchSpace& space);

}  // namespace bas

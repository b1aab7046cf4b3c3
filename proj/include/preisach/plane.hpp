#pragma once

#include <algorithm>

#include "preisach/error.hpp"

namespace preisach {

// Input range [x_min, x_max] that margins the Preisach triangle
// P = {(alpha, beta) : x_min <= beta <= alpha <= x_max}.
class PlaneBounds {
 public:
  PlaneBounds(double x_min, double x_max) : min_(x_min), max_(x_max) {
    if (!(x_min < x_max)) throw ContractViolation("PlaneBounds requires x_min < x_max");
  }

  double min() const noexcept { return min_; }
  double max() const noexcept { return max_; }
  double width() const noexcept { return max_ - min_; }
  double clamp(double x) const noexcept { return std::clamp(x, min_, max_); }
  bool contains(double alpha, double beta) const noexcept {
    return min_ <= beta && beta <= alpha && alpha <= max_;
  }

  friend bool operator==(const PlaneBounds&, const PlaneBounds&) = default;

 private:
  double min_;
  double max_;
};

// A corner of the staircase interface; alpha is the up-switching threshold,
// beta the down-switching one.
struct Vertex {
  double alpha;
  double beta;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

}  // namespace preisach

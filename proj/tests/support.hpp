#pragma once

#include <cstddef>
#include <random>

#include "preisach/density.hpp"
#include "preisach/memory.hpp"

namespace preisach::test_support {

// Composite trapezoid rule with n intervals.
template <class F>
double trapezoid(const F& f, double a, double b, std::size_t n = 1'000'000) {
  const double h = (b - a) / static_cast<double>(n);
  double s = 0.5 * (f(a) + f(b));
  for (std::size_t k = 1; k < n; ++k) s += f(a + h * static_cast<double>(k));
  return s * h;
}

inline DensityFunction single_gaussian() {
  GaussianMixture g;
  g.components[0] = {1.0, {0.0, 0.0}, {1.0, 0.0, 1.0}};
  g.components[1] = {0.0, {0.0, 0.0}, {1.0, 0.0, 1.0}};
  g.components[2] = {0.0, {0.0, 0.0}, {1.0, 0.0, 1.0}};
  return DensityFunction(g);
}

// Random walk with reversals, clamped to [lo, hi].
inline std::vector<double> random_walk(std::mt19937_64& rng, std::size_t n, double lo, double hi, double step) {
  std::uniform_real_distribution<double> u(-step, step);
  std::vector<double> xs;
  double x = 0.5 * (lo + hi);
  for (std::size_t k = 0; k < n; ++k) {
    x = std::clamp(x + u(rng), lo, hi);
    xs.push_back(x);
  }
  return xs;
}

}  // namespace preisach::test_support

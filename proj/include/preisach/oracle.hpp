#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "preisach/density.hpp"
#include "preisach/memory.hpp"

namespace preisach {

// n x n ensemble of ideal relays over the bounds square. Cell (i, j) has
// up-threshold alpha_i and down-threshold beta_j at the cell centres and
// weight rho(alpha_i, beta_j) * h^2 when i > j, half of that on the diagonal
// (i == j) and nothing below it. Only the lower triangle is stored.
class HysteronGrid {
 public:
  HysteronGrid(const DensityFunction& pdf, PlaneBounds bounds, int n);

  int n() const noexcept { return n_; }
  const PlaneBounds& bounds() const noexcept { return bounds_; }
  double center(int i) const noexcept { return bounds_.min() + (i + 0.5) * h_; }
  double total_weight() const;

  void set_saturation(Saturation sign);
  // Each relay takes the sign of its membership in the P+ region of mem.
  void set_memory(const MemoryVector& mem);
  // Demagnetized pattern: up below the anti-diagonal through the bounds'
  // centre, down above it, alternating signs on cells it passes through.
  void set_anti_diagonal();

  // Relay rule: alpha_i <= x switches up, otherwise beta_j >= x switches
  // down. Only cells whose thresholds lie between the previous and the new
  // input are visited.
  double step(double x);
  // Same rule applied to every cell; reference for step().
  double step_naive(double x);

  // Tracked output; output_exact() re-sums all cells pairwise.
  double output() const noexcept { return y_; }
  double output_exact() const;
  int8_t state(int i, int j) const noexcept { return states_[index(i, j)]; }

 private:
  std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) * (static_cast<std::size_t>(i) + 1) / 2 + static_cast<std::size_t>(j);
  }
  void set_cell(std::size_t k, int8_t s) noexcept {
    if (states_[k] != s) {
      states_[k] = s;
      y_ += 2.0 * s * weights_[k];
    }
  }
  int lowest_index_at_or_above(double x) const noexcept;  // smallest i with center(i) >= x

  PlaneBounds bounds_;
  int n_;
  double h_;
  std::vector<double> weights_;
  std::vector<int8_t> states_;
  double x_last_;
  double y_ = 0.0;
};

// Grid oracle started from negative saturation (or from `initial` when
// given), applied to every sample.
std::vector<double> oracle_run(const DensityFunction& pdf, const PlaneBounds& bounds, int n,
                               std::span<const double> xs);
std::vector<double> oracle_run(const DensityFunction& pdf, const MemoryVector& initial, int n,
                               std::span<const double> xs);

}  // namespace preisach

#pragma once

#include <span>
#include <string>
#include <vector>

#include "preisach/plane.hpp"

namespace preisach {

enum class Saturation { kNegative, kPositive };
enum class Branch { kAscending, kDescending };

// The staircase interface between P+ and P-: an ordered corner list running
// from the margin vertex (x_max, x_min) to the operation point (x, x) on the
// diagonal. Alphas never increase and betas never decrease along the list.
//
// States reached from saturation through increase()/decrease() list every
// vertex of the staircase, so consecutive corners share one coordinate.
class MemoryVector {
 public:
  // Validates the corner invariants; throws ContractViolation.
  MemoryVector(std::vector<Vertex> corners, PlaneBounds bounds);

  static MemoryVector saturation(PlaneBounds bounds, Saturation sign);
  // Anti-diagonal approximation with `steps` symmetric extremum pairs, ending
  // at (0, 0) mapped into the bounds. steps == 1 gives [(x_max, x_min), (0, 0)].
  static MemoryVector ground(PlaneBounds bounds, int steps);

  std::span<const Vertex> corners() const noexcept { return corners_; }
  std::size_t size() const noexcept { return corners_.size(); }
  const PlaneBounds& bounds() const noexcept { return bounds_; }
  // Input level of the operation point.
  double level() const noexcept { return corners_.back().alpha; }
  bool is_saturated() const noexcept;

  // Wipe corners with alpha <= x, then append (x, beta_survivor) and (x, x).
  void increase(double x_new);
  // Wipe corners with beta >= x, then append (alpha of the last wiped corner, x)
  // when it lies above the survivor, and (x, x).
  void decrease(double x_new);
  // Clamp into the bounds and dispatch on the sign of the change; changes
  // below the reversal threshold leave the memory untouched. Returns the
  // (clamped) level actually applied.
  double apply(double x_new);

  // Corner before the operation point: supplies beta(m_l) when ascending and
  // alpha(M_l) when descending.
  Vertex last_extremum(Branch branch) const noexcept;
  // The corner that would be the last survivor of wiping by a move to x_new.
  Vertex wipe_survivor(Branch branch, double x_new) const noexcept;
  // Far end of the segment swept by a move to x_new, read after wiping: the
  // survivor's beta when ascending, the alpha the front ends in when descending.
  double far_end(Branch branch, double x_new) const noexcept;

  // Changes smaller than this are treated as no input change.
  double reversal_threshold() const noexcept { return 1e-12 * bounds_.width(); }

  // "alpha,beta" header plus one row per corner.
  std::string to_csv() const;

  friend bool operator==(const MemoryVector&, const MemoryVector&) = default;

 private:
  void check_invariants() const;

  std::vector<Vertex> corners_;
  PlaneBounds bounds_;
};

MemoryVector saturation_state(const PlaneBounds& bounds, Saturation sign);
MemoryVector ground_state(const PlaneBounds& bounds, int steps);
MemoryVector update_increase(MemoryVector mem, double x_new);
MemoryVector update_decrease(MemoryVector mem, double x_new);
inline Vertex last_extremum(const MemoryVector& mem, Branch branch) { return mem.last_extremum(branch); }

}  // namespace preisach

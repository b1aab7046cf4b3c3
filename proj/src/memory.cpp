#include "preisach/memory.hpp"

#include <cmath>
#include <cstdio>

namespace preisach {

MemoryVector::MemoryVector(std::vector<Vertex> corners, PlaneBounds bounds)
    : corners_(std::move(corners)), bounds_(bounds) {
  check_invariants();
}

void MemoryVector::check_invariants() const {
  if (corners_.size() < 2) throw ContractViolation("memory needs the margin vertex and an operation point");
  const Vertex margin{bounds_.max(), bounds_.min()};
  if (corners_.front() != margin) throw ContractViolation("first corner must be the margin vertex (x_max, x_min)");
  if (corners_.back().alpha != corners_.back().beta)
    throw ContractViolation("last corner must lie on the diagonal alpha == beta");
  for (std::size_t i = 0; i < corners_.size(); ++i) {
    const Vertex& c = corners_[i];
    if (!bounds_.contains(c.alpha, c.beta)) throw ContractViolation("corner outside the Preisach triangle");
    if (i == 0) continue;
    const Vertex& p = corners_[i - 1];
    if (c.alpha > p.alpha || c.beta < p.beta)
      throw ContractViolation("corner alphas must not increase and betas must not decrease");
    if (c == p) throw ContractViolation("consecutive corners must be distinct");
  }
}

MemoryVector MemoryVector::saturation(PlaneBounds bounds, Saturation sign) {
  const Vertex margin{bounds.max(), bounds.min()};
  const double x = sign == Saturation::kPositive ? bounds.max() : bounds.min();
  return MemoryVector({margin, Vertex{x, x}}, bounds);
}

MemoryVector MemoryVector::ground(PlaneBounds bounds, int steps) {
  if (steps < 1) throw ContractViolation("ground state needs at least one step");
  const double center = 0.5 * (bounds.min() + bounds.max());
  const double up = bounds.max() - center;
  const double down = bounds.min() - center;
  std::vector<Vertex> corners;
  corners.reserve(static_cast<std::size_t>(steps) + 1);
  corners.push_back({bounds.max(), bounds.min()});
  for (int k = 1; k < steps; ++k) {
    const double frac = static_cast<double>(steps - k) / steps;
    corners.push_back({center + up * frac, center + down * frac});
  }
  corners.push_back({center, center});
  return MemoryVector(std::move(corners), bounds);
}

bool MemoryVector::is_saturated() const noexcept {
  return corners_.size() == 2 && (level() == bounds_.max() || level() == bounds_.min());
}

void MemoryVector::increase(double x_new) {
  x_new = bounds_.clamp(x_new);
  if (!(x_new > level())) throw ContractViolation("update_increase needs an input above the operation level");
  // The margin vertex is never wiped.
  while (corners_.size() > 1 && corners_.back().alpha <= x_new) corners_.pop_back();
  const Vertex step{x_new, corners_.back().beta};
  if (step != corners_.back()) corners_.push_back(step);
  const Vertex op{x_new, x_new};
  if (op != corners_.back()) corners_.push_back(op);
}

void MemoryVector::decrease(double x_new) {
  x_new = bounds_.clamp(x_new);
  if (!(x_new < level())) throw ContractViolation("update_decrease needs an input below the operation level");
  // The new corner keeps the alpha of the strip the front now ends in, which
  // is that of the last wiped corner.
  double top = corners_.back().alpha;
  while (corners_.size() > 1 && corners_.back().beta >= x_new) {
    top = corners_.back().alpha;
    corners_.pop_back();
  }
  const Vertex step{top, x_new};
  if (x_new > corners_.back().beta) corners_.push_back(step);
  const Vertex op{x_new, x_new};
  if (op != corners_.back()) corners_.push_back(op);
}

double MemoryVector::apply(double x_new) {
  x_new = bounds_.clamp(x_new);
  const double dx = x_new - level();
  if (std::abs(dx) < reversal_threshold()) return level();
  if (dx > 0.0)
    increase(x_new);
  else
    decrease(x_new);
  return x_new;
}

Vertex MemoryVector::last_extremum(Branch) const noexcept { return corners_[corners_.size() - 2]; }

Vertex MemoryVector::wipe_survivor(Branch branch, double x_new) const noexcept {
  std::size_t i = corners_.size() - 1;
  if (branch == Branch::kAscending) {
    while (i > 0 && corners_[i].alpha <= x_new) --i;
  } else {
    while (i > 0 && corners_[i].beta >= x_new) --i;
  }
  return corners_[i];
}

double MemoryVector::far_end(Branch branch, double x_new) const noexcept {
  std::size_t i = corners_.size() - 1;
  if (branch == Branch::kAscending) {
    while (i > 0 && corners_[i].alpha <= x_new) --i;
    return corners_[i].beta;
  }
  while (i > 0 && corners_[i].beta >= x_new) --i;
  return corners_[i + 1].alpha;
}

std::string MemoryVector::to_csv() const {
  std::string out = "alpha,beta\n";
  char buf[64];
  for (const Vertex& c : corners_) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", c.alpha, c.beta);
    out += buf;
  }
  return out;
}

MemoryVector saturation_state(const PlaneBounds& bounds, Saturation sign) {
  return MemoryVector::saturation(bounds, sign);
}

MemoryVector ground_state(const PlaneBounds& bounds, int steps) { return MemoryVector::ground(bounds, steps); }

MemoryVector update_increase(MemoryVector mem, double x_new) {
  mem.increase(x_new);
  return mem;
}

MemoryVector update_decrease(MemoryVector mem, double x_new) {
  mem.decrease(x_new);
  return mem;
}

}  // namespace preisach

#pragma once

#include <span>
#include <vector>

#include "preisach/density.hpp"
#include "preisach/memory.hpp"

namespace preisach {

// Constant computation rate T with dt = 1/T.
struct SamplingConfig {
  double rate = 1000.0;
  // Largest |dx| handled in one internal sub-step; 0 disables sub-stepping.
  double substep_threshold = 0.0;

  double dt() const noexcept { return 1.0 / rate; }
  void validate() const {
    if (!(rate > 0.0)) throw ContractViolation("SamplingConfig.rate must be > 0");
    if (!(substep_threshold >= 0.0)) throw ContractViolation("SamplingConfig.substep_threshold must be >= 0");
  }
};

struct SspmOptions {
  // Recompute y by double integration whenever the memory collapses to
  // saturation, discarding accumulated drift.
  bool reanchor = false;
  // Debug: integrate from the far end to (x + dx) / 2 with no |dx| factor.
  // Not a valid model; for comparison only.
  bool literal_segment = false;
};

// z = (y, m) plus the previous input sample. mem.level() == x_prev.
struct SspmState {
  double y = 0.0;
  MemoryVector mem;
  double x_prev = 0.0;
  bool quadrature_warning = false;  // sticky: some step hit max_depth

  static SspmState from_memory(MemoryVector mem, double y) {
    const double level = mem.level();
    return SspmState{y, std::move(mem), level, false};
  }
};

/// One state-space step: far end from the post-wipe survivor, a single
/// line-segment quadrature at the midpoint level x_prev + dx/2, then the
/// memory update and y += dy.
SspmState sspm_step(SspmState state, double x_new, const DensityFunction& pdf, const QuadratureConfig& q,
                    const SamplingConfig& s, const SspmOptions& opts = {});

/// Folds sspm_step over xs (sub-stepping large moves when configured) and
/// returns one output per sample. `state` is left at the final state.
std::vector<double> run_sequence(SspmState& state, std::span<const double> xs, const DensityFunction& pdf,
                                 const QuadratureConfig& q, const SamplingConfig& s,
                                 const SspmOptions& opts = {});

// Stateful wrapper with the same step()/output() surface as CspmModel.
class SspmModel {
 public:
  SspmModel(DensityFunction pdf, QuadratureConfig q, SamplingConfig s, SspmState initial,
            SspmOptions opts = {});

  double step(double x_new);
  void reset(SspmState initial) { state_ = std::move(initial); }

  double output() const noexcept { return state_.y; }
  const SspmState& state() const noexcept { return state_; }
  const MemoryVector& memory() const noexcept { return state_.mem; }
  bool depth_warning() const noexcept { return state_.quadrature_warning; }

 private:
  DensityFunction pdf_;
  QuadratureConfig q_;
  SamplingConfig s_;
  SspmOptions opts_;
  SspmState state_;
};

}  // namespace preisach

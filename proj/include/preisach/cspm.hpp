#pragma once

#include "preisach/density.hpp"
#include "preisach/memory.hpp"

namespace preisach {

/// Classical output y = 2 * mass(P+) - mass(P), recomputed from the staircase.
QuadResult cspm_output(const DensityFunction& pdf, const MemoryVector& mem, const QuadratureConfig& q,
                       double total);
QuadResult cspm_output(const DensityFunction& pdf, const MemoryVector& mem, const QuadratureConfig& q);

// Reference model: every input change updates the memory and re-integrates
// the density over the whole of P+. The mass of P is computed once at
// construction.
class CspmModel {
 public:
  CspmModel(DensityFunction pdf, QuadratureConfig q, MemoryVector initial);

  // Applies one input sample and returns the new output. Zero input changes
  // skip the integration and return the previous output.
  double step(double x_new);
  void reset(MemoryVector initial);

  double output() const noexcept { return y_; }
  const MemoryVector& memory() const noexcept { return mem_; }
  double total_mass() const noexcept { return total_; }
  const DensityFunction& density() const noexcept { return pdf_; }
  const QuadratureConfig& quadrature() const noexcept { return q_; }
  // Sticky flag: some quadrature hit max_depth since the last reset.
  bool depth_warning() const noexcept { return depth_warning_; }

 private:
  DensityFunction pdf_;
  QuadratureConfig q_;
  MemoryVector mem_;
  double total_ = 0.0;
  double y_ = 0.0;
  bool depth_warning_ = false;
};

}  // namespace preisach

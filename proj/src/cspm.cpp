#include "preisach/cspm.hpp"

namespace preisach {

QuadResult cspm_output(const DensityFunction& pdf, const MemoryVector& mem, const QuadratureConfig& q,
                       double total) {
  QuadResult plus = region_integral(pdf, mem, q);
  plus.value = 2.0 * plus.value - total;
  return plus;
}

QuadResult cspm_output(const DensityFunction& pdf, const MemoryVector& mem, const QuadratureConfig& q) {
  const QuadResult mass = total_mass(pdf, mem.bounds(), q);
  QuadResult out = cspm_output(pdf, mem, q, mass.value);
  out.evaluations += mass.evaluations;
  out.depth_exceeded = out.depth_exceeded || mass.depth_exceeded;
  return out;
}

CspmModel::CspmModel(DensityFunction pdf, QuadratureConfig q, MemoryVector initial)
    : pdf_(std::move(pdf)), q_(q), mem_(std::move(initial)) {
  q_.validate();
  const QuadResult mass = preisach::total_mass(pdf_, mem_.bounds(), q_);
  total_ = mass.value;
  depth_warning_ = mass.depth_exceeded;
  reset(mem_);
}

void CspmModel::reset(MemoryVector initial) {
  if (initial.bounds() != mem_.bounds()) throw ContractViolation("reset memory must share the model bounds");
  mem_ = std::move(initial);
  const QuadResult y = cspm_output(pdf_, mem_, q_, total_);
  y_ = y.value;
  depth_warning_ = depth_warning_ || y.depth_exceeded;
}

double CspmModel::step(double x_new) {
  const double before = mem_.level();
  if (mem_.apply(x_new) == before) return y_;
  const QuadResult y = cspm_output(pdf_, mem_, q_, total_);
  y_ = y.value;
  depth_warning_ = depth_warning_ || y.depth_exceeded;
  return y_;
}

}  // namespace preisach

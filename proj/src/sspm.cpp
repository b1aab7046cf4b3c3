#include "preisach/sspm.hpp"

#include <cmath>

#include "preisach/cspm.hpp"

namespace preisach {

namespace {

// Integral with possibly reversed limits, used only by the literal formula.
double signed_integral(const auto& f, double lo, double hi, const QuadratureConfig& q, bool& warn) {
  if (lo == hi) return 0.0;
  const bool flip = lo > hi;
  const QuadResult r = adaptive_lobatto(f, flip ? hi : lo, flip ? lo : hi, q);
  warn = warn || r.depth_exceeded;
  return flip ? -r.value : r.value;
}

double literal_increment(const SspmState& state, double dx, const DensityFunction& pdf, const QuadratureConfig& q,
                         double far, bool& warn) {
  const double x_lit = 0.5 * (state.x_prev + dx);
  if (dx > 0.0)
    return 2.0 * signed_integral([&](double b) { return pdf(x_lit, b); }, far, x_lit, q, warn);
  return -2.0 * signed_integral([&](double a) { return pdf(a, x_lit); }, far, x_lit, q, warn);
}

void step_in_place(SspmState& state, double x_new, const DensityFunction& pdf, const QuadratureConfig& q,
                   const SspmOptions& opts) {
  if (state.mem.level() != state.x_prev) throw ContractViolation("SSPM state: memory level differs from x_prev");
  x_new = state.mem.bounds().clamp(x_new);
  const double dx = x_new - state.x_prev;
  if (std::abs(dx) < state.mem.reversal_threshold()) return;

  const double x_mid = state.x_prev + 0.5 * dx;
  double dy = 0.0;
  if (dx > 0.0) {
    const double beta_far = state.mem.far_end(Branch::kAscending, x_new);
    if (opts.literal_segment) {
      dy = literal_increment(state, dx, pdf, q, beta_far, state.quadrature_warning);
    } else {
      const QuadResult seg = segment_integral_beta(pdf, x_mid, beta_far, x_mid, q);
      state.quadrature_warning = state.quadrature_warning || seg.depth_exceeded;
      dy = 2.0 * dx * seg.value;
    }
    state.mem.increase(x_new);
  } else {
    const double alpha_far = state.mem.far_end(Branch::kDescending, x_new);
    if (opts.literal_segment) {
      dy = literal_increment(state, dx, pdf, q, alpha_far, state.quadrature_warning);
    } else {
      const QuadResult seg = segment_integral_alpha(pdf, x_mid, x_mid, alpha_far, q);
      state.quadrature_warning = state.quadrature_warning || seg.depth_exceeded;
      dy = 2.0 * dx * seg.value;  // dx < 0
    }
    state.mem.decrease(x_new);
  }
  state.x_prev = x_new;
  state.y += dy;

  if (opts.reanchor && state.mem.is_saturated()) {
    const QuadResult y = cspm_output(pdf, state.mem, q);
    state.quadrature_warning = state.quadrature_warning || y.depth_exceeded;
    state.y = y.value;
  }
}

}  // namespace

SspmState sspm_step(SspmState state, double x_new, const DensityFunction& pdf, const QuadratureConfig& q,
                    const SamplingConfig& s, const SspmOptions& opts) {
  (void)s;  // T * dt == 1: the rate cancels out of the increment
  step_in_place(state, x_new, pdf, q, opts);
  return state;
}

namespace {

void advance(SspmState& state, double x_new, const DensityFunction& pdf, const QuadratureConfig& q,
             const SamplingConfig& s, const SspmOptions& opts) {
  x_new = state.mem.bounds().clamp(x_new);
  const double dx = x_new - state.x_prev;
  if (s.substep_threshold > 0.0 && std::abs(dx) > s.substep_threshold) {
    const double start = state.x_prev;
    const auto pieces = static_cast<long>(std::ceil(std::abs(dx) / s.substep_threshold));
    for (long k = 1; k < pieces; ++k)
      step_in_place(state, start + dx * static_cast<double>(k) / static_cast<double>(pieces), pdf, q, opts);
  }
  step_in_place(state, x_new, pdf, q, opts);
}

}  // namespace

std::vector<double> run_sequence(SspmState& state, std::span<const double> xs, const DensityFunction& pdf,
                                 const QuadratureConfig& q, const SamplingConfig& s, const SspmOptions& opts) {
  if (xs.empty()) throw ContractViolation("run_sequence needs a non-empty input sequence");
  q.validate();
  s.validate();
  std::vector<double> ys;
  ys.reserve(xs.size());
  for (double x : xs) {
    advance(state, x, pdf, q, s, opts);
    ys.push_back(state.y);
  }
  return ys;
}

SspmModel::SspmModel(DensityFunction pdf, QuadratureConfig q, SamplingConfig s, SspmState initial,
                     SspmOptions opts)
    : pdf_(std::move(pdf)), q_(q), s_(s), opts_(opts), state_(std::move(initial)) {
  q_.validate();
  s_.validate();
}

double SspmModel::step(double x_new) {
  advance(state_, x_new, pdf_, q_, s_, opts_);
  return state_.y;
}

}  // namespace preisach

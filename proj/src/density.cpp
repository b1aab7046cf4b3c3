#include "preisach/density.hpp"

#include <numbers>
#include <string>

#include "preisach/memory.hpp"

namespace preisach {

namespace {

thread_local std::size_t region_calls = 0;

bool finite_nonneg(double v) { return std::isfinite(v) && v >= 0.0; }

// Returns true when [lo, hi] is empty up to roundoff; throws if reversed.
bool degenerate(double lo, double hi, const char* what) {
  if (lo == hi) return true;
  if (lo > hi) {
    const double slack = 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)});
    if (lo - hi < slack) return true;
    throw ContractViolation(std::string(what) + ": lower limit exceeds upper limit");
  }
  return false;
}

}  // namespace

DensityFunction::DensityFunction(Uniform u) : params_(u), kind_(Kind::kUniform), level_(u.level) {
  if (!finite_nonneg(u.level)) throw ContractViolation("uniform density level must be >= 0");
}

DensityFunction::DensityFunction(BiasedExponential e)
    : params_(e), kind_(Kind::kExponential), amplitude_(e.amplitude), decay_(e.decay), offset_(e.offset) {
  if (!finite_nonneg(e.amplitude)) throw ContractViolation("exponential density needs A >= 0");
  if (!(std::isfinite(e.decay) && e.decay > 0.0)) throw ContractViolation("exponential density needs B > 0");
  if (!finite_nonneg(e.offset)) throw ContractViolation("exponential density needs C >= 0");
}

DensityFunction::DensityFunction(GaussianMixture g) : params_(g), kind_(Kind::kGaussian) {
  for (std::size_t i = 0; i < g.components.size(); ++i) {
    const GaussianComponent& c = g.components[i];
    const auto [saa, sab, sbb] = c.cov;
    const double det = saa * sbb - sab * sab;
    if (!finite_nonneg(c.weight)) throw ContractViolation("gaussian weights must be >= 0");
    if (!(saa > 0.0 && det > 0.0) || !std::isfinite(det))
      throw ContractViolation("gaussian covariance must be symmetric positive definite");
    Prepared& p = gauss_[i];
    p.scale = c.weight / (2.0 * std::numbers::pi * std::sqrt(det));
    p.mean_a = c.mean[0];
    p.mean_b = c.mean[1];
    p.inv_aa = sbb / det;
    p.inv_ab = -sab / det;
    p.inv_bb = saa / det;
  }
}

std::string_view DensityFunction::name() const noexcept {
  switch (kind_) {
    case Kind::kUniform:
      return "uniform";
    case Kind::kExponential:
      return "exponential";
    case Kind::kGaussian:
      return "gaussian";
  }
  return "";
}

QuadResult segment_integral_beta(const DensityFunction& pdf, double alpha_fixed, double beta_lo,
                                 double beta_hi, const QuadratureConfig& q) {
  if (degenerate(beta_lo, beta_hi, "segment_integral_beta")) return {};
  return adaptive_lobatto([&](double beta) { return pdf(alpha_fixed, beta); }, beta_lo, beta_hi, q);
}

QuadResult segment_integral_alpha(const DensityFunction& pdf, double beta_fixed, double alpha_lo,
                                  double alpha_hi, const QuadratureConfig& q) {
  if (degenerate(alpha_lo, alpha_hi, "segment_integral_alpha")) return {};
  return adaptive_lobatto([&](double alpha) { return pdf(alpha, beta_fixed); }, alpha_lo, alpha_hi, q);
}

namespace {

// Strip {beta_lo <= beta <= beta_hi, beta <= alpha <= alpha_top}. Half of
// the budget `tol` goes to the outer rule, half to the inner columns, whose
// errors are integrated over at most `width`.
QuadResult strip_integral(const DensityFunction& pdf, double beta_lo, double beta_hi, double alpha_top,
                          const QuadratureConfig& q, double tol, double width) {
  QuadratureConfig inner_q = q;
  inner_q.tol = 0.5 * tol / width;
  QuadratureConfig outer_q = q;
  outer_q.tol = 0.5 * tol;
  QuadResult inner_total;
  auto column = [&](double beta) {
    const QuadResult inner = segment_integral_alpha(pdf, beta, beta, alpha_top, inner_q);
    inner_total.evaluations += inner.evaluations;
    inner_total.depth_exceeded = inner_total.depth_exceeded || inner.depth_exceeded;
    return inner.value;
  };
  QuadResult out = adaptive_lobatto(column, beta_lo, beta_hi, outer_q);
  out.evaluations += inner_total.evaluations;
  out.depth_exceeded = out.depth_exceeded || inner_total.depth_exceeded;
  return out;
}

}  // namespace

QuadResult region_integral(const DensityFunction& pdf, const MemoryVector& mem, const QuadratureConfig& q) {
  ++region_calls;
  const auto corners = mem.corners();
  QuadResult total;
  for (std::size_t i = 1; i < corners.size(); ++i) {
    const double beta_lo = corners[i - 1].beta;
    const double beta_hi = corners[i].beta;
    if (!(beta_hi > beta_lo)) continue;
    const double alpha_top = corners[i].alpha;
    if (alpha_top < beta_hi) throw ContractViolation("region_integral: staircase crosses the diagonal");
    // Each strip gets the share of tol proportional to its width.
    const double width = mem.bounds().width();
    total += strip_integral(pdf, beta_lo, beta_hi, alpha_top, q, q.tol * (beta_hi - beta_lo) / width, width);
  }
  return total;
}

QuadResult total_mass(const DensityFunction& pdf, const PlaneBounds& bounds, const QuadratureConfig& q) {
  return strip_integral(pdf, bounds.min(), bounds.max(), bounds.max(), q, q.tol, bounds.width());
}

std::size_t region_integral_call_count() noexcept { return region_calls; }

}  // namespace preisach

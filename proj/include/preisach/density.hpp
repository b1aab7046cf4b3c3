#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string_view>
#include <variant>

#include "preisach/plane.hpp"
#include "preisach/quadrature.hpp"

namespace preisach {

class MemoryVector;

struct Uniform {
  double level = 1.0;
};

// rho = amplitude * exp(-decay * |(alpha, beta)|_2) + offset
struct BiasedExponential {
  double amplitude = 1.0;
  double decay = 1.0;
  double offset = 0.0;
};

struct GaussianComponent {
  double weight = 0.0;
  std::array<double, 2> mean{0.0, 0.0};  // (alpha, beta)
  // Symmetric covariance stored as {s_aa, s_ab, s_bb}.
  std::array<double, 3> cov{1.0, 0.0, 1.0};
};

struct GaussianMixture {
  std::array<GaussianComponent, 3> components;
};

// Parametric Preisach density rho(alpha, beta). Immutable after construction;
// parameters are validated in the constructor.
class DensityFunction {
 public:
  using Params = std::variant<Uniform, BiasedExponential, GaussianMixture>;

  DensityFunction(Uniform u);
  DensityFunction(BiasedExponential e);
  DensityFunction(GaussianMixture g);

  double operator()(double alpha, double beta) const noexcept {
    switch (kind_) {
      case Kind::kUniform:
        return level_;
      case Kind::kExponential:
        return amplitude_ * std::exp(-decay_ * std::hypot(alpha, beta)) + offset_;
      case Kind::kGaussian:
        break;
    }
    double sum = 0.0;
    for (const auto& g : gauss_) {
      const double da = alpha - g.mean_a;
      const double db = beta - g.mean_b;
      const double quad = g.inv_aa * da * da + 2.0 * g.inv_ab * da * db + g.inv_bb * db * db;
      sum += g.scale * std::exp(-0.5 * quad);
    }
    return sum;
  }

  const Params& params() const noexcept { return params_; }
  std::string_view name() const noexcept;

 private:
  enum class Kind { kUniform, kExponential, kGaussian };
  struct Prepared {
    double scale = 0.0;  // weight / (2 pi sqrt(det))
    double mean_a = 0.0, mean_b = 0.0;
    double inv_aa = 0.0, inv_ab = 0.0, inv_bb = 0.0;
  };

  Params params_;
  Kind kind_;
  double level_ = 0.0;
  double amplitude_ = 0.0, decay_ = 0.0, offset_ = 0.0;
  std::array<Prepared, 3> gauss_{};
};

inline double eval(const DensityFunction& pdf, double alpha, double beta) { return pdf(alpha, beta); }

/// Integral of rho(alpha_fixed, beta) over beta in [beta_lo, beta_hi].
/// Degenerate intervals (within 1e-12 roundoff) give exactly 0.
QuadResult segment_integral_beta(const DensityFunction& pdf, double alpha_fixed, double beta_lo,
                                 double beta_hi, const QuadratureConfig& q);

/// Integral of rho(alpha, beta_fixed) over alpha in [alpha_lo, alpha_hi].
QuadResult segment_integral_alpha(const DensityFunction& pdf, double beta_fixed, double alpha_lo,
                                  double alpha_hi, const QuadratureConfig& q);

/// Mass of P+ (the part of P below the staircase interface encoded by mem).
/// Each pair of consecutive corners c[i-1], c[i] with distinct beta bounds the
/// strip {c[i-1].beta <= beta <= c[i].beta, beta <= alpha <= c[i].alpha},
/// integrated as an iterated quadrature (outer beta, inner alpha).
QuadResult region_integral(const DensityFunction& pdf, const MemoryVector& mem, const QuadratureConfig& q);

/// Mass of the whole triangle P.
QuadResult total_mass(const DensityFunction& pdf, const PlaneBounds& bounds, const QuadratureConfig& q);

// Number of region_integral invocations on the calling thread; lets tests
// check that the state-space step never falls back to a double integral.
std::size_t region_integral_call_count() noexcept;

}  // namespace preisach

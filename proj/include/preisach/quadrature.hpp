#pragma once

#include <cmath>
#include <cstddef>
#include <limits>

#include "preisach/error.hpp"

namespace preisach {

struct QuadratureConfig {
  double tol = 1e-6;  // absolute error tolerance
  int max_depth = 50;

  void validate() const {
    if (!(tol > 0.0)) throw ContractViolation("QuadratureConfig.tol must be > 0");
    if (max_depth < 1) throw ContractViolation("QuadratureConfig.max_depth must be >= 1");
  }
};

struct QuadResult {
  double value = 0.0;
  bool depth_exceeded = false;  // refinement hit the cap; value is the best estimate
  std::size_t evaluations = 0;

  QuadResult& operator+=(const QuadResult& other) {
    value += other.value;
    depth_exceeded = depth_exceeded || other.depth_exceeded;
    evaluations += other.evaluations;
    return *this;
  }
};

namespace detail {

inline constexpr double kLobattoAlpha = 0.816496580927726;  // sqrt(2/3)
inline constexpr double kLobattoBeta = 0.447213595499958;   // 1/sqrt(5)

// Four-point Gauss-Lobatto estimate with its seven-point Kronrod extension on
// [a, b]; the Kronrod value is returned and |kronrod - lobatto| drives the split.
template <class F>
class LobattoStepper {
 public:
  LobattoStepper(const F& f, double tol, int max_depth, double hmin)
      : f_(f), tol_(tol), max_depth_(max_depth), hmin_(hmin) {}

  double step(double a, double b, double fa, double fb, int depth) {
    const double h = 0.5 * (b - a);
    const double c = 0.5 * (a + b);
    const double x_ll = c - kLobattoAlpha * h;
    const double x_l = c - kLobattoBeta * h;
    const double x_r = c + kLobattoBeta * h;
    const double x_rr = c + kLobattoAlpha * h;
    const double f_ll = f_(x_ll);
    const double f_l = f_(x_l);
    const double f_c = f_(c);
    const double f_r = f_(x_r);
    const double f_rr = f_(x_rr);
    evaluations += 5;

    const double lobatto = (h / 6.0) * (fa + fb + 5.0 * (f_l + f_r));
    const double kronrod =
        (h / 1470.0) * (77.0 * (fa + fb) + 432.0 * (f_ll + f_rr) + 625.0 * (f_l + f_r) + 672.0 * f_c);

    if (std::abs(kronrod - lobatto) <= tol_ || !std::isfinite(kronrod)) return kronrod;
    if (h < hmin_ || x_ll <= a || b <= x_rr) return kronrod;
    if (depth >= max_depth_) {
      depth_exceeded = true;
      return kronrod;
    }
    return step(a, x_ll, fa, f_ll, depth + 1) + step(x_ll, x_l, f_ll, f_l, depth + 1) +
           step(x_l, c, f_l, f_c, depth + 1) + step(c, x_r, f_c, f_r, depth + 1) +
           step(x_r, x_rr, f_r, f_rr, depth + 1) + step(x_rr, b, f_rr, fb, depth + 1);
  }

  std::size_t evaluations = 0;
  bool depth_exceeded = false;

 private:
  const F& f_;
  double tol_;
  int max_depth_;
  double hmin_;
};

}  // namespace detail

/// Adaptive Gauss-Lobatto quadrature of f over [a, b] (a < b).
///
/// Thirteen initial samples give a Kronrod reference used to relax the
/// tolerance when the seven-point refinement is already far more accurate than
/// the four-point rule (the classic quadl heuristic). Subintervals are then
/// bisected into six pieces until |kronrod - lobatto| <= tol on each.
template <class F>
QuadResult adaptive_lobatto(const F& f, double a, double b, const QuadratureConfig& q) {
  using detail::kLobattoAlpha;
  using detail::kLobattoBeta;
  constexpr double x1 = 0.942882415695480;
  constexpr double x2 = 0.641853342345781;
  constexpr double x3 = 0.236383199662150;
  constexpr double nodes[13] = {-1.0, -x1, -kLobattoAlpha, -x2, -kLobattoBeta, -x3, 0.0,
                                x3,   kLobattoBeta, x2, kLobattoAlpha, x1, 1.0};
  constexpr double w13[7] = {0.0158271919734802, 0.0942738402188500, 0.155071987336585,
                             0.188821573960182,  0.199773405226859,  0.224926465333340,
                             0.242611071901408};

  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double y[13];
  for (int i = 0; i < 13; ++i) y[i] = f(c + h * nodes[i]);

  const double lobatto = (h / 6.0) * (y[0] + y[12] + 5.0 * (y[4] + y[8]));
  const double kronrod7 =
      (h / 1470.0) * (77.0 * (y[0] + y[12]) + 432.0 * (y[2] + y[10]) + 625.0 * (y[4] + y[8]) + 672.0 * y[6]);
  double kronrod13 = w13[6] * y[6];
  for (int i = 0; i < 6; ++i) kronrod13 += w13[i] * (y[i] + y[12 - i]);
  kronrod13 *= h;

  double tol = q.tol;
  const double r = std::abs(kronrod7 - kronrod13) / (std::abs(lobatto - kronrod13) + std::numeric_limits<double>::min());
  if (r > 0.0 && r < 1.0) tol /= r;

  const double hmin = std::numeric_limits<double>::epsilon() / 1024.0 * std::abs(b - a);
  detail::LobattoStepper<F> stepper(f, tol, q.max_depth, hmin);
  QuadResult out;
  out.value = stepper.step(a, b, y[0], y[12], 1);
  out.evaluations = 13 + stepper.evaluations;
  out.depth_exceeded = stepper.depth_exceeded;
  return out;
}

}  // namespace preisach

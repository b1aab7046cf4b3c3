#include <gtest/gtest.h>

#include <random>

#include "preisach/cspm.hpp"
#include "preisach/experiments.hpp"
#include "preisach/metrics.hpp"
#include "preisach/sspm.hpp"
#include "support.hpp"

using namespace preisach;

namespace {

const PlaneBounds kUnit(-1.0, 1.0);

SspmState negative_start(double total) {
  return SspmState::from_memory(saturation_state(kUnit, Saturation::kNegative), -total);
}

}  // namespace

TEST(Sspm, FirstStepFromSaturation) {
  const DensityFunction u(Uniform{1.0});
  const SspmState s = sspm_step(negative_start(2.0), -0.9, u, {}, {});
  EXPECT_NEAR(s.y, -1.99, 1e-14);
  EXPECT_NEAR(s.y, (-0.9 + 1) * (-0.9 + 1) - 2.0, 1e-14);
  EXPECT_EQ(s.x_prev, -0.9);
  EXPECT_EQ(s.mem.level(), -0.9);
}

TEST(Sspm, ZeroStepUnchanged) {
  const DensityFunction g = preset_density("gaussian");
  const SspmState a = SspmState::from_memory(ground_state(kUnit, 4), 0.1);
  const SspmState b = sspm_step(a, 0.0, g, {}, {});
  EXPECT_EQ(b.y, a.y);
  EXPECT_EQ(b.mem, a.mem);
}

TEST(Sspm, BrokenInvariantRejected) {
  SspmState s = negative_start(2.0);
  s.x_prev = 0.3;
  EXPECT_THROW(sspm_step(s, 0.5, DensityFunction(Uniform{1.0}), {}, {}), ContractViolation);
}

TEST(Sspm, RampIsExactForUniform) {
  std::vector<double> xs;
  for (int k = 1; k <= 1000; ++k) xs.push_back(-1.0 + 0.002 * k);
  SspmState s = negative_start(2.0);
  const auto ys = run_sequence(s, xs, DensityFunction(Uniform{1.0}), {}, {});
  EXPECT_NEAR(ys.back(), 2.0, 1e-6);
  EXPECT_EQ(s.mem, saturation_state(kUnit, Saturation::kPositive));
}

TEST(Sspm, DescendingBranchIsNegative) {
  SspmState s = SspmState::from_memory(saturation_state(kUnit, Saturation::kPositive), 2.0);
  const DensityFunction e = preset_density("exponential");
  double y = s.y;
  for (double x = 0.9; x >= -1.0; x -= 0.1) {
    s = sspm_step(std::move(s), x, e, {}, {});
    EXPECT_LT(s.y, y);
    y = s.y;
  }
}

TEST(Sspm, ConstantSequence) {
  SspmState s = SspmState::from_memory(ground_state(kUnit, 8), 0.25);
  const std::vector<double> xs(50, 0.0);
  for (double y : run_sequence(s, xs, preset_density("gaussian"), {}, {})) EXPECT_EQ(y, 0.25);
}

TEST(Sspm, NeverCallsRegionIntegral) {
  const auto seq = major_loop_sine(1.0, 1000.0, 2.0);
  SspmState s = negative_start(1.0);
  const auto before = region_integral_call_count();
  run_sequence(s, seq.x, preset_density("gaussian"), {1e-5, 50}, {});
  EXPECT_EQ(region_integral_call_count(), before);
}

TEST(Sspm, MajorLoopClosesAndTracksCspm) {
  const QuadratureConfig q{1e-5, 50};
  const auto seq = major_loop_sine(1.0, 1000.0, 1.0);
  for (const auto* name : {"uniform", "exponential", "gaussian"}) {
    const DensityFunction pdf = preset_density(name);
    const auto neg = saturation_state(kUnit, Saturation::kNegative);
    const double y0 = cspm_output(pdf, neg, q).value;
    const auto ys = simulate_sspm(pdf, q, {}, {}, neg, y0, seq.x);
    const auto yc = simulate_cspm(pdf, q, neg, seq.x);
    const auto [lo, hi] = std::minmax_element(ys.begin(), ys.end());
    EXPECT_NEAR(ys.back(), ys.front(), 1e-3 * (*hi - *lo)) << name;
    EXPECT_LE(error_metrics(relative_error_series(ys, yc)).max, 0.1) << name;
  }
}

TEST(Sspm, WipingStepUsesSurvivor) {
  // Step from 0.1 to 0.3 crosses the 0.2 maximum: the segment starts at the
  // margin's beta, not at the wiped corner's.
  const DensityFunction u(Uniform{1.0});
  MemoryVector m({{1, -1}, {0.2, -1}, {0.2, 0.1}, {0.1, 0.1}}, kUnit);
  const SspmState s = sspm_step(SspmState::from_memory(m, 0.0), 0.3, u, {}, {});
  EXPECT_NEAR(s.y, 2.0 * 0.2 * (0.2 - (-1.0)), 1e-14);
}

TEST(Sspm, SubsteppingReducesWipeError) {
  const DensityFunction g = preset_density("gaussian");
  const QuadratureConfig q{1e-9, 50};
  std::mt19937_64 rng(2);
  const auto xs = test_support::random_walk(rng, 300, -1.0, 1.0, 0.2);
  const auto start = ground_state(kUnit, 16);
  const double y0 = cspm_output(g, start, q).value;
  const auto yc = simulate_cspm(g, q, start, xs);
  SamplingConfig coarse, fine;
  fine.substep_threshold = 0.005;
  const double e_coarse = error_metrics(relative_error_series(simulate_sspm(g, q, coarse, {}, start, y0, xs), yc)).max;
  const double e_fine = error_metrics(relative_error_series(simulate_sspm(g, q, fine, {}, start, y0, xs), yc)).max;
  EXPECT_LT(e_fine, e_coarse);
}

TEST(Sspm, ReanchorAtSaturation) {
  const DensityFunction g = preset_density("gaussian");
  const QuadratureConfig q{1e-3, 50};
  const auto neg = saturation_state(kUnit, Saturation::kNegative);
  const double total = cspm_output(g, saturation_state(kUnit, Saturation::kPositive), q).value;
  std::vector<double> xs;
  for (int k = 1; k <= 20; ++k) xs.push_back(-1.0 + 0.1 * k);
  SspmState s = SspmState::from_memory(neg, -total);
  run_sequence(s, xs, g, q, {}, SspmOptions{true, false});
  EXPECT_EQ(s.y, total);
}

TEST(Sspm, StrictFormulaDiffers) {
  const DensityFunction u(Uniform{1.0});
  const SspmState a = sspm_step(negative_start(2.0), -0.9, u, {}, {}, SspmOptions{false, true});
  EXPECT_GT(std::abs(a.y + 1.99), 1e-3);
}

TEST(Sspm, ModelWrapperMatchesFold) {
  const auto seq = major_loop_sine(0.7, 500.0, 1.0);
  const DensityFunction e = preset_density("exponential");
  SspmState s = negative_start(1.0);
  const auto ys = run_sequence(s, seq.x, e, {}, {});
  SspmModel model(e, {}, {}, negative_start(1.0));
  for (std::size_t k = 0; k < ys.size(); ++k) ASSERT_EQ(model.step(seq.x[k]), ys[k]);
  EXPECT_EQ(model.memory(), s.mem);
}

TEST(SspmProperty, WipingOutOnOutputs) {
  const DensityFunction g = preset_density("gaussian");
  const QuadratureConfig q{1e-8, 50};
  std::mt19937_64 rng(8);
  const auto start = ground_state(kUnit, 8);
  const double y0 = cspm_output(g, start, q).value;
  // Two different histories, then the same dominating maximum and tail. The
  // memories coincide exactly and so do all increments (up to the rounding of y).
  std::vector<double> tail{0.65};
  for (int k = 1; k <= 20; ++k) tail.push_back(0.65 + 0.01 * k);
  for (int k = 1; k <= 40; ++k) tail.push_back(0.85 - 0.02 * k);
  auto history = [&](double lo, double hi) {
    std::vector<double> xs = test_support::random_walk(rng, 400, lo, hi, 0.01);
    xs.insert(xs.end(), tail.begin(), tail.end());
    return xs;
  };
  const auto xa = history(-0.6, 0.6);
  const auto xb = history(-0.3, 0.2);
  MemoryVector ma = start, mb = start;
  const auto ya = simulate_sspm(g, q, {}, {}, start, y0, xa, &ma);
  const auto yb = simulate_sspm(g, q, {}, {}, start, y0, xb, &mb);
  EXPECT_EQ(ma, mb);
  const std::size_t na = xa.size() - tail.size(), nb = xb.size() - tail.size();
  for (std::size_t k = 1; k < tail.size(); ++k)
    ASSERT_NEAR(ya[na + k] - ya[na + k - 1], yb[nb + k] - yb[nb + k - 1], 1e-12) << k;
}

TEST(SspmProperty, ResamplingWithinConvergenceBound) {
  const DensityFunction g = preset_density("gaussian");
  const QuadratureConfig q{1e-9, 50};
  MultisineSpec spec;
  spec.duration = 2.0;
  spec.peak = 0.8;
  spec.rate = 1000.0;
  const auto a = multisine(spec);
  spec.rate = 2000.0;
  const auto b = multisine(spec);
  auto [sa, ya] = settled_start(g, q, InitSpec{InitSpec::Kind::kGround, 64, true}, kUnit, a.x.front());
  const auto ys_a = simulate_sspm(g, q, {1000.0, 0.0}, {}, sa, ya, a.x);
  const auto ys_b = simulate_sspm(g, q, {2000.0, 0.0}, {}, sa, ya, b.x);
  const auto yc_a = simulate_cspm(g, q, sa, a.x);
  double dev_a = 0.0;
  for (std::size_t k = 0; k < ys_a.size(); ++k) dev_a = std::max(dev_a, std::abs(ys_a[k] - yc_a[k]));
  // The coarser run's deviation bounds the change in the final output.
  EXPECT_LE(std::abs(ys_a.back() - ys_b[2 * (ys_a.size() - 1)]), 2.0 * dev_a);
}

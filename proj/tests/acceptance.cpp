// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "preisach/cspm.hpp"
#include "preisach/experiments.hpp"
#include "preisach/metrics.hpp"
#include "preisach/oracle.hpp"
#include "preisach/sspm.hpp"

using namespace preisach;

namespace {

const PlaneBounds kUnit(-1.0, 1.0);
const char* kPdfs[] = {"uniform", "exponential", "gaussian"};
int failures = 0;

void report(bool ok, const char* id, const std::string& detail) {
  std::printf("[%s] %s %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double max_rel(const std::vector<double>& ys, const std::vector<double>& ref) {
  return error_metrics(relative_error_series(ys, ref)).max;
}

void criterion_accuracy() {
  const QuadratureConfig q{1e-5, 50};
  const auto seq = major_loop_sine(1.0, 1000.0, 1.0);
  const auto neg = saturation_state(kUnit, Saturation::kNegative);
  bool ok = true;
  std::string detail;
  for (const char* name : kPdfs) {
    const DensityFunction pdf = preset_density(name);
    const double y0 = cspm_output(pdf, neg, q).value;
    const double e = max_rel(simulate_sspm(pdf, q, {}, {}, neg, y0, seq.x), simulate_cspm(pdf, q, neg, seq.x));
    ok = ok && e <= 0.15;
    detail += std::string(" ") + name + "=" + fmt("%.4f%%", e);
  }
  report(ok, "C1 accuracy, SSPM vs CSPM(1e-5) on the major loop, e_max <= 0.15%:", detail);
}

void criteria_bench() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto rows = run_bench(Config{});
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::map<std::string, double> tau;
  for (const auto& r : rows) tau[r.pdf + "/" + r.model + "/" + fmt("%g", r.tol)] = r.tau_mean_ms;

  bool faster = true;
  for (const auto& r : rows)
    if (r.model == "sspm" && !(r.tau_mean_ms < tau[r.pdf + "/cspm/" + fmt("%g", r.tol)])) faster = false;

  bool ok = rows.size() == 18 && seconds < 120.0 && faster;
  std::string detail = fmt(" rows=%g", static_cast<double>(rows.size())) + fmt(" sweep=%.1fs", seconds);
  for (const char* name : kPdfs) {
    const std::string p = name;
    const double ratio = tau[p + "/cspm/1e-05"] / tau[p + "/sspm/1e-05"];
    ok = ok && ratio >= 10.0;
    detail += " " + p + "=" + fmt("%.1fx", ratio);
  }
  report(ok, "C2 speedup, mean CSPM/SSPM loop time at tol 1e-5 >= 10x, sweep < 120 s:", detail);

  ok = true;
  detail.clear();
  for (const char* name : kPdfs) {
    const std::string p = name;
    const double g_sspm = tau[p + "/sspm/1e-05"] / tau[p + "/sspm/0.001"];
    const double g_cspm = tau[p + "/cspm/1e-05"] / tau[p + "/cspm/0.001"];
    ok = ok && g_sspm <= 5.0 && g_cspm >= 2.0;
    detail += " " + p + ": sspm " + fmt("%.2fx", g_sspm) + " cspm " + fmt("%.2fx", g_cspm) + ";";
  }
  report(ok, "C3 tolerance scaling 1e-3 -> 1e-5, SSPM growth <= 5x and CSPM growth >= 2x:", detail);
}

void criterion_oracle() {
  const QuadratureConfig q{1e-5, 50};
  const auto seq = major_loop_sine(1.0, 1000.0, 1.0);
  const auto neg = saturation_state(kUnit, Saturation::kNegative);
  bool ok = true;
  std::string detail;
  for (const char* name : kPdfs) {
    const DensityFunction pdf = preset_density(name);
    const double y0 = cspm_output(pdf, neg, q).value;
    const auto ys = simulate_sspm(pdf, q, {}, {}, neg, y0, seq.x);
    const auto yc = simulate_cspm(pdf, q, neg, seq.x);
    const auto yo = oracle_run(pdf, kUnit, 2000, seq.x);
    const double worst = std::max({max_rel(ys, yc), max_rel(yo, yc), max_rel(ys, yo)});
    ok = ok && worst <= 0.5;
    detail += std::string(" ") + name + "=" + fmt("%.4f%%", worst);
  }
  report(ok, "C4 three-way oracle (n=2000), max pairwise e_max <= 0.5%:", detail);
}

std::vector<double> walk(std::mt19937_64& rng, std::size_t n, double lo, double hi, double step) {
  std::uniform_real_distribution<double> u(-step, step);
  std::vector<double> xs;
  double x = 0.5 * (lo + hi);
  for (std::size_t k = 0; k < n; ++k) xs.push_back(x = std::clamp(x + u(rng), lo, hi));
  return xs;
}

void criterion_properties() {
  std::mt19937_64 rng(2024);

  // Wiping-out: a dominating maximum erases the history bit-exactly.
  bool wipe = true;
  for (int trial = 0; trial < 200; ++trial) {
    MemoryVector m = ground_state(kUnit, 16);
    for (double x : walk(rng, 100, -0.8, 0.8, 0.3)) m.apply(x);
    MemoryVector fresh = ground_state(kUnit, 16);
    m.apply(0.9);
    fresh.apply(0.9);
    wipe = wipe && m == fresh;
    // and a dominating minimum erases a later history
    for (double x : walk(rng, 100, -0.8, 0.8, 0.3)) m.apply(x);
    m.apply(-0.85);
    fresh.apply(-0.85);
    wipe = wipe && m == fresh;
  }
  report(wipe, "C5a wiping-out, memory after a dominating maximum equals the memory without the history bit-exactly:", " 200 trials");

  // Congruency of CSPM minor-loop increments.
  const QuadratureConfig qc{1e-7, 50};
  double worst_cong = 0.0;
  for (const char* name : kPdfs) {
    const DensityFunction pdf = preset_density(name);
    std::vector<std::vector<double>> loops;
    for (int h = 0; h < 3; ++h) {
      CspmModel model(pdf, qc, ground_state(kUnit, 64));
      for (double x : walk(rng, 40, -0.95, 0.95, 0.5)) model.step(x);
      model.step(0.85 - 0.05 * h);
      model.step(-0.9 + 0.1 * h);
      model.step(0.5);
      const double base = model.step(0.5);
      std::vector<double> inc;
      for (int k = 1; k <= 16; ++k) inc.push_back(model.step(0.5 - 0.05 * k) - base);
      for (int k = 1; k <= 16; ++k) inc.push_back(model.step(-0.3 + 0.05 * k) - base);
      loops.push_back(inc);
    }
    for (std::size_t h = 1; h < loops.size(); ++h)
      for (std::size_t k = 0; k < loops[0].size(); ++k) worst_cong = std::max(worst_cong, std::abs(loops[h][k] - loops[0][k]));
  }
  report(worst_cong <= 4.0 * qc.tol, "C5b congruency, CSPM minor-loop increments agree within 4*tol:",
         fmt(" max diff=%.3g", worst_cong) + fmt(" bound=%.3g", 4.0 * qc.tol));

  // Rate independence: CSPM bit-identical under time rescaling, SSPM at 2x
  // resampling within its own deviation bound.
  const QuadratureConfig q{1e-5, 50};
  const DensityFunction g = preset_density("gaussian");
  MultisineSpec spec;
  spec.duration = 2.0;
  spec.peak = 0.8;
  spec.rate = 1000.0;
  Config slow, fast;
  slow.set("pdf.type", "gaussian");
  slow.set("signal.type", "multisine");
  slow.set("signal.duration", "2");
  slow.set("signal.peak", "0.8");
  slow.set("model", "cspm");
  fast = slow;
  slow.set("sampling.rate", "1000");
  fast.set("sampling.rate", "1000");
  preisach::Setup s_slow = build_setup(slow), s_fast = build_setup(fast);
  for (auto& t : s_fast.signal.t) t *= 0.25;
  s_fast.signal.rate *= 4.0;
  s_fast.sampling.rate *= 4.0;
  const bool cspm_identical = run_trajectory(s_slow).column("y_cspm") == run_trajectory(s_fast).column("y_cspm");

  const auto a = multisine(spec);
  spec.rate = 2000.0;
  const auto b = multisine(spec);
  auto [start, y0] = settled_start(g, q, InitSpec{}, kUnit, a.x.front());
  const auto ys_a = simulate_sspm(g, q, {1000.0, 0.0}, {}, start, y0, a.x);
  const auto ys_b = simulate_sspm(g, q, {2000.0, 0.0}, {}, start, y0, b.x);
  const auto yc_a = simulate_cspm(g, q, start, a.x);
  double dev = 0.0, shift = 0.0;
  for (std::size_t k = 0; k < ys_a.size(); ++k) {
    dev = std::max(dev, std::abs(ys_a[k] - yc_a[k]));
    shift = std::max(shift, std::abs(ys_a[k] - ys_b[2 * k]));
  }
  report(cspm_identical && shift <= 2.0 * dev, "C5c rate independence, CSPM bit-identical, SSPM 2x resampling within its deviation bound:",
         std::string(" cspm ") + (cspm_identical ? "identical" : "DIFFERENT") + fmt(" sspm shift=%.3g", shift) +
             fmt(" bound=%.3g", 2.0 * dev));

  // Loop closure after one period and saturation pinning.
  const auto loop = major_loop_sine(1.0, 1000.0, 2.0);
  bool closed = true, pinned = true;
  double worst_close = 0.0, worst_pin = 0.0;
  for (const char* name : kPdfs) {
    const DensityFunction pdf = preset_density(name);
    const auto neg = saturation_state(kUnit, Saturation::kNegative);
    const double y_neg = cspm_output(pdf, neg, q).value;
    for (const auto& ys : {simulate_sspm(pdf, q, {}, {}, neg, y_neg, loop.x), simulate_cspm(pdf, q, neg, loop.x)}) {
      const auto [lo, hi] = std::minmax_element(ys.begin(), ys.end());
      const double c = std::abs(ys[1000] - ys[0]) / (*hi - *lo);
      worst_close = std::max(worst_close, c);
      closed = closed && c <= 1e-3;
    }
    CspmModel model(pdf, q, ground_state(kUnit, 64));
    for (double x : walk(rng, 300, -0.9, 0.9, 0.3)) model.step(x);
    const double up = std::abs(model.step(1.0) - model.total_mass());
    for (double x : walk(rng, 300, -0.9, 0.9, 0.3)) model.step(x);
    const double down = std::abs(model.step(-1.0) + model.total_mass());
    worst_pin = std::max({worst_pin, up, down});
    pinned = pinned && up <= 2.0 * q.tol && down <= 2.0 * q.tol;
  }
  report(closed, "C5d loop closure after one period within 1e-3 of the output range:", fmt(" worst=%.3g", worst_close));
  report(pinned, "C5e saturation pinning y(x_max) = +mass, y(x_min) = -mass within 2*tol:",
         fmt(" worst=%.3g", worst_pin) + fmt(" bound=%.3g", 2.0 * q.tol));
}

void criterion_sampling() {
  bool ok = true;
  std::string detail;
  for (const char* name : kPdfs) {
    Config c;
    c.set("pdf.type", name);
    c.set("signal.type", "multisine");
    const SamplingStudyResult res = run_sampling_study(c);
    std::map<std::string, std::map<double, SamplingStudyRow>> by;
    for (const auto& r : res.summary) by[r.variant][r.rate] = r;
    for (const char* variant : {"symmetric", "biased"}) {
      const double e5 = by[variant][5000.0].error.max, e1 = by[variant][1000.0].error.max;
      ok = ok && e1 >= e5;
      detail += std::string(" ") + name + "/" + variant + ": 5k=" + fmt("%.4f%%", e5) + " 1k=" + fmt("%.4f%%", e1) + ";";
    }
    const double drift = by["biased"][1000.0].drift_pct;
    ok = ok && drift != 0.0;
    detail += " biased drift(1k)=" + fmt("%+.2e%%", drift) + ";";
  }
  report(ok, "C6 sampling study vs 10 kHz, e_max(1 kHz) >= e_max(5 kHz), biased drift non-zero:", detail);
}

void criterion_convergence() {
  const DensityFunction u = preset_density("uniform");
  const QuadratureConfig q{1e-10, 50};
  double sum = 0.0;
  std::string detail;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    double dev[2];
    for (int k = 0; k < 2; ++k) {
      MultisineSpec spec;
      spec.peak = 0.8;
      spec.seed = seed;
      spec.rate = 5000.0 * (k + 1);
      const auto seq = multisine(spec);
      auto [start, y0] = settled_start(u, q, InitSpec{}, kUnit, seq.x.front());
      const auto ys = simulate_sspm(u, q, {spec.rate, 0.0}, {}, start, y0, seq.x);
      const auto yc = simulate_cspm(u, q, start, seq.x);
      dev[k] = 0.0;
      for (std::size_t i = 0; i < ys.size(); i += static_cast<std::size_t>(k + 1))
        dev[k] = std::max(dev[k], std::abs(ys[i] - yc[i]));
    }
    sum += dev[0] / dev[1];
    detail += fmt(" %.2f", dev[0] / dev[1]);
  }
  const double mean = sum / 5.0;
  report(mean >= 1.8, "C7 convergence, 5 kHz -> 10 kHz reduces max SSPM-CSPM deviation >= 1.8x (mean of 5 seeds):",
         fmt(" mean=%.2f; per seed", mean) + detail);
}

}  // namespace

int main() {
  criterion_accuracy();
  criteria_bench();
  criterion_oracle();
  criterion_properties();
  criterion_sampling();
  criterion_convergence();
  std::printf("%s: %d criterion line(s) failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}

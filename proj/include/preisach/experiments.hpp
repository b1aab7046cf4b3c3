#pragma once

#include <optional>
#include <string>
#include <vector>

#include "preisach/config.hpp"
#include "preisach/cspm.hpp"
#include "preisach/metrics.hpp"
#include "preisach/signals.hpp"
#include "preisach/sspm.hpp"

namespace preisach {

enum class ModelSelection { kSspm, kCspm, kBoth, kAll };

struct InitSpec {
  enum class Kind { kNegative, kPositive, kGround };
  Kind kind = Kind::kNegative;
  int steps = 64;
  // Apply the first sample exactly (by double integration) before stepping.
  bool settle = true;
};

// Everything a run needs, fully validated from a Config before any work.
struct Setup {
  DensityFunction pdf;
  PlaneBounds bounds;
  QuadratureConfig quadrature;
  SamplingConfig sampling;
  SspmOptions sspm;
  InitSpec init;
  InputSequence signal;
  ModelSelection model = ModelSelection::kSspm;
  int oracle_n = 2000;
  double oracle_threshold_pct = 0.5;
  std::string output_path;
};

Setup build_setup(const Config& cfg);

// Densities used by the benchmark for the U/E/G cases on [-1, 1].
DensityFunction preset_density(const std::string& type);
// pdf.type plus its parameter keys; missing parameters come from the preset.
DensityFunction density_from_config(const Config& cfg, const std::string& type);

MemoryVector initial_memory(const InitSpec& init, const PlaneBounds& bounds);
// Initial memory with x0 applied (when init.settle) and its exact output.
std::pair<MemoryVector, double> settled_start(const DensityFunction& pdf, const QuadratureConfig& q,
                                              const InitSpec& init, const PlaneBounds& bounds, double x0);

std::vector<double> simulate_cspm(const DensityFunction& pdf, const QuadratureConfig& q, const MemoryVector& start,
                                  std::span<const double> xs);
std::vector<double> simulate_sspm(const DensityFunction& pdf, const QuadratureConfig& q, const SamplingConfig& s,
                                  const SspmOptions& opts, const MemoryVector& start, double y0,
                                  std::span<const double> xs, MemoryVector* final_memory = nullptr);

// Column-major numeric table written as CSV with %.17g.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> data;

  std::string to_csv() const;
  const std::vector<double>& column(const std::string& name) const;
};

Table run_trajectory(const Setup& setup, MemoryVector* final_memory = nullptr);

struct BenchOptions {
  bool serial_timing = true;
};

// {pdfs} x {tols} x {models}; errors against CSPM at bench.ref_tol (1e-5).
std::vector<MetricsReport> run_bench(const Config& cfg, const BenchOptions& opts = {});

struct SamplingStudyRow {
  std::string variant;
  double rate = 0.0;
  ErrorStats error;        // vs the reference-rate run at shared instants
  double drift_pct = 0.0;  // mean signed error
};

struct SamplingStudyResult {
  std::vector<SamplingStudyRow> summary;
  Table trajectories;  // at the instants shared by every rate

  std::string summary_csv() const;
};

SamplingStudyResult run_sampling_study(const Config& cfg);

struct OracleCheckReport {
  double e_sspm_cspm = 0.0;
  double e_oracle_cspm = 0.0;
  double e_sspm_oracle = 0.0;
  double threshold_pct = 0.0;
  int n = 0;

  bool pass() const noexcept {
    return e_sspm_cspm <= threshold_pct && e_oracle_cspm <= threshold_pct && e_sspm_oracle <= threshold_pct;
  }
  std::string text() const;
};

OracleCheckReport run_oracle_check(const Config& cfg);

}  // namespace preisach

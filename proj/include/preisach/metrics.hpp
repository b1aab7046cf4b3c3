#pragma once

#include <span>
#include <string>
#include <vector>

namespace preisach {

struct ErrorStats {
  double max = 0.0;
  double mean = 0.0;
  double std = 0.0;  // population (divide by N)
};

// One benchmark row. Times are per closed loop in ms, errors in percent.
struct MetricsReport {
  std::string pdf;
  double tol = 0.0;
  std::string model;
  double tau_max_ms = 0.0;
  double tau_mean_ms = 0.0;
  double tau_std_ms = 0.0;
  double e_max_pct = 0.0;
  double e_mean_pct = 0.0;
  double e_std_pct = 0.0;

  static std::string csv_header();
  std::string csv_row() const;
};

/// e_k = |y_k - ref_k| / |max(ref) - min(ref)| * 100.
std::vector<double> relative_error_series(std::span<const double> ys, std::span<const double> ys_ref);

/// Max, mean and population standard deviation.
ErrorStats error_metrics(std::span<const double> errs);

/// Same statistics over per-loop wall-clock durations, converted from s to ms.
ErrorStats timing_metrics(std::span<const double> per_loop_seconds);

}  // namespace preisach

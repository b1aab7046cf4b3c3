#include "preisach/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "preisach/error.hpp"

namespace preisach {

std::string MetricsReport::csv_header() {
  return "pdf,tol,model,tau_max_ms,tau_mean_ms,tau_std_ms,e_max_pct,e_mean_pct,e_std_pct";
}

std::string MetricsReport::csv_row() const {
  char buf[512];
  std::snprintf(buf, sizeof buf, "%s,%g,%s,%.6g,%.6g,%.6g,%.6g,%.6g,%.6g", pdf.c_str(), tol, model.c_str(),
                tau_max_ms, tau_mean_ms, tau_std_ms, e_max_pct, e_mean_pct, e_std_pct);
  return buf;
}

std::vector<double> relative_error_series(std::span<const double> ys, std::span<const double> ys_ref) {
  if (ys.size() != ys_ref.size()) throw ContractViolation("relative_error_series: length mismatch");
  if (ys_ref.empty()) throw ContractViolation("relative_error_series: empty reference");
  const auto [lo, hi] = std::minmax_element(ys_ref.begin(), ys_ref.end());
  const double range = std::abs(*hi - *lo);
  if (range == 0.0) throw ContractViolation("relative_error_series: reference has zero range");
  std::vector<double> e(ys.size());
  for (std::size_t k = 0; k < ys.size(); ++k) e[k] = std::abs(ys[k] - ys_ref[k]) / range * 100.0;
  return e;
}

ErrorStats error_metrics(std::span<const double> errs) {
  if (errs.empty()) throw ContractViolation("error_metrics: empty series");
  ErrorStats s;
  s.max = *std::max_element(errs.begin(), errs.end());
  double sum = 0.0;
  for (double e : errs) sum += e;
  s.mean = sum / static_cast<double>(errs.size());
  double var = 0.0;
  for (double e : errs) var += (e - s.mean) * (e - s.mean);
  s.std = std::sqrt(var / static_cast<double>(errs.size()));
  return s;
}

ErrorStats timing_metrics(std::span<const double> per_loop_seconds) {
  std::vector<double> ms(per_loop_seconds.begin(), per_loop_seconds.end());
  for (double& v : ms) v *= 1e3;
  return error_metrics(ms);
}

}  // namespace preisach

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace preisach {

// Uniformly sampled input: t[k] = k / rate.
struct InputSequence {
  std::vector<double> t;
  std::vector<double> x;
  double rate = 1.0;

  std::size_t size() const noexcept { return x.size(); }
};

/// x(t) = amplitude * sin(2 pi t - pi/2): a 1 Hz sinusoid starting at -amplitude.
InputSequence major_loop_sine(double amplitude, double rate, double periods = 1.0);

struct MultisineSpec {
  double band_lo = 0.1;  // Hz
  double band_hi = 10.0;
  int tones = 20;        // log-spaced over [band_lo, band_hi]
  double bias = 0.0;
  double peak = 1.0;     // max |x - bias| of the continuous signal
  double duration = 10.0;
  double rate = 1000.0;
  std::uint64_t seed = 1;
};

/// Sum of equal-amplitude tones with seeded uniform random phases, mapped
/// affinely so the continuous signal spans [bias - peak, bias + peak]. The
/// mapping uses the signal's true extrema on [0, duration], so any two rates
/// agree bit-for-bit at shared instants.
InputSequence multisine(const MultisineSpec& spec);

/// Reads `t,x` (two columns) or `x` (one column, needs `rate`). An optional
/// non-numeric header line is skipped. Throws ParseError naming the line.
InputSequence load_csv(const std::string& path, std::optional<double> rate = std::nullopt);
void save_csv(const InputSequence& seq, const std::string& path);

}  // namespace preisach

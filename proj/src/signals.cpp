#include "preisach/signals.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "preisach/error.hpp"

namespace preisach {

namespace {

std::vector<double> time_axis(std::size_t n, double rate) {
  std::vector<double> t(n);
  for (std::size_t k = 0; k < n; ++k) t[k] = static_cast<double>(k) / rate;
  return t;
}

struct ToneSet {
  std::vector<double> omega;
  std::vector<double> phase;

  double value(double t) const {
    double s = 0.0;
    for (std::size_t i = 0; i < omega.size(); ++i) s += std::sin(omega[i] * t + phase[i]);
    return s;
  }
  double d1(double t) const {
    double s = 0.0;
    for (std::size_t i = 0; i < omega.size(); ++i) s += omega[i] * std::cos(omega[i] * t + phase[i]);
    return s;
  }
};

// Extrema of the analytic tone sum on [0, duration]: a dense scan brackets
// every critical point, bisection on the derivative pins it down.
std::pair<double, double> analytic_range(const ToneSet& tones, double duration, double band_hi) {
  const auto n = static_cast<std::size_t>(std::ceil(duration * band_hi * 64.0)) + 1;
  const double dt = duration / static_cast<double>(n);
  double lo = std::min(tones.value(0.0), tones.value(duration));
  double hi = std::max(tones.value(0.0), tones.value(duration));
  double prev = tones.d1(0.0);
  for (std::size_t k = 1; k <= n; ++k) {
    const double tk = std::min(duration, static_cast<double>(k) * dt);
    const double cur = tones.d1(tk);
    if ((prev > 0.0) != (cur > 0.0)) {
      double a = tk - dt, b = tk;
      const bool rising_at_a = prev > 0.0;
      for (int it = 0; it < 80 && b - a > 0.0; ++it) {
        const double m = 0.5 * (a + b);
        if (m <= a || m >= b) break;
        if ((tones.d1(m) > 0.0) == rising_at_a)
          a = m;
        else
          b = m;
      }
      const double t = 0.5 * (a + b);
      const double v = tones.value(t);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    prev = cur;
  }
  return {lo, hi};
}

}  // namespace

InputSequence major_loop_sine(double amplitude, double rate, double periods) {
  if (!(amplitude > 0.0)) throw ContractViolation("major_loop_sine: amplitude must be > 0");
  if (!(rate > 0.0) || !(periods > 0.0)) throw ContractViolation("major_loop_sine: rate and periods must be > 0");
  const auto n = static_cast<std::size_t>(std::llround(rate * periods));
  InputSequence seq{time_axis(n, rate), std::vector<double>(n), rate};
  for (std::size_t k = 0; k < n; ++k)
    seq.x[k] = amplitude * std::sin(2.0 * std::numbers::pi * seq.t[k] - 0.5 * std::numbers::pi);
  return seq;
}

InputSequence multisine(const MultisineSpec& spec) {
  if (!(spec.band_lo > 0.0 && spec.band_lo < spec.band_hi)) throw ContractViolation("multisine: need 0 < band_lo < band_hi");
  if (!(spec.rate > 2.0 * spec.band_hi)) throw ContractViolation("multisine: Nyquist violation (rate <= 2 * band_hi)");
  if (spec.tones < 1) throw ContractViolation("multisine: need at least one tone");
  if (!(spec.peak > 0.0) || !(spec.duration > 0.0)) throw ContractViolation("multisine: peak and duration must be > 0");

  ToneSet tones;
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  for (int i = 0; i < spec.tones; ++i) {
    const double frac = spec.tones == 1 ? 0.0 : static_cast<double>(i) / (spec.tones - 1);
    const double f = spec.band_lo * std::pow(spec.band_hi / spec.band_lo, frac);
    tones.omega.push_back(2.0 * std::numbers::pi * f);
    tones.phase.push_back(phase(rng));
  }
  const auto [lo, hi] = analytic_range(tones, spec.duration, spec.band_hi);
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  const auto n = static_cast<std::size_t>(std::llround(spec.duration * spec.rate));
  InputSequence seq{time_axis(n, spec.rate), std::vector<double>(n), spec.rate};
  for (std::size_t k = 0; k < n; ++k) seq.x[k] = spec.bias + spec.peak * (tones.value(seq.t[k]) - mid) / half;
  return seq;
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    std::string_view f = line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!f.empty() && (f.front() == ' ' || f.front() == '\t')) f.remove_prefix(1);
    while (!f.empty() && (f.back() == ' ' || f.back() == '\t' || f.back() == '\r')) f.remove_suffix(1);
    out.push_back(f);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

bool parse_double(std::string_view s, double& v) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
}

}  // namespace

InputSequence load_csv(const std::string& path, std::optional<double> rate) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  InputSequence seq;
  std::string line;
  std::size_t lineno = 0;
  std::size_t columns = 0;
  std::vector<std::size_t> sample_lines;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    const auto fields = split_fields(line);
    double a = 0.0, b = 0.0;
    const bool numeric = parse_double(fields[0], a);
    if (!numeric && seq.x.empty() && columns == 0) {
      columns = fields.size();  // header
      continue;
    }
    if (columns == 0) columns = fields.size();
    if (fields.size() != columns || columns > 2) throw ParseError(lineno, "expected " + std::to_string(columns) + " column(s)");
    if (!numeric) throw ParseError(lineno, "non-numeric value '" + std::string(fields[0]) + "'");
    sample_lines.push_back(lineno);
    if (columns == 2) {
      if (!parse_double(fields[1], b)) throw ParseError(lineno, "non-numeric value '" + std::string(fields[1]) + "'");
      seq.t.push_back(a);
      seq.x.push_back(b);
    } else {
      seq.x.push_back(a);
    }
  }
  if (seq.x.empty()) throw ParseError(0, path + ": no samples");

  if (columns == 1) {
    if (!rate || !(*rate > 0.0)) throw ParseError(0, path + ": single-column input needs a sampling rate");
    seq.rate = *rate;
    seq.t = time_axis(seq.x.size(), seq.rate);
    return seq;
  }
  if (seq.t.size() < 2) {
    seq.rate = rate.value_or(1.0);
    return seq;
  }
  const double dt = seq.t[1] - seq.t[0];
  if (!(dt > 0.0)) throw ParseError(sample_lines[1], "time axis must be strictly increasing");
  seq.rate = rate.value_or(1.0 / dt);
  const double expect = 1.0 / seq.rate;
  for (std::size_t k = 1; k < seq.t.size(); ++k) {
    const double step = seq.t[k] - seq.t[k - 1];
    if (std::abs(step - expect) > 1e-6 * expect)
      throw ParseError(sample_lines[k], "non-uniform time spacing");
  }
  return seq;
}

void save_csv(const InputSequence& seq, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError(0, "cannot write " + path);
  char buf[80];
  out << "t,x\n";
  for (std::size_t k = 0; k < seq.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", seq.t[k], seq.x[k]);
    out << buf;
  }
}

}  // namespace preisach

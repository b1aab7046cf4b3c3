#include "preisach/experiments.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <future>
#include <sstream>

#include "preisach/oracle.hpp"

namespace preisach {

namespace {

constexpr std::array<std::string_view, 70> kKnownKeys = {
    "model",          "init",           "init.settle",      "pdf.type",        "pdf.v",
    "pdf.A",          "pdf.B",          "pdf.C",            "pdf.w1",          "pdf.w2",
    "pdf.w3",         "pdf.mu1_alpha",  "pdf.mu1_beta",     "pdf.mu2_alpha",   "pdf.mu2_beta",
    "pdf.mu3_alpha",  "pdf.mu3_beta",   "pdf.sigma1_aa",    "pdf.sigma1_ab",   "pdf.sigma1_bb",
    "pdf.sigma2_aa",  "pdf.sigma2_ab",  "pdf.sigma2_bb",    "pdf.sigma3_aa",   "pdf.sigma3_ab",
    "pdf.sigma3_bb",  "bounds.min",     "bounds.max",       "signal.type",     "signal.amplitude",
    "signal.periods", "signal.band_lo", "signal.band_hi",   "signal.tones",    "signal.bias",
    "signal.peak",    "signal.duration", "signal.seed",     "signal.path",     "sampling.rate",
    "quadrature.tol", "quadrature.max_depth", "sspm.substep", "sspm.reanchor", "sspm.literal_segment",
    "output.path",    "output.summary", "oracle.n",         "oracle.threshold_pct", "bench.pdfs",
    "bench.tols",     "bench.models",   "bench.loops",      "bench.ref_tol",   "study.rates",
    "study.bias",     "study.tol",      "bench.min_seconds",              "",                "",
    "",               "",               "",                 "",                "",
    "",               "",               "",                 "",                ""};

template <class F>
auto with_key(const std::string& key, F&& f) {
  try {
    return f();
  } catch (const ContractViolation& e) {
    throw ConfigError(key, e.what());
  }
}

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ModelSelection parse_model(const std::string& s) {
  if (s == "sspm") return ModelSelection::kSspm;
  if (s == "cspm") return ModelSelection::kCspm;
  if (s == "both") return ModelSelection::kBoth;
  if (s == "all") return ModelSelection::kAll;
  throw ConfigError("model", "expected sspm, cspm, both or all; got '" + s + "'");
}

InitSpec parse_init(const Config& cfg) {
  InitSpec init;
  const std::string s = cfg.get_string("init", "saturation_neg");
  if (s == "saturation_neg") {
    init.kind = InitSpec::Kind::kNegative;
  } else if (s == "saturation_pos") {
    init.kind = InitSpec::Kind::kPositive;
  } else if (s.rfind("ground", 0) == 0) {
    init.kind = InitSpec::Kind::kGround;
    std::string rest = s.substr(6);
    rest.erase(0, rest.find_first_not_of(" :"));
    if (!rest.empty()) {
      Config tmp;
      tmp.set("init", rest);
      init.steps = static_cast<int>(tmp.get_int("init", 64));
    }
    if (init.steps < 1) throw ConfigError("init", "ground state needs K >= 1");
  } else {
    throw ConfigError("init", "expected saturation_neg, saturation_pos or 'ground K'; got '" + s + "'");
  }
  init.settle = cfg.get_bool("init.settle", true);
  return init;
}

InputSequence build_signal(const Config& cfg, const PlaneBounds& bounds, double rate) {
  const std::string type = cfg.get_string("signal.type", "major_loop");
  if (type == "major_loop") {
    const double amplitude = cfg.get_double("signal.amplitude", bounds.max());
    const double periods = cfg.get_double("signal.periods", 1.0);
    return with_key("signal.amplitude", [&] { return major_loop_sine(amplitude, rate, periods); });
  }
  if (type == "multisine") {
    MultisineSpec spec;
    spec.band_lo = cfg.get_double("signal.band_lo", spec.band_lo);
    spec.band_hi = cfg.get_double("signal.band_hi", spec.band_hi);
    spec.tones = static_cast<int>(cfg.get_int("signal.tones", spec.tones));
    spec.peak = cfg.get_double("signal.peak", 0.6);
    spec.bias = cfg.get_double("signal.bias", 0.0);
    spec.duration = cfg.get_double("signal.duration", spec.duration);
    spec.seed = static_cast<std::uint64_t>(cfg.get_int("signal.seed", 1));
    spec.rate = rate;
    return with_key("signal", [&] { return multisine(spec); });
  }
  if (type == "csv") {
    if (!cfg.has("signal.path")) throw ConfigError("signal.path", "required for signal.type = csv");
    std::optional<double> r;
    if (cfg.has("sampling.rate")) r = rate;
    try {
      return load_csv(cfg.get_string("signal.path", ""), r);
    } catch (const ParseError& e) {
      throw ConfigError("signal.path", e.what());
    }
  }
  throw ConfigError("signal.type", "expected major_loop, multisine or csv; got '" + type + "'");
}

}  // namespace

DensityFunction preset_density(const std::string& type) {
  if (type == "uniform") return DensityFunction(Uniform{0.5});
  if (type == "exponential") return DensityFunction(BiasedExponential{1.0, 5.0, 0.05});
  if (type == "gaussian") {
    GaussianMixture g;
    g.components[0] = {0.5, {0.2, -0.2}, {0.03, 0.01, 0.03}};
    g.components[1] = {0.3, {0.55, 0.15}, {0.02, -0.005, 0.04}};
    g.components[2] = {0.2, {-0.15, -0.6}, {0.04, 0.0, 0.015}};
    return DensityFunction(g);
  }
  throw ConfigError("pdf.type", "expected uniform, exponential or gaussian; got '" + type + "'");
}

DensityFunction density_from_config(const Config& cfg, const std::string& type) {
  const DensityFunction base = preset_density(type);
  return with_key("pdf", [&]() -> DensityFunction {
    if (type == "uniform") {
      Uniform u = std::get<Uniform>(base.params());
      u.level = cfg.get_double("pdf.v", u.level);
      return DensityFunction(u);
    }
    if (type == "exponential") {
      BiasedExponential e = std::get<BiasedExponential>(base.params());
      e.amplitude = cfg.get_double("pdf.A", e.amplitude);
      e.decay = cfg.get_double("pdf.B", e.decay);
      e.offset = cfg.get_double("pdf.C", e.offset);
      return DensityFunction(e);
    }
    GaussianMixture g = std::get<GaussianMixture>(base.params());
    for (int i = 0; i < 3; ++i) {
      const std::string n = std::to_string(i + 1);
      GaussianComponent& c = g.components[static_cast<std::size_t>(i)];
      c.weight = cfg.get_double("pdf.w" + n, c.weight);
      c.mean[0] = cfg.get_double("pdf.mu" + n + "_alpha", c.mean[0]);
      c.mean[1] = cfg.get_double("pdf.mu" + n + "_beta", c.mean[1]);
      c.cov[0] = cfg.get_double("pdf.sigma" + n + "_aa", c.cov[0]);
      c.cov[1] = cfg.get_double("pdf.sigma" + n + "_ab", c.cov[1]);
      c.cov[2] = cfg.get_double("pdf.sigma" + n + "_bb", c.cov[2]);
    }
    return DensityFunction(g);
  });
}

Setup build_setup(const Config& cfg) {
  std::vector<std::string_view> known(kKnownKeys.begin(), kKnownKeys.end());
  std::erase(known, std::string_view{});
  cfg.reject_unknown(known);

  ModelSelection model = parse_model(cfg.get_string("model", "sspm"));
  DensityFunction pdf = density_from_config(cfg, cfg.get_string("pdf.type", "uniform"));
  const PlaneBounds bounds = with_key("bounds", [&] {
    return PlaneBounds(cfg.get_double("bounds.min", -1.0), cfg.get_double("bounds.max", 1.0));
  });
  QuadratureConfig q;
  q.tol = cfg.get_double("quadrature.tol", 1e-5);
  q.max_depth = static_cast<int>(cfg.get_int("quadrature.max_depth", 50));
  with_key("quadrature", [&] {
    q.validate();
    return 0;
  });
  SamplingConfig s;
  s.rate = cfg.get_double("sampling.rate", 1000.0);
  s.substep_threshold = cfg.get_double("sspm.substep", 0.0);
  with_key("sampling", [&] {
    s.validate();
    return 0;
  });
  SspmOptions opts;
  opts.reanchor = cfg.get_bool("sspm.reanchor", false);
  opts.literal_segment = cfg.get_bool("sspm.literal_segment", false);
  InitSpec init = parse_init(cfg);
  InputSequence signal = build_signal(cfg, bounds, s.rate);
  if (signal.size() == 0) throw ConfigError("signal", "signal has no samples");
  if (cfg.get_string("signal.type", "major_loop") == "csv") s.rate = signal.rate;

  const long n = cfg.get_int("oracle.n", 2000);
  if (n < 2) throw ConfigError("oracle.n", "grid resolution must be >= 2");
  const double threshold = cfg.get_double("oracle.threshold_pct", 0.5);
  if (!(threshold > 0.0)) throw ConfigError("oracle.threshold_pct", "must be > 0");

  // Keys only some subcommands read are still type-checked here.
  for (const double t : cfg.get_doubles("bench.tols", {1e-3}))
    if (!(t > 0.0)) throw ConfigError("bench.tols", "tolerances must be > 0");
  for (const auto& p : cfg.get_strings("bench.pdfs", {"uniform"})) preset_density(p);
  for (const auto& m : cfg.get_strings("bench.models", {"cspm"}))
    if (m != "cspm" && m != "sspm") throw ConfigError("bench.models", "expected cspm and/or sspm; got '" + m + "'");
  if (cfg.get_int("bench.loops", 20) < 2) throw ConfigError("bench.loops", "need >= 2 loops (the first is warmup)");
  if (!(cfg.get_double("bench.ref_tol", 1e-5) > 0.0)) throw ConfigError("bench.ref_tol", "must be > 0");
  if (!(cfg.get_double("bench.min_seconds", 0.25) >= 0.0)) throw ConfigError("bench.min_seconds", "must be >= 0");
  for (const double r : cfg.get_doubles("study.rates", {1.0}))
    if (!(r > 0.0)) throw ConfigError("study.rates", "rates must be > 0");
  cfg.get_double("study.bias", 0.0);
  if (!(cfg.get_double("study.tol", 1e-8) > 0.0)) throw ConfigError("study.tol", "must be > 0");

  return Setup{std::move(pdf), bounds, q, s, opts, init, std::move(signal), model, static_cast<int>(n), threshold,
               cfg.get_string("output.path", "")};
}

MemoryVector initial_memory(const InitSpec& init, const PlaneBounds& bounds) {
  switch (init.kind) {
    case InitSpec::Kind::kPositive:
      return MemoryVector::saturation(bounds, Saturation::kPositive);
    case InitSpec::Kind::kGround:
      return MemoryVector::ground(bounds, init.steps);
    case InitSpec::Kind::kNegative:
      break;
  }
  return MemoryVector::saturation(bounds, Saturation::kNegative);
}

std::pair<MemoryVector, double> settled_start(const DensityFunction& pdf, const QuadratureConfig& q,
                                              const InitSpec& init, const PlaneBounds& bounds, double x0) {
  MemoryVector mem = initial_memory(init, bounds);
  if (init.settle) mem.apply(x0);
  const double y0 = cspm_output(pdf, mem, q).value;
  return {std::move(mem), y0};
}

std::vector<double> simulate_cspm(const DensityFunction& pdf, const QuadratureConfig& q, const MemoryVector& start,
                                  std::span<const double> xs) {
  CspmModel model(pdf, q, start);
  std::vector<double> ys;
  ys.reserve(xs.size());
  for (double x : xs) ys.push_back(model.step(x));
  return ys;
}

std::vector<double> simulate_sspm(const DensityFunction& pdf, const QuadratureConfig& q, const SamplingConfig& s,
                                  const SspmOptions& opts, const MemoryVector& start, double y0,
                                  std::span<const double> xs, MemoryVector* final_memory) {
  SspmState state = SspmState::from_memory(start, y0);
  std::vector<double> ys = run_sequence(state, xs, pdf, q, s, opts);
  if (final_memory) *final_memory = state.mem;
  return ys;
}

std::string Table::to_csv() const {
  std::string out;
  for (std::size_t c = 0; c < columns.size(); ++c) out += (c ? "," : "") + columns[c];
  out += '\n';
  const std::size_t rows = data.empty() ? 0 : data.front().size();
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < data.size(); ++c) {
      if (c) out += ',';
      out += format_g17(data[c][r]);
    }
    out += '\n';
  }
  return out;
}

const std::vector<double>& Table::column(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw std::out_of_range("no column " + name);
  return data[static_cast<std::size_t>(it - columns.begin())];
}

Table run_trajectory(const Setup& setup, MemoryVector* final_memory) {
  const auto& xs = setup.signal.x;
  auto [start, y0] = settled_start(setup.pdf, setup.quadrature, setup.init, setup.bounds, xs.front());
  Table table{{"t", "x"}, {setup.signal.t, xs}};

  const bool want_sspm = setup.model != ModelSelection::kCspm;
  const bool want_cspm = setup.model != ModelSelection::kSspm;
  std::vector<double> y_sspm, y_cspm;
  MemoryVector last = start;
  if (want_sspm) {
    y_sspm = simulate_sspm(setup.pdf, setup.quadrature, setup.sampling, setup.sspm, start, y0, xs, &last);
    table.columns.push_back("y_sspm");
    table.data.push_back(y_sspm);
  }
  if (want_cspm) {
    CspmModel model(setup.pdf, setup.quadrature, start);
    y_cspm.reserve(xs.size());
    for (double x : xs) y_cspm.push_back(model.step(x));
    if (!want_sspm) last = model.memory();
    table.columns.push_back("y_cspm");
    table.data.push_back(y_cspm);
  }
  if (setup.model == ModelSelection::kAll) {
    table.columns.push_back("y_oracle");
    table.data.push_back(oracle_run(setup.pdf, start, setup.oracle_n, xs));
  }
  if (want_sspm && want_cspm) {
    table.columns.push_back("e_rel_pct");
    table.data.push_back(relative_error_series(y_sspm, y_cspm));
  }
  if (final_memory) *final_memory = last;
  return table;
}

namespace {

using Clock = std::chrono::steady_clock;

struct BenchCell {
  std::string pdf;
  double tol;
  std::string model;
};

struct CellResult {
  std::vector<double> ys;
  std::vector<double> loop_seconds;
};

// Times at least `loops` closed loops, continuing until `min_seconds` of
// measured time has accumulated. Every loop starts from the same state and the
// reset happens outside the timed region. The first loop is warmup.
CellResult time_cell(const DensityFunction& pdf, const QuadratureConfig& q, const Setup& setup,
                     const std::string& model, long loops, double min_seconds) {
  const auto& xs = setup.signal.x;
  auto [start, y0] = settled_start(pdf, q, setup.init, setup.bounds, xs.front());
  CellResult out;
  out.ys.resize(xs.size());
  auto measure = [&](auto& m, auto&& reset) {
    double total = 0.0;
    for (long r = 0; r < loops || total < min_seconds; ++r) {
      reset(m);
      const auto t0 = Clock::now();
      for (std::size_t k = 0; k < xs.size(); ++k) out.ys[k] = m.step(xs[k]);
      const auto t1 = Clock::now();
      if (r == 0) continue;
      out.loop_seconds.push_back(std::chrono::duration<double>(t1 - t0).count());
      total += out.loop_seconds.back();
    }
  };
  if (model == "cspm") {
    CspmModel m(pdf, q, start);
    measure(m, [&](CspmModel& mm) { mm.reset(start); });
  } else {
    SspmModel m(pdf, q, setup.sampling, SspmState::from_memory(start, y0), setup.sspm);
    measure(m, [&](SspmModel& mm) { mm.reset(SspmState::from_memory(start, y0)); });
  }
  return out;
}

}  // namespace

std::vector<MetricsReport> run_bench(const Config& cfg, const BenchOptions& opts) {
  const Setup setup = build_setup(cfg);
  const auto pdfs = cfg.get_strings("bench.pdfs", {"uniform", "exponential", "gaussian"});
  const auto tols = cfg.get_doubles("bench.tols", {1e-3, 1e-4, 1e-5});
  const auto models = cfg.get_strings("bench.models", {"cspm", "sspm"});
  const long loops = cfg.get_int("bench.loops", 20);
  const double ref_tol = cfg.get_double("bench.ref_tol", 1e-5);
  const double min_seconds = cfg.get_double("bench.min_seconds", 0.25);

  std::vector<BenchCell> cells;
  for (const auto& p : pdfs)
    for (double t : tols)
      for (const auto& m : models) cells.push_back({p, t, m});

  auto run_cell = [&](const BenchCell& c) {
    const DensityFunction pdf = c.pdf == cfg.get_string("pdf.type", "") ? density_from_config(cfg, c.pdf)
                                                                        : preset_density(c.pdf);
    QuadratureConfig q = setup.quadrature;
    q.tol = c.tol;
    return time_cell(pdf, q, setup, c.model, loops, min_seconds);
  };

  std::vector<CellResult> results;
  if (opts.serial_timing) {
    for (const auto& c : cells) results.push_back(run_cell(c));
  } else {
    std::vector<std::future<CellResult>> jobs;
    for (const auto& c : cells) jobs.push_back(std::async(std::launch::async, run_cell, c));
    for (auto& j : jobs) results.push_back(j.get());
  }

  std::vector<MetricsReport> rows;
  for (const auto& p : pdfs) {
    // Error reference: CSPM at ref_tol, reused from the sweep when present.
    std::vector<double> ref;
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (cells[i].pdf == p && cells[i].model == "cspm" && cells[i].tol == ref_tol) ref = results[i].ys;
    if (ref.empty()) {
      const DensityFunction pdf = p == cfg.get_string("pdf.type", "") ? density_from_config(cfg, p) : preset_density(p);
      QuadratureConfig q = setup.quadrature;
      q.tol = ref_tol;
      auto [start, y0] = settled_start(pdf, q, setup.init, setup.bounds, setup.signal.x.front());
      ref = simulate_cspm(pdf, q, start, setup.signal.x);
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].pdf != p) continue;
      const ErrorStats tau = timing_metrics(results[i].loop_seconds);
      const ErrorStats err = error_metrics(relative_error_series(results[i].ys, ref));
      rows.push_back({p, cells[i].tol, cells[i].model, tau.max, tau.mean, tau.std, err.max, err.mean, err.std});
    }
  }
  return rows;
}

std::string SamplingStudyResult::summary_csv() const {
  std::string out = "variant,rate,e_max_pct,e_mean_pct,e_std_pct,drift_pct\n";
  char buf[256];
  for (const auto& r : summary) {
    std::snprintf(buf, sizeof buf, "%s,%g,%.6g,%.6g,%.6g,%.6g\n", r.variant.c_str(), r.rate, r.error.max,
                  r.error.mean, r.error.std, r.drift_pct);
    out += buf;
  }
  return out;
}

SamplingStudyResult run_sampling_study(const Config& cfg) {
  const Setup setup = build_setup(cfg);
  if (cfg.get_string("signal.type", "major_loop") != "multisine")
    throw ConfigError("signal.type", "the sampling study needs signal.type = multisine");
  const auto rates = cfg.get_doubles("study.rates", {10000.0, 5000.0, 1000.0});
  const double ref_rate = rates.front();
  for (double r : rates) {
    const double ratio = ref_rate / r;
    if (std::abs(ratio - std::round(ratio)) > 1e-9 || ratio < 1.0)
      throw ConfigError("study.rates", "every rate must divide the first (reference) rate");
  }
  MultisineSpec base;
  base.band_lo = cfg.get_double("signal.band_lo", base.band_lo);
  base.band_hi = cfg.get_double("signal.band_hi", base.band_hi);
  base.tones = static_cast<int>(cfg.get_int("signal.tones", base.tones));
  base.peak = cfg.get_double("signal.peak", 0.6);
  base.duration = cfg.get_double("signal.duration", base.duration);
  base.seed = static_cast<std::uint64_t>(cfg.get_int("signal.seed", 1));
  QuadratureConfig q = setup.quadrature;
  q.tol = cfg.get_double("study.tol", 1e-8);
  const std::vector<std::pair<std::string, double>> variants = {
      {"symmetric", 0.0}, {"biased", cfg.get_double("study.bias", 0.5 * base.peak)}};
  const double min_rate = *std::min_element(rates.begin(), rates.end());

  SamplingStudyResult result;
  result.trajectories.columns = {"variant", "t", "x", "y_ref"};
  result.trajectories.data.resize(4);
  for (std::size_t r = 1; r < rates.size(); ++r)
    result.trajectories.columns.push_back("e_" + format_g17(rates[r]) + "_pct");
  result.trajectories.data.resize(result.trajectories.columns.size());

  for (std::size_t v = 0; v < variants.size(); ++v) {
    std::vector<std::vector<double>> ys(rates.size());
    std::vector<InputSequence> seqs;
    for (std::size_t r = 0; r < rates.size(); ++r) {
      MultisineSpec spec = base;
      spec.bias = variants[v].second;
      spec.rate = rates[r];
      seqs.push_back(with_key("signal", [&] { return multisine(spec); }));
      auto [start, y0] = settled_start(setup.pdf, q, setup.init, setup.bounds, seqs[r].x.front());
      SamplingConfig s = setup.sampling;
      s.rate = rates[r];
      ys[r] = simulate_sspm(setup.pdf, q, s, setup.sspm, start, y0, seqs[r].x);
    }
    const auto& y_ref = ys.front();
    const auto [lo, hi] = std::minmax_element(y_ref.begin(), y_ref.end());
    const double range = *hi - *lo;
    for (std::size_t r = 0; r < rates.size(); ++r) {
      const auto stride = static_cast<std::size_t>(std::llround(ref_rate / rates[r]));
      std::vector<double> errs, signed_errs;
      for (std::size_t k = 0; k < ys[r].size() && k * stride < y_ref.size(); ++k) {
        const double d = (ys[r][k] - y_ref[k * stride]) / range * 100.0;
        errs.push_back(std::abs(d));
        signed_errs.push_back(d);
      }
      SamplingStudyRow row{variants[v].first, rates[r], error_metrics(errs), error_metrics(signed_errs).mean};
      result.summary.push_back(row);
    }
    const auto stride_ref = static_cast<std::size_t>(std::llround(ref_rate / min_rate));
    auto& cols = result.trajectories.data;
    for (std::size_t k = 0; k * stride_ref < y_ref.size(); ++k) {
      const std::size_t kr = k * stride_ref;
      cols[0].push_back(static_cast<double>(v));
      cols[1].push_back(seqs[0].t[kr]);
      cols[2].push_back(seqs[0].x[kr]);
      cols[3].push_back(y_ref[kr]);
      for (std::size_t r = 1; r < rates.size(); ++r) {
        const auto stride = static_cast<std::size_t>(std::llround(ref_rate / rates[r]));
        cols[3 + r].push_back(std::abs(ys[r][kr / stride] - y_ref[kr]) / range * 100.0);
      }
    }
  }
  return result;
}

std::string OracleCheckReport::text() const {
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "oracle-check (n=%d, threshold %.3g%%)\n"
                "  sspm vs cspm:   e_max = %.4g%% %s\n"
                "  oracle vs cspm: e_max = %.4g%% %s\n"
                "  sspm vs oracle: e_max = %.4g%% %s\n"
                "%s\n",
                n, threshold_pct, e_sspm_cspm, e_sspm_cspm <= threshold_pct ? "ok" : "EXCEEDS THRESHOLD",
                e_oracle_cspm, e_oracle_cspm <= threshold_pct ? "ok" : "EXCEEDS THRESHOLD", e_sspm_oracle,
                e_sspm_oracle <= threshold_pct ? "ok" : "EXCEEDS THRESHOLD", pass() ? "PASS" : "FAIL");
  return buf;
}

OracleCheckReport run_oracle_check(const Config& cfg) {
  const Setup setup = build_setup(cfg);
  const auto& xs = setup.signal.x;
  auto [start, y0] = settled_start(setup.pdf, setup.quadrature, setup.init, setup.bounds, xs.front());
  const auto y_cspm = simulate_cspm(setup.pdf, setup.quadrature, start, xs);
  const auto y_sspm = simulate_sspm(setup.pdf, setup.quadrature, setup.sampling, setup.sspm, start, y0, xs);
  const auto y_oracle = oracle_run(setup.pdf, start, setup.oracle_n, xs);
  OracleCheckReport rep;
  rep.n = setup.oracle_n;
  rep.threshold_pct = setup.oracle_threshold_pct;
  rep.e_sspm_cspm = error_metrics(relative_error_series(y_sspm, y_cspm)).max;
  rep.e_oracle_cspm = error_metrics(relative_error_series(y_oracle, y_cspm)).max;
  rep.e_sspm_oracle = error_metrics(relative_error_series(y_sspm, y_oracle)).max;
  return rep;
}

}  // namespace preisach

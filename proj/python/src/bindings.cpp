#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "preisach/config.hpp"
#include "preisach/cspm.hpp"
#include "preisach/density.hpp"
#include "preisach/experiments.hpp"
#include "preisach/memory.hpp"
#include "preisach/metrics.hpp"
#include "preisach/oracle.hpp"
#include "preisach/signals.hpp"
#include "preisach/sspm.hpp"

namespace py = pybind11;
using namespace preisach;

namespace {

std::vector<std::pair<double, double>> corner_list(const MemoryVector& m) {
  std::vector<std::pair<double, double>> out;
  for (const Vertex& v : m.corners()) out.emplace_back(v.alpha, v.beta);
  return out;
}

MemoryVector memory_from(const std::vector<std::pair<double, double>>& corners, const PlaneBounds& b) {
  std::vector<Vertex> vs;
  for (auto [a, bb] : corners) vs.push_back({a, bb});
  return MemoryVector(std::move(vs), b);
}

Config config_from(const std::map<std::string, std::string>& kv) {
  Config c;
  for (const auto& [k, v] : kv) c.set(k, v);
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Scalar Preisach hysteresis: classical and state-space models";

  py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<PlaneBounds>(m, "PlaneBounds")
      .def(py::init<double, double>(), py::arg("x_min") = -1.0, py::arg("x_max") = 1.0)
      .def_property_readonly("min", &PlaneBounds::min)
      .def_property_readonly("max", &PlaneBounds::max)
      .def_property_readonly("width", &PlaneBounds::width)
      .def("__repr__", [](const PlaneBounds& b) {
        return "PlaneBounds(" + std::to_string(b.min()) + ", " + std::to_string(b.max()) + ")";
      });

  py::class_<QuadratureConfig>(m, "QuadratureConfig")
      .def(py::init([](double tol, int max_depth) {
             QuadratureConfig q{tol, max_depth};
             q.validate();
             return q;
           }),
           py::arg("tol") = 1e-6, py::arg("max_depth") = 50)
      .def_readwrite("tol", &QuadratureConfig::tol)
      .def_readwrite("max_depth", &QuadratureConfig::max_depth);

  py::class_<QuadResult>(m, "QuadResult")
      .def_readonly("value", &QuadResult::value)
      .def_readonly("depth_exceeded", &QuadResult::depth_exceeded)
      .def_readonly("evaluations", &QuadResult::evaluations);

  py::class_<DensityFunction>(m, "Density")
      .def_static("uniform", [](double v) { return DensityFunction(Uniform{v}); }, py::arg("v") = 1.0)
      .def_static(
          "exponential", [](double a, double b, double c) { return DensityFunction(BiasedExponential{a, b, c}); },
          py::arg("A") = 1.0, py::arg("B") = 1.0, py::arg("C") = 0.0)
      .def_static(
          "gaussian",
          [](const std::vector<std::tuple<double, std::pair<double, double>, std::tuple<double, double, double>>>&
                 comps) {
            if (comps.size() != 3) throw ContractViolation("gaussian mixture needs exactly 3 components");
            GaussianMixture g;
            for (std::size_t i = 0; i < 3; ++i) {
              const auto& [w, mu, cov] = comps[i];
              g.components[i] = {w, {mu.first, mu.second}, {std::get<0>(cov), std::get<1>(cov), std::get<2>(cov)}};
            }
            return DensityFunction(g);
          },
          py::arg("components"), "components: [(weight, (mu_alpha, mu_beta), (s_aa, s_ab, s_bb))] * 3")
      .def_static("preset", &preset_density, py::arg("name"))
      .def("__call__", &DensityFunction::operator(), py::arg("alpha"), py::arg("beta"))
      .def_property_readonly("name", [](const DensityFunction& d) { return std::string(d.name()); });

  py::enum_<Saturation>(m, "Saturation").value("NEGATIVE", Saturation::kNegative).value("POSITIVE", Saturation::kPositive);
  py::enum_<Branch>(m, "Branch").value("ASCENDING", Branch::kAscending).value("DESCENDING", Branch::kDescending);

  py::class_<MemoryVector>(m, "Memory")
      .def(py::init(&memory_from), py::arg("corners"), py::arg("bounds"))
      .def_static("saturation", &MemoryVector::saturation, py::arg("bounds"), py::arg("sign"))
      .def_static("ground", &MemoryVector::ground, py::arg("bounds"), py::arg("steps"))
      .def_property_readonly("corners", &corner_list)
      .def_property_readonly("level", &MemoryVector::level)
      .def_property_readonly("bounds", &MemoryVector::bounds)
      .def("is_saturated", &MemoryVector::is_saturated)
      .def("increase", &MemoryVector::increase, py::arg("x"))
      .def("decrease", &MemoryVector::decrease, py::arg("x"))
      .def("apply", &MemoryVector::apply, py::arg("x"))
      .def("far_end", &MemoryVector::far_end, py::arg("branch"), py::arg("x"))
      .def("to_csv", &MemoryVector::to_csv)
      .def("copy", [](const MemoryVector& mv) { return mv; })
      .def(py::self == py::self)
      .def("__len__", &MemoryVector::size);

  m.def("segment_integral_beta", &segment_integral_beta, py::arg("pdf"), py::arg("alpha"), py::arg("beta_lo"),
        py::arg("beta_hi"), py::arg("q") = QuadratureConfig{});
  m.def("segment_integral_alpha", &segment_integral_alpha, py::arg("pdf"), py::arg("beta"), py::arg("alpha_lo"),
        py::arg("alpha_hi"), py::arg("q") = QuadratureConfig{});
  m.def("region_integral", &region_integral, py::arg("pdf"), py::arg("memory"), py::arg("q") = QuadratureConfig{});
  m.def("total_mass", &total_mass, py::arg("pdf"), py::arg("bounds"), py::arg("q") = QuadratureConfig{});
  m.def(
      "cspm_output",
      [](const DensityFunction& pdf, const MemoryVector& mem, const QuadratureConfig& q) {
        return cspm_output(pdf, mem, q);
      },
      py::arg("pdf"), py::arg("memory"), py::arg("q") = QuadratureConfig{});

  py::class_<CspmModel>(m, "CspmModel")
      .def(py::init<DensityFunction, QuadratureConfig, MemoryVector>(), py::arg("pdf"), py::arg("q"),
           py::arg("initial"))
      .def("step", &CspmModel::step, py::arg("x"))
      .def("run", [](CspmModel& c, const std::vector<double>& xs) {
        std::vector<double> ys;
        ys.reserve(xs.size());
        for (double x : xs) ys.push_back(c.step(x));
        return ys;
      })
      .def("reset", &CspmModel::reset, py::arg("initial"))
      .def_property_readonly("output", &CspmModel::output)
      .def_property_readonly("memory", &CspmModel::memory)
      .def_property_readonly("total_mass", &CspmModel::total_mass)
      .def_property_readonly("depth_warning", &CspmModel::depth_warning);

  py::class_<SamplingConfig>(m, "SamplingConfig")
      .def(py::init([](double rate, double substep) {
             SamplingConfig s{rate, substep};
             s.validate();
             return s;
           }),
           py::arg("rate") = 1000.0, py::arg("substep_threshold") = 0.0)
      .def_readwrite("rate", &SamplingConfig::rate)
      .def_readwrite("substep_threshold", &SamplingConfig::substep_threshold);

  py::class_<SspmOptions>(m, "SspmOptions")
      .def(py::init([](bool reanchor, bool strict) { return SspmOptions{reanchor, strict}; }),
           py::arg("reanchor") = false, py::arg("literal_segment") = false)
      .def_readwrite("reanchor", &SspmOptions::reanchor)
      .def_readwrite("literal_segment", &SspmOptions::literal_segment);

  py::class_<SspmState>(m, "SspmState")
      .def(py::init([](MemoryVector mem, double y) { return SspmState::from_memory(std::move(mem), y); }),
           py::arg("memory"), py::arg("y"))
      .def_readonly("y", &SspmState::y)
      .def_readonly("memory", &SspmState::mem)
      .def_readonly("x_prev", &SspmState::x_prev)
      .def_readonly("quadrature_warning", &SspmState::quadrature_warning);

  m.def("sspm_step", &sspm_step, py::arg("state"), py::arg("x"), py::arg("pdf"), py::arg("q") = QuadratureConfig{},
        py::arg("s") = SamplingConfig{}, py::arg("opts") = SspmOptions{});

  py::class_<SspmModel>(m, "SspmModel")
      .def(py::init<DensityFunction, QuadratureConfig, SamplingConfig, SspmState, SspmOptions>(), py::arg("pdf"),
           py::arg("q"), py::arg("s"), py::arg("initial"), py::arg("opts") = SspmOptions{})
      .def("step", &SspmModel::step, py::arg("x"))
      .def("run", [](SspmModel& s, const std::vector<double>& xs) {
        std::vector<double> ys;
        ys.reserve(xs.size());
        for (double x : xs) ys.push_back(s.step(x));
        return ys;
      })
      .def("reset", &SspmModel::reset, py::arg("initial"))
      .def_property_readonly("output", &SspmModel::output)
      .def_property_readonly("memory", &SspmModel::memory)
      .def_property_readonly("depth_warning", &SspmModel::depth_warning);

  py::class_<HysteronGrid>(m, "HysteronGrid")
      .def(py::init<const DensityFunction&, PlaneBounds, int>(), py::arg("pdf"), py::arg("bounds"), py::arg("n"))
      .def("step", &HysteronGrid::step, py::arg("x"))
      .def("set_memory", &HysteronGrid::set_memory, py::arg("memory"))
      .def("set_saturation", &HysteronGrid::set_saturation, py::arg("sign"))
      .def_property_readonly("output", &HysteronGrid::output)
      .def("total_weight", &HysteronGrid::total_weight);
  m.def(
      "oracle_run",
      [](const DensityFunction& pdf, const MemoryVector& initial, int n, const std::vector<double>& xs) {
        return oracle_run(pdf, initial, n, xs);
      },
      py::arg("pdf"), py::arg("initial"), py::arg("n"), py::arg("xs"));

  py::class_<InputSequence>(m, "InputSequence")
      .def_readonly("t", &InputSequence::t)
      .def_readonly("x", &InputSequence::x)
      .def_readonly("rate", &InputSequence::rate)
      .def("__len__", &InputSequence::size);
  m.def("major_loop_sine", &major_loop_sine, py::arg("amplitude"), py::arg("rate"), py::arg("periods") = 1.0);
  m.def(
      "multisine",
      [](double band_lo, double band_hi, int tones, double bias, double peak, double duration, double rate,
         std::uint64_t seed) {
        return multisine(MultisineSpec{band_lo, band_hi, tones, bias, peak, duration, rate, seed});
      },
      py::arg("band_lo") = 0.1, py::arg("band_hi") = 10.0, py::arg("tones") = 20, py::arg("bias") = 0.0,
      py::arg("peak") = 1.0, py::arg("duration") = 10.0, py::arg("rate") = 1000.0, py::arg("seed") = 1);
  m.def("load_csv", &load_csv, py::arg("path"), py::arg("rate") = std::nullopt);
  m.def("save_csv", &save_csv, py::arg("seq"), py::arg("path"));

  py::class_<ErrorStats>(m, "ErrorStats")
      .def_readonly("max", &ErrorStats::max)
      .def_readonly("mean", &ErrorStats::mean)
      .def_readonly("std", &ErrorStats::std);
  m.def(
      "relative_error_series",
      [](const std::vector<double>& ys, const std::vector<double>& ref) { return relative_error_series(ys, ref); },
      py::arg("ys"), py::arg("ys_ref"));
  m.def(
      "error_metrics", [](const std::vector<double>& e) { return error_metrics(e); }, py::arg("errs"));
  m.def(
      "timing_metrics", [](const std::vector<double>& d) { return timing_metrics(d); }, py::arg("seconds"));

  py::class_<MetricsReport>(m, "MetricsReport")
      .def_readonly("pdf", &MetricsReport::pdf)
      .def_readonly("tol", &MetricsReport::tol)
      .def_readonly("model", &MetricsReport::model)
      .def_readonly("tau_max_ms", &MetricsReport::tau_max_ms)
      .def_readonly("tau_mean_ms", &MetricsReport::tau_mean_ms)
      .def_readonly("tau_std_ms", &MetricsReport::tau_std_ms)
      .def_readonly("e_max_pct", &MetricsReport::e_max_pct)
      .def_readonly("e_mean_pct", &MetricsReport::e_mean_pct)
      .def_readonly("e_std_pct", &MetricsReport::e_std_pct)
      .def("csv_row", &MetricsReport::csv_row);

  m.def(
      "simulate",
      [](const std::map<std::string, std::string>& config) {
        const Table t = run_trajectory(build_setup(config_from(config)));
        py::dict out;
        for (std::size_t i = 0; i < t.columns.size(); ++i) out[py::str(t.columns[i])] = t.data[i];
        return out;
      },
      py::arg("config") = std::map<std::string, std::string>{},
      "Run the configured model(s); returns {column: values} like the CLI's run CSV.");
  m.def(
      "bench", [](const std::map<std::string, std::string>& config) { return run_bench(config_from(config)); },
      py::arg("config") = std::map<std::string, std::string>{});
  m.def(
      "oracle_check",
      [](const std::map<std::string, std::string>& config) {
        const OracleCheckReport r = run_oracle_check(config_from(config));
        py::dict out;
        out["sspm_cspm"] = r.e_sspm_cspm;
        out["oracle_cspm"] = r.e_oracle_cspm;
        out["sspm_oracle"] = r.e_sspm_oracle;
        out["threshold_pct"] = r.threshold_pct;
        out["passed"] = r.pass();
        return out;
      },
      py::arg("config") = std::map<std::string, std::string>{});
}

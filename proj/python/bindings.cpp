#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qdiscord/analysis.hpp"
#include "qdiscord/decay_rates.hpp"
#include "qdiscord/errors.hpp"
#include "qdiscord/evolution.hpp"
#include "qdiscord/params.hpp"
#include "qdiscord/quantum_information.hpp"
#include "qdiscord/special_functions.hpp"

namespace py = pybind11;
using namespace qdiscord;

namespace {

using Matrix = DensityMatrix4::Matrix;

Config preset_by_name(const std::string& name)
{
    const auto p = parse_preset(name);
    if (!p) throw ConfigError("preset", "unknown preset '" + name + "' (expected grw, adler or diosi)");
    return table1_preset(*p);
}

py::dict rate_dict(const Config& cfg)
{
    const DecayRate r = decay_rate(cfg.params, cfg.model);
    py::dict out;
    out["model"] = model_name(cfg.model);
    out["eta"] = r.eta;
    out["lambda_big"] = r.lambda_big;
    if (const auto* env = std::get_if<noise::Environmental>(&cfg.model)) {
        const EnvironmentRates g = gamma_environment(cfg.params, *env);
        out["gamma_sc"] = g.scattering;
        out["gamma_em"] = g.emission;
        out["gamma_abs"] = g.absorption;
        out["gamma_coll"] = g.collision;
        out["gamma_total"] = g.total;
    }
    return out;
}

py::dict report_dict(const DiscordReport& r)
{
    py::dict out;
    out["delta"] = r.delta;
    out["I_mutual"] = r.I_mutual;
    out["J_measured"] = r.J_measured;
    out["S_total"] = r.S_total;
    out["p0"] = r.p0;
    out["p1"] = r.p1;
    return out;
}

} // namespace

PYBIND11_MODULE(_qdiscord, m)
{
    m.doc() = "Two-mode discord dynamics: decay rates, closed-form and integrated states, discord.";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
    // DomainError derives from std::domain_error and maps to ValueError already.

    py::enum_<EvalMode>(m, "EvalMode").value("Auto", EvalMode::Auto).value("Exact", EvalMode::Exact);
    py::enum_<ConditionalWeights>(m, "ConditionalWeights")
        .value("Normalized", ConditionalWeights::Normalized)
        .value("PaperCompat", ConditionalWeights::PaperCompat);

    py::class_<Config>(m, "Config")
        .def_property_readonly("model", [](const Config& c) { return model_name(c.model); })
        .def_property_readonly("omega", [](const Config& c) { return c.params.omega; })
        .def("serialize", [](const Config& c) { return serialize_config(c); })
        .def("__repr__", [](const Config& c) { return "<Config model=" + model_name(c.model) + ">"; });

    m.def("load_config", [](const std::string& text) { return load_config(text); }, py::arg("text"),
          "Parse `key = value` config text.");
    m.def("preset", &preset_by_name, py::arg("name"), "Reference parameters for grw, adler or diosi.");
    m.def("decay_rate", &rate_dict, py::arg("config"), "Dephasing strength eta and decay constant Lambda.");

    m.def("bessel_i0e", &bessel_i0e, py::arg("z"));
    m.def("bessel_i1e", &bessel_i1e, py::arg("z"));
    m.def("gamma_perp", &gamma_perp, py::arg("x"));

    m.def("initial_state", [] { return initial_state().matrix(); });
    m.def(
        "closed_form_state",
        [](double lambda_big, double omega, double t, EvalMode mode) {
            return closed_form_state({lambda_big, omega, t}, mode).matrix();
        },
        py::arg("lambda_big"), py::arg("omega"), py::arg("t"), py::arg("mode") = EvalMode::Auto);
    m.def(
        "numerical_state",
        [](double lambda_big, double omega, double t, int steps) {
            const EvolutionInputs in{lambda_big, omega, t};
            const auto r = numerical_state(in, steps > 0 ? steps : default_step_count(in));
            return py::make_tuple(r.state.matrix(), r.error_estimate);
        },
        py::arg("lambda_big"), py::arg("omega"), py::arg("t"), py::arg("steps") = 0,
        "RK4 integration; returns (rho, step-halving error estimate).");
    m.def(
        "spectrum", [](const Matrix& rho) { return spectrum(DensityMatrix4(rho)); }, py::arg("rho"));
    m.def(
        "von_neumann_entropy", [](const Eigen::MatrixXcd& rho) { return von_neumann_entropy(rho); },
        py::arg("rho"));
    m.def(
        "discord",
        [](const Matrix& rho, double theta, double phi, ConditionalWeights weights) {
            return report_dict(discord(DensityMatrix4(rho), MeasurementBasis{theta, phi}, weights));
        },
        py::arg("rho"), py::arg("theta") = 0.0, py::arg("phi") = 0.0,
        py::arg("weights") = ConditionalWeights::Normalized);
    m.def(
        "discord_minimized",
        [](const Matrix& rho, int grid) {
            const auto r = discord_minimized(DensityMatrix4(rho), grid);
            return py::make_tuple(r.delta_min, r.basis.theta, r.basis.phi);
        },
        py::arg("rho"), py::arg("grid") = 16, "Returns (delta_min, theta, phi).");

    py::class_<DetectionResult>(m, "DetectionResult")
        .def_readonly("t_detect", &DetectionResult::t_detect)
        .def_readonly("threshold", &DetectionResult::threshold)
        .def_readonly("lambda_big", &DetectionResult::lambda_big)
        .def_readonly("converged", &DetectionResult::converged)
        .def_readonly("message", &DetectionResult::message);

    m.def("envelope_discord", &envelope_discord, py::arg("lambda_t"));
    m.def("detection_time", &detection_time, py::arg("lambda_big"), py::arg("omega"),
          py::arg("threshold_frac") = kDefaultThresholdFrac);
    m.def(
        "discord_trace",
        [](double lambda_big, double omega, const std::vector<double>& t_grid, EvalMode mode,
           ConditionalWeights weights) {
            const auto trace = discord_trace(lambda_big, omega, t_grid, {mode, weights});
            std::vector<double> delta;
            delta.reserve(trace.size());
            for (const auto& p : trace) delta.push_back(p.delta);
            return delta;
        },
        py::arg("lambda_big"), py::arg("omega"), py::arg("t_grid"), py::arg("mode") = EvalMode::Auto,
        py::arg("weights") = ConditionalWeights::Normalized, "Discord in nats at each time.");

    py::class_<ExclusionPoint>(m, "ExclusionPoint")
        .def_readonly("r_c", &ExclusionPoint::r_c)
        .def_readonly("lambda_bound", &ExclusionPoint::lambda_bound);
    m.def(
        "csl_bound_scan",
        [](const Config& cfg, double lambda_cap, double rc_min, double rc_max, int points) {
            return csl_bound_scan(cfg.params, lambda_cap, rc_min, rc_max, points);
        },
        py::arg("config"), py::arg("lambda_cap") = kDefaultLambdaCap, py::arg("rc_min") = 1e-9,
        py::arg("rc_max") = 1e-4, py::arg("points") = 51);
}

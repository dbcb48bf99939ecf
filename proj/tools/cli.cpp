#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qdiscord/analysis.hpp"
#include "qdiscord/decay_rates.hpp"
#include "qdiscord/errors.hpp"
#include "qdiscord/params.hpp"

namespace qdiscord::cli {

namespace {

using nlohmann::json;

struct CommonOptions {
    std::string config_path;
    std::string preset;
    std::string output;
    bool meta = false;
};

struct EvolveOptions {
    std::optional<double> t_max;
    int points = 201;
    bool exact = false;
    bool paper_compat = false;
};

struct DetectOptions {
    double threshold_frac = kDefaultThresholdFrac;
};

struct ScanOptions {
    double rc_min = 1e-9;
    double rc_max = 1e-4;
    int points = 51;
    double lambda_cap = kDefaultLambdaCap;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string join(const std::vector<std::string>& args)
{
    std::string s;
    for (const auto& a : args) {
        if (!s.empty()) {
            s += ' ';
        }
        s += a;
    }
    return s;
}

Config resolve_config(const CommonOptions& opt)
{
    if (!opt.config_path.empty() && !opt.preset.empty()) {
        throw ConfigError("", "--config and --preset are mutually exclusive");
    }
    if (!opt.preset.empty()) {
        const auto preset = parse_preset(opt.preset);
        if (!preset) {
            throw ConfigError("preset", "unknown preset '" + opt.preset + "' (grw, adler, diosi)");
        }
        return table1_preset(*preset);
    }
    if (opt.config_path.empty()) {
        throw ConfigError("", "one of --config or --preset is required");
    }
    std::ifstream in(opt.config_path);
    if (!in) {
        throw ConfigError("", "cannot read config file '" + opt.config_path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return load_config(buffer.str());
}

json meta_block()
{
    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    std::ostringstream stamp;
    stamp << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return json{{"generated_at", stamp.str()}, {"version", "0.1.0"}};
}

void emit(const std::string& text, const CommonOptions& opt, std::ostream& out)
{
    if (opt.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(opt.output, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw IoError("cannot open '" + opt.output + "' for writing");
    }
    file << text;
    file.flush();
    if (!file) {
        throw IoError("write to '" + opt.output + "' failed");
    }
}

// JSON documents carry the run metadata inline; CSV files get a sidecar.
void emit_json(json doc, const CommonOptions& opt, std::ostream& out)
{
    if (opt.meta) {
        doc["meta"] = meta_block();
    }
    emit(doc.dump(2) + "\n", opt, out);
}

void emit_csv(const std::string& csv, const std::string& command, const CommonOptions& opt,
              std::ostream& out, std::ostream& err)
{
    emit(csv, opt, out);
    if (!opt.meta) {
        return;
    }
    json doc{{"schema_version", kSchemaVersion}, {"command", command}, {"meta", meta_block()}};
    if (opt.output.empty()) {
        err << doc.dump(2) << "\n";
        return;
    }
    CommonOptions side = opt;
    side.output = opt.output + ".meta.json";
    emit(doc.dump(2) + "\n", side, out);
}

int cmd_rates(const CommonOptions& opt, const std::string& command, std::ostream& out)
{
    const Config cfg = resolve_config(opt);
    const DecayRate rate = decay_rate(cfg.params, cfg.model);
    json components = json::object();
    if (const auto* env = std::get_if<noise::Environmental>(&cfg.model)) {
        const auto g = gamma_environment(cfg.params, *env);
        components = {{"gamma_sc", g.scattering},
                      {"gamma_em", g.emission},
                      {"gamma_abs", g.absorption},
                      {"gamma_coll", g.collision},
                      {"gamma_total", g.total}};
    }
    json doc{{"schema_version", kSchemaVersion},
             {"command", command},
             {"model", rate.model_tag},
             {"eta", rate.eta},
             {"lambda_big", rate.lambda_big},
             {"components", components}};
    emit_json(doc, opt, out);
    return kOk;
}

int cmd_evolve(const CommonOptions& opt, const EvolveOptions& ev, const std::string& command,
               std::ostream& out, std::ostream& err)
{
    const Config cfg = resolve_config(opt);
    if (ev.points < 2) {
        throw ConfigError("points", "--points must be >= 2");
    }
    const double lambda_big = decay_rate(cfg.params, cfg.model).lambda_big;
    const double t_max = ev.t_max.value_or(lambda_big > 0 ? 10.0 / lambda_big : 1.0);
    if (!(t_max > 0) || !std::isfinite(t_max)) {
        throw ConfigError("t_max", "--t-max must be finite and > 0");
    }

    std::vector<double> grid(static_cast<std::size_t>(ev.points));
    for (int i = 0; i < ev.points; ++i) {
        grid[static_cast<std::size_t>(i)] = t_max * i / (ev.points - 1);
    }
    TraceOptions options;
    options.mode = ev.exact ? EvalMode::Exact : EvalMode::Auto;
    options.weights = ev.paper_compat ? ConditionalWeights::PaperCompat : ConditionalWeights::Normalized;
    const auto trace = discord_trace(lambda_big, cfg.params.omega, grid, options);

    std::ostringstream csv;
    csv << "t,discord_nats,sigma1,sigma2,sigma3,sigma4,rho11,rho22,re_rho23,re_rho14,im_rho14,"
           "envelope_mode\n";
    for (const auto& p : trace) {
        csv << fmt(p.t) << ',' << fmt(p.delta);
        for (double s : p.sigma) {
            csv << ',' << fmt(s);
        }
        csv << ',' << fmt(p.rho11) << ',' << fmt(p.rho22) << ',' << fmt(p.re_rho23) << ','
            << fmt(p.re_rho14) << ',' << fmt(p.im_rho14) << ',' << (p.envelope ? 1 : 0) << '\n';
    }
    emit_csv(csv.str(), command, opt, out, err);
    return kOk;
}

int cmd_detect(const CommonOptions& opt, const DetectOptions& det, const std::string& command,
               std::ostream& out, std::ostream& err)
{
    const Config cfg = resolve_config(opt);
    if (!(det.threshold_frac > 0 && det.threshold_frac < 1)) {
        throw ConfigError("threshold_frac", "--threshold-frac must lie in (0, 1)");
    }
    const double lambda_big = decay_rate(cfg.params, cfg.model).lambda_big;
    const auto result = detection_time(lambda_big, cfg.params.omega, det.threshold_frac);
    json doc{{"schema_version", kSchemaVersion},
             {"command", command},
             {"t_detect", result.converged ? json(result.t_detect) : json(nullptr)},
             {"threshold", result.threshold},
             {"threshold_frac", det.threshold_frac},
             {"lambda_big", result.lambda_big},
             {"converged", result.converged}};
    if (!result.message.empty()) {
        doc["message"] = result.message;
    }
    emit_json(doc, opt, out);
    if (!result.converged) {
        err << "detect: " << result.message << "\n";
        return kNotConverged;
    }
    return kOk;
}

int cmd_scan(const CommonOptions& opt, const ScanOptions& sc, const std::string& command,
             std::ostream& out, std::ostream& err)
{
    const Config cfg = resolve_config(opt);
    if (sc.points < 2) {
        throw ConfigError("points", "--points must be >= 2");
    }
    if (!(sc.rc_min > 0) || !(sc.rc_max > sc.rc_min) || !std::isfinite(sc.rc_max)) {
        throw ConfigError("rc_min", "need 0 < --rc-min < --rc-max");
    }
    if (!(sc.lambda_cap > 0) || !std::isfinite(sc.lambda_cap)) {
        throw ConfigError("lambda_cap", "--lambda-cap must be finite and > 0");
    }
    const auto scan = csl_bound_scan(cfg.params, sc.lambda_cap, sc.rc_min, sc.rc_max, sc.points);
    std::ostringstream csv;
    csv << "r_c,lambda_bound\n";
    for (const auto& pt : scan) {
        csv << fmt(pt.r_c) << ',' << fmt(pt.lambda_bound) << '\n';
    }
    emit_csv(csv.str(), command, opt, out, err);
    return kOk;
}

void add_common(CLI::App& sub, CommonOptions& opt)
{
    sub.add_option("--config", opt.config_path, "key = value config file");
    sub.add_option("--preset", opt.preset, "reference parameter set: grw, adler, diosi");
    sub.add_option("--output", opt.output, "write data here instead of stdout");
    sub.add_flag("--meta", opt.meta, "emit run metadata (timestamp, version)");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Quantum discord dynamics under collapse and decoherence models", "qdiscord"};
    app.require_subcommand(1);

    CommonOptions common;
    EvolveOptions evolve;
    DetectOptions detect;
    ScanOptions scan;

    auto* rates = app.add_subcommand("rates", "decay-rate constants (JSON)");
    add_common(*rates, common);

    auto* ev = app.add_subcommand("evolve", "discord time series (CSV)");
    add_common(*ev, common);
    ev->add_option("--t-max", evolve.t_max, "end time [s] (default 10/Lambda)");
    ev->add_option("--points", evolve.points, "number of time samples");
    ev->add_flag("--exact", evolve.exact, "always evaluate the full oscillating solution");
    ev->add_flag("--paper-compat", evolve.paper_compat,
                 "use 1/4-weighted conditional entropies as originally printed");

    auto* det = app.add_subcommand("detect", "time for discord to fall to a threshold (JSON)");
    add_common(*det, common);
    det->add_option("--threshold-frac", detect.threshold_frac, "threshold as a fraction of ln 2");

    auto* sc = app.add_subcommand("scan", "lambda_CSL upper bound versus r_C (CSV)");
    add_common(*sc, common);
    sc->add_option("--rc-min", scan.rc_min, "smallest r_C [m]");
    sc->add_option("--rc-max", scan.rc_max, "largest r_C [m]");
    sc->add_option("--points", scan.points, "number of log-spaced r_C values");
    sc->add_option("--lambda-cap", scan.lambda_cap, "largest allowed Lambda [1/s]");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    }
    catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    }
    catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kConfigError;
    }

    const std::string command = join(args);
    try {
        if (*rates) {
            return cmd_rates(common, command, out);
        }
        if (*ev) {
            return cmd_evolve(common, evolve, command, out, err);
        }
        if (*det) {
            return cmd_detect(common, detect, command, out, err);
        }
        return cmd_scan(common, scan, command, out, err);
    }
    catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kConfigError;
    }
    catch (const IoError& e) {
        err << "I/O error: " << e.what() << "\n";
        return kIoError;
    }
    catch (const ConvergenceError& e) {
        err << "numerical error: " << e.what() << "\n";
        return kNotConverged;
    }
    catch (const DomainError& e) {
        err << "numerical error: " << e.what() << "\n";
        return kNotConverged;
    }
}

} // namespace qdiscord::cli

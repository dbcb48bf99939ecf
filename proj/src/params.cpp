#include "qdiscord/params.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "qdiscord/errors.hpp"

namespace qdiscord {

namespace {

void require(bool ok, const char* key, const char* constraint)
{
    if (!ok) {
        throw ConfigError(key, std::string("must satisfy ") + constraint);
    }
}

std::string_view trim(std::string_view s)
{
    const auto ws = " \t\r\n";
    const auto first = s.find_first_not_of(ws);
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(ws);
    return s.substr(first, last - first + 1);
}

std::string lower(std::string_view s)
{
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    return out;
}

double parse_number(const std::string& key, std::string_view text)
{
    double value = 0.0;
    const auto* begin = text.data();
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ConfigError(key, "cannot parse '" + std::string(text) + "' as a number");
    }
    if (!std::isfinite(value)) {
        throw ConfigError(key, "must be finite");
    }
    return value;
}

std::string format_double(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

const std::set<std::string>& keys_for(const std::string& model)
{
    static const std::map<std::string, std::set<std::string>> table{
        {"csl", {"lambda_csl", "r_c"}},
        {"diosi", {}},
        {"environmental", {"T", "T_i", "P", "epsilon_re", "epsilon_im", "m_gas"}},
        {"none", {}},
    };
    auto it = table.find(model);
    if (it == table.end()) {
        throw ConfigError("model", "unknown model '" + model +
                                       "' (expected csl, diosi, environmental or none)");
    }
    return it->second;
}

} // namespace

double equal_volume_radius(double R, double d)
{
    return std::cbrt(0.75 * R * R * d);
}

void ExperimentParams::validate() const
{
    require(std::isfinite(omega) && omega > 0, "omega", "omega > 0");
    require(std::isfinite(N) && N >= 1, "N", "N >= 1");
    require(std::isfinite(m) && m > 0, "m", "m > 0");
    require(std::isfinite(R) && R > 0, "R", "R > 0");
    require(std::isfinite(d) && d > 0, "d", "d > 0");
    require(std::isfinite(R_prime) && R_prime > 0, "R_prime", "R_prime > 0");
}

std::string model_name(const NoiseModel& model)
{
    struct Visitor {
        std::string operator()(const noise::Csl&) const { return "csl"; }
        std::string operator()(const noise::Diosi&) const { return "diosi"; }
        std::string operator()(const noise::Environmental&) const { return "environmental"; }
        std::string operator()(const noise::None&) const { return "none"; }
    };
    return std::visit(Visitor{}, model);
}

void validate(const NoiseModel& model)
{
    if (const auto* csl = std::get_if<noise::Csl>(&model)) {
        require(std::isfinite(csl->lambda_csl) && csl->lambda_csl >= 0, "lambda_csl",
                "lambda_csl >= 0");
        require(std::isfinite(csl->r_c) && csl->r_c > 0, "r_c", "r_c > 0");
    }
    else if (const auto* env = std::get_if<noise::Environmental>(&model)) {
        require(std::isfinite(env->T) && env->T > 0, "T", "T > 0");
        require(std::isfinite(env->T_i) && env->T_i > 0, "T_i", "T_i > 0");
        require(std::isfinite(env->P) && env->P >= 0, "P", "P >= 0");
        require(std::isfinite(env->epsilon.real()), "epsilon_re", "finite");
        require(std::isfinite(env->epsilon.imag()) && env->epsilon.imag() >= 0, "epsilon_im",
                "Im(epsilon) >= 0");
        require(std::abs(env->epsilon + 2.0) > 0, "epsilon_re", "epsilon != -2");
        require(std::isfinite(env->m_gas) && env->m_gas > 0, "m_gas", "m_gas > 0");
    }
}

Config load_config(std::string_view text)
{
    static const std::set<std::string> known{
        "omega", "N", "m", "R", "d", "R_prime", "model", "lambda_csl", "r_c",
        "T", "T_i", "P", "epsilon_re", "epsilon_im", "m_gas"};

    std::map<std::string, std::string> raw;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view view = line;
        if (auto hash = view.find('#'); hash != std::string_view::npos) {
            view = view.substr(0, hash);
        }
        view = trim(view);
        if (view.empty()) {
            continue;
        }
        const auto eq = view.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("", "line " + std::to_string(lineno) + ": expected key = value");
        }
        std::string key(trim(view.substr(0, eq)));
        std::string value(trim(view.substr(eq + 1)));
        if (key.empty()) {
            throw ConfigError("", "line " + std::to_string(lineno) + ": empty key");
        }
        if (!known.count(key)) {
            throw ConfigError(key, "unknown key");
        }
        if (value.empty()) {
            throw ConfigError(key, "empty value");
        }
        if (!raw.emplace(key, value).second) {
            throw ConfigError(key, "duplicate key");
        }
    }

    auto model_it = raw.find("model");
    if (model_it == raw.end()) {
        throw ConfigError("model", "required key missing");
    }
    const std::string model = lower(model_it->second);
    const auto& model_keys = keys_for(model);
    for (const auto& [key, value] : raw) {
        static const std::set<std::string> geometry{"omega", "N", "m", "R", "d", "R_prime", "model"};
        if (!geometry.count(key) && !model_keys.count(key)) {
            throw ConfigError(key, "not used by model '" + model + "'");
        }
    }

    auto number = [&](const char* key, double fallback) {
        auto it = raw.find(key);
        return it == raw.end() ? fallback : parse_number(key, it->second);
    };
    auto required = [&](const char* key) {
        auto it = raw.find(key);
        if (it == raw.end()) {
            throw ConfigError(key, "required for model '" + model + "'");
        }
        return parse_number(key, it->second);
    };

    Config cfg;
    ExperimentParams& p = cfg.params;
    p.omega = number("omega", p.omega);
    p.N = number("N", p.N);
    p.m = number("m", p.m);
    p.R = number("R", p.R);
    p.d = number("d", p.d);
    if (raw.count("R_prime")) {
        p.R_prime = number("R_prime", 0.0);
    }
    else {
        require(p.R > 0 && p.d > 0, "R_prime", "derivable from R > 0 and d > 0");
        p.R_prime = equal_volume_radius(p.R, p.d);
    }
    p.validate();

    if (model == "csl") {
        noise::Csl csl;
        csl.lambda_csl = number("lambda_csl", csl.lambda_csl);
        csl.r_c = number("r_c", csl.r_c);
        cfg.model = csl;
    }
    else if (model == "diosi") {
        cfg.model = noise::Diosi{};
    }
    else if (model == "environmental") {
        noise::Environmental env;
        env.T = required("T");
        env.T_i = number("T_i", env.T);
        env.P = required("P");
        env.epsilon = {required("epsilon_re"), number("epsilon_im", 0.0)};
        env.m_gas = number("m_gas", env.m_gas);
        cfg.model = env;
    }
    else {
        cfg.model = noise::None{};
    }
    validate(cfg.model);
    return cfg;
}

std::string serialize_config(const Config& config)
{
    std::ostringstream out;
    auto put = [&](const char* key, double v) { out << key << " = " << format_double(v) << '\n'; };
    const auto& p = config.params;
    out << "model = " << model_name(config.model) << '\n';
    put("omega", p.omega);
    put("N", p.N);
    put("m", p.m);
    put("R", p.R);
    put("d", p.d);
    put("R_prime", p.R_prime);
    if (const auto* csl = std::get_if<noise::Csl>(&config.model)) {
        put("lambda_csl", csl->lambda_csl);
        put("r_c", csl->r_c);
    }
    else if (const auto* env = std::get_if<noise::Environmental>(&config.model)) {
        put("T", env->T);
        put("T_i", env->T_i);
        put("P", env->P);
        put("epsilon_re", env->epsilon.real());
        put("epsilon_im", env->epsilon.imag());
        put("m_gas", env->m_gas);
    }
    return out.str();
}

std::optional<Preset> parse_preset(std::string_view name)
{
    const auto key = lower(name);
    if (key == "grw") {
        return Preset::Grw;
    }
    if (key == "adler") {
        return Preset::Adler;
    }
    if (key == "diosi") {
        return Preset::Diosi;
    }
    return std::nullopt;
}

Config table1_preset(Preset preset)
{
    Config cfg;
    // Table columns are quoted in micrometres and millimetres.
    constexpr double um = 1e-6;
    constexpr double mm = 1e-3;
    cfg.params.omega = 1e13;
    cfg.params.m = 1e-11;
    cfg.params.N = 5e14;
    cfg.params.R = 1.3427 * um;
    cfg.params.d = 0.25 * mm;
    cfg.params.R_prime = 6.97 * um;
    switch (preset) {
    case Preset::Grw:
        cfg.model = noise::Csl{1e-17, 1e-7};
        break;
    case Preset::Adler:
        cfg.model = noise::Csl{1e-8, 1e-7};
        break;
    case Preset::Diosi:
        cfg.model = noise::Diosi{};
        break;
    }
    return cfg;
}

} // namespace qdiscord

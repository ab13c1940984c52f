#include "slat/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace slat {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kDegToRad = kPi / 180.0;

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw ConfigError("config: key '" + key + "' has a malformed number '" + v + "'");
    }
}

std::size_t parse_size(const std::string& key, const std::string& v) {
    const double d = parse_double(key, v);
    if (d < 1 || d != std::floor(d))
        throw ConfigError("config: key '" + key + "' must be a positive integer");
    return static_cast<std::size_t>(d);
}

std::vector<double> parse_list(const std::string& key, const std::string& v) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty())
            throw ConfigError("config: key '" + key + "' has an empty list entry");
        out.push_back(parse_double(key, item));
    }
    if (out.empty()) throw ConfigError("config: key '" + key + "' needs at least one value");
    return out;
}

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys = {
        "problem",    "N",          "grid_alpha", "grid_beta",  "sigma0",   "k",
        "a_coeffs",   "b_coeffs",   "r_coeffs",   "alpha1_deg", "beta1_deg", "eta_deg",
        "sigma_n",    "tau_n",      "mu",         "x0",         "y0",       "phi0_deg",
        "orientation", "gamma_deg", "OA",         "b_ratio",    "pressure", "axis_span_deg",
        "profile_points", "out_csv", "out_json",  "out_svg"};
    return keys;
}

}  // namespace

std::string to_string(ProblemKind k) {
    switch (k) {
        case ProblemKind::icp: return "icp";
        case ProblemKind::cauchy_const: return "cauchy";
        case ProblemKind::free_surface: return "free-surface";
        case ProblemKind::mixed_straight: return "mixed";
        case ProblemKind::extrusion: return "extrusion";
        case ProblemKind::elliptic_hole: return "elliptic-hole";
    }
    return "?";
}

ProblemKind problem_kind_from_string(const std::string& s) {
    if (s == "icp") return ProblemKind::icp;
    if (s == "cauchy") return ProblemKind::cauchy_const;
    if (s == "free-surface") return ProblemKind::free_surface;
    if (s == "mixed") return ProblemKind::mixed_straight;
    if (s == "extrusion") return ProblemKind::extrusion;
    if (s == "elliptic-hole") return ProblemKind::elliptic_hole;
    throw ConfigError("config: unknown problem kind '" + s + "'");
}

ProblemConfig parse_config_text(const std::string& text, ProblemKind expected) {
    std::map<std::string, std::string> kv;
    std::vector<std::string> order;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: line " + std::to_string(lineno) + " is not 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (!known_keys().count(key))
            throw ConfigError("config: unknown key '" + key + "'");
        if (kv.count(key)) throw ConfigError("config: duplicate key '" + key + "'");
        if (val.empty()) throw ConfigError("config: key '" + key + "' has no value");
        kv[key] = val;
        order.push_back(key);
    }

    if (!kv.count("problem")) throw ConfigError("config: missing required key 'problem'");
    ProblemConfig cfg;
    cfg.problem = problem_kind_from_string(kv["problem"]);
    if (cfg.problem != expected)
        throw ConfigError("config: problem '" + kv["problem"] + "' does not match the subcommand '" +
                          to_string(expected) + "'");

    auto has = [&](const char* key) { return kv.count(key) != 0; };
    auto num = [&](const char* key, double dflt) {
        return has(key) ? parse_double(key, kv[key]) : dflt;
    };

    cfg.terms = has("N") ? parse_size("N", kv["N"]) : 16;
    cfg.grid_alpha = has("grid_alpha") ? parse_size("grid_alpha", kv["grid_alpha"]) : 33;
    cfg.grid_beta = has("grid_beta") ? parse_size("grid_beta", kv["grid_beta"]) : 33;
    if (cfg.grid_alpha < 2 || cfg.grid_beta < 2)
        throw ConfigError("config: grid must be at least 2x2");
    cfg.sigma0 = num("sigma0", 0.0);
    cfg.k = num("k", 1.0);
    if (cfg.k <= 0.0) throw ConfigError("config: shear yield stress k must be positive");

    if (has("a_coeffs")) cfg.a_coeffs = parse_list("a_coeffs", kv["a_coeffs"]);
    if (has("b_coeffs")) cfg.b_coeffs = parse_list("b_coeffs", kv["b_coeffs"]);
    if (has("r_coeffs")) cfg.r_coeffs = parse_list("r_coeffs", kv["r_coeffs"]);

    cfg.alpha1 = num("alpha1_deg", 30.0) * kDegToRad;
    const double default_beta1 =
        (cfg.problem == ProblemKind::cauchy_const || cfg.problem == ProblemKind::mixed_straight)
            ? -num("alpha1_deg", 30.0)
            : -20.0;
    cfg.beta1 = num("beta1_deg", default_beta1) * kDegToRad;
    if (has("eta_deg")) cfg.eta = parse_double("eta_deg", kv["eta_deg"]) * kDegToRad;
    if (has("sigma_n")) cfg.sigma_n = parse_double("sigma_n", kv["sigma_n"]);
    if (has("tau_n")) cfg.tau_n = parse_double("tau_n", kv["tau_n"]);
    if (has("mu")) cfg.mu = parse_double("mu", kv["mu"]);
    cfg.x0 = num("x0", 0.0);
    cfg.y0 = num("y0", 0.0);
    cfg.phi0 = num("phi0_deg", 0.0) * kDegToRad;
    if (has("orientation")) {
        const std::string& o = kv["orientation"];
        if (o == "mirrored")
            cfg.mirrored_orientation = true;
        else if (o == "identity")
            cfg.mirrored_orientation = false;
        else
            throw ConfigError("config: orientation must be 'mirrored' or 'identity'");
    }

    cfg.gamma = num("gamma_deg", 10.0) * kDegToRad;
    cfg.face_length = num("OA", 2.0);
    if (cfg.face_length <= 0.0) throw ConfigError("config: OA must be positive");

    cfg.b_ratio = num("b_ratio", 0.4);
    cfg.pressure = num("pressure", 1.0);
    cfg.axis_span = num("axis_span_deg", 45.0) * kDegToRad;
    cfg.profile_points =
        has("profile_points") ? parse_size("profile_points", kv["profile_points"]) : 33;
    if (cfg.profile_points < 2) throw ConfigError("config: profile_points must be >= 2");

    if (has("out_csv")) cfg.out_csv = kv["out_csv"];
    if (has("out_json")) cfg.out_json = kv["out_json"];
    if (has("out_svg")) cfg.out_svg = kv["out_svg"];

    // problem-specific requirements
    switch (cfg.problem) {
        case ProblemKind::icp:
            if (cfg.a_coeffs.empty() || cfg.b_coeffs.empty())
                throw ConfigError("config: icp requires a_coeffs and b_coeffs");
            break;
        case ProblemKind::cauchy_const:
            if (cfg.r_coeffs.empty()) throw ConfigError("config: cauchy requires r_coeffs");
            if (!has("eta_deg") && !(cfg.sigma_n && cfg.tau_n))
                throw ConfigError("config: cauchy requires eta_deg or sigma_n and tau_n");
            break;
        case ProblemKind::free_surface:
            if (cfg.a_coeffs.empty()) throw ConfigError("config: free-surface requires a_coeffs");
            break;
        case ProblemKind::mixed_straight:
            if (cfg.a_coeffs.empty()) throw ConfigError("config: mixed requires a_coeffs");
            if (!has("eta_deg") && !cfg.mu)
                throw ConfigError("config: mixed requires eta_deg or mu");
            break;
        case ProblemKind::extrusion:
        case ProblemKind::elliptic_hole:
            break;
    }

    // resolved echo, in the order keys appeared (with the problem first)
    cfg.echo.emplace_back("problem", kv["problem"]);
    for (const auto& key : order)
        if (key != "problem") cfg.echo.emplace_back(key, kv[key]);
    return cfg;
}

ProblemConfig parse_config_file(const std::string& path, ProblemKind expected) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str(), expected);
}

}  // namespace slat

// Flat key=value problem configuration. Angles arrive in degrees and are
// converted to radians exactly once, here; everything downstream is
// radians-only. Unknown keys are errors.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "slat/series.hpp"

namespace slat {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ProblemKind { icp, cauchy_const, free_surface, mixed_straight, extrusion, elliptic_hole };

std::string to_string(ProblemKind k);
ProblemKind problem_kind_from_string(const std::string& s);

struct ProblemConfig {
    ProblemKind problem;
    std::size_t terms = 16;
    std::size_t grid_alpha = 33, grid_beta = 33;
    double sigma0 = 0.0, k = 1.0;

    // generic solvers
    std::vector<double> a_coeffs, b_coeffs, r_coeffs;
    double alpha1 = 0.0, beta1 = 0.0;     // radians
    double eta = 0.0;                     // radians; 0 = unset
    std::optional<double> sigma_n, tau_n; // cauchy tractions (alternative to eta)
    std::optional<double> mu;             // mixed friction factor (alternative to eta)
    double x0 = 0.0, y0 = 0.0, phi0 = 0.0;
    bool mirrored_orientation = true;     // cauchy beta-row convention

    // extrusion
    double gamma = 0.0;       // radians
    double face_length = 2.0; // OA

    // elliptic hole
    double b_ratio = 0.4;
    double pressure = 1.0;
    double axis_span = 0.0;   // radians
    std::size_t profile_points = 33;

    std::string out_csv, out_json, out_svg;

    // the raw resolved keys, in schema order, for the JSON config echo
    std::vector<std::pair<std::string, std::string>> echo;
};

/// Parse `key = value` lines ('#' comments). Throws ConfigError on unknown
/// keys, malformed values, or a `problem` that disagrees with `expected`.
ProblemConfig parse_config_file(const std::string& path, ProblemKind expected);
ProblemConfig parse_config_text(const std::string& text, ProblemKind expected);

}  // namespace slat

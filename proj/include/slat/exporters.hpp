// CSV, JSON and SVG writers. Identical inputs produce identical bytes:
// CSV/SVG numbers are printed with 12 significant digits and JSON uses a
// fixed key order.
#pragma once

#include <string>
#include <vector>

#include "slat/config.hpp"
#include "slat/geometry.hpp"
#include "slat/problems.hpp"

namespace slat {

/// One row per node: alpha,beta,x,y,phi,sigma.
std::string net_csv_string(const CharacteristicNet& net);

/// One polyline per characteristic line: n_beta alpha-lines plus n_alpha
/// beta-lines, stroke classes "alpha-line" and "beta-line", auto-fitted
/// viewBox, no external assets.
std::string net_svg_string(const std::vector<const CharacteristicNet*>& nets);

/// xi,alpha,sigma1_2k,sigma2_2k,delta_2k rows of the axis profile.
std::string profile_csv_string(const std::vector<AxisSample>& profile);

/// Polyline plot of delta(xi), no external assets.
std::string profile_svg_string(const std::vector<AxisSample>& profile);

// Full JSON reports (version + config echo + results).
std::string extrusion_report_json(const ProblemConfig& cfg, const ExtrusionReport& rep);
std::string elliptic_report_json(const ProblemConfig& cfg, const EllipticHoleReport& rep);
/// Report for the generic solvers: solved rows plus net extents.
std::string field_report_json(const ProblemConfig& cfg, const SlipLineField& field,
                              const CharacteristicNet& net,
                              const std::vector<std::pair<std::string, double>>& extras);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace slat

#include "slat/exporters.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace slat {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct BBox {
    double xmin = std::numeric_limits<double>::infinity();
    double xmax = -std::numeric_limits<double>::infinity();
    double ymin = std::numeric_limits<double>::infinity();
    double ymax = -std::numeric_limits<double>::infinity();
    void add(double x, double y) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
};

ordered_json config_echo(const ProblemConfig& cfg) {
    ordered_json j = ordered_json::object();
    for (const auto& [k, v] : cfg.echo) j[k] = v;
    return j;
}

ordered_json series_json(const FactorialSeries& s) {
    ordered_json arr = ordered_json::array();
    for (double c : s.coeffs()) arr.push_back(c);
    return arr;
}

std::string finish(const ProblemConfig& cfg, ordered_json report) {
    ordered_json j = ordered_json::object();
    j["slat_version"] = "0.1.0";
    j["config"] = config_echo(cfg);
    j["report"] = std::move(report);
    return j.dump(2) + "\n";
}

}  // namespace

std::string net_csv_string(const CharacteristicNet& net) {
    std::string out = "alpha,beta,x,y,phi,sigma\n";
    for (std::size_t i = 0; i < net.n_alpha(); ++i)
        for (std::size_t j = 0; j < net.n_beta(); ++j) {
            const NetNode& n = net.at(i, j);
            out += fmt12(n.alpha) + "," + fmt12(n.beta) + "," + fmt12(n.x) + "," + fmt12(n.y) +
                   "," + fmt12(n.phi) + "," + fmt12(n.sigma) + "\n";
        }
    return out;
}

std::string net_svg_string(const std::vector<const CharacteristicNet*>& nets) {
    BBox bb;
    for (const auto* net : nets)
        for (const auto& n : net->nodes()) bb.add(n.x, -n.y);  // svg y grows downward
    const double w = std::max(bb.xmax - bb.xmin, 1e-9);
    const double h = std::max(bb.ymax - bb.ymin, 1e-9);
    const double margin = 0.05 * std::max(w, h);
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt12(bb.xmin - margin) << " "
      << fmt12(bb.ymin - margin) << " " << fmt12(w + 2 * margin) << " " << fmt12(h + 2 * margin)
      << "\">\n";
    s << "<style>.alpha-line{fill:none;stroke:#b03030;stroke-width:" << fmt12(0.004 * std::max(w, h))
      << "}.beta-line{fill:none;stroke:#3050b0;stroke-width:" << fmt12(0.004 * std::max(w, h))
      << "}</style>\n";
    for (const auto* net : nets) {
        for (std::size_t j = 0; j < net->n_beta(); ++j) {  // alpha-lines: fixed beta
            s << "<polyline class=\"alpha-line\" points=\"";
            for (std::size_t i = 0; i < net->n_alpha(); ++i) {
                const NetNode& n = net->at(i, j);
                s << fmt12(n.x) << "," << fmt12(-n.y) << (i + 1 < net->n_alpha() ? " " : "");
            }
            s << "\"/>\n";
        }
        for (std::size_t i = 0; i < net->n_alpha(); ++i) {  // beta-lines: fixed alpha
            s << "<polyline class=\"beta-line\" points=\"";
            for (std::size_t j = 0; j < net->n_beta(); ++j) {
                const NetNode& n = net->at(i, j);
                s << fmt12(n.x) << "," << fmt12(-n.y) << (j + 1 < net->n_beta() ? " " : "");
            }
            s << "\"/>\n";
        }
    }
    s << "</svg>\n";
    return s.str();
}

std::string profile_csv_string(const std::vector<AxisSample>& profile) {
    std::string out = "xi,alpha,sigma1_2k,sigma2_2k,delta_2k\n";
    for (const AxisSample& p : profile)
        out += fmt12(p.xi) + "," + fmt12(p.alpha) + "," + fmt12(p.sigma1) + "," + fmt12(p.sigma2) +
               "," + fmt12(p.delta) + "\n";
    return out;
}

std::string profile_svg_string(const std::vector<AxisSample>& profile) {
    BBox bb;
    for (const AxisSample& p : profile) bb.add(p.xi, -p.delta);
    const double w = std::max(bb.xmax - bb.xmin, 1e-9);
    const double h = std::max(bb.ymax - bb.ymin, 1e-9);
    const double m = 0.08 * std::max(w, h);
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt12(bb.xmin - m) << " "
      << fmt12(bb.ymin - m) << " " << fmt12(w + 2 * m) << " " << fmt12(h + 2 * m) << "\">\n";
    s << "<style>.delta{fill:none;stroke:#208020;stroke-width:" << fmt12(0.01 * std::max(w, h))
      << "}.axis{stroke:#404040;stroke-width:" << fmt12(0.005 * std::max(w, h)) << "}</style>\n";
    s << "<line class=\"axis\" x1=\"" << fmt12(bb.xmin) << "\" y1=\"" << fmt12(bb.ymax) << "\" x2=\""
      << fmt12(bb.xmax) << "\" y2=\"" << fmt12(bb.ymax) << "\"/>\n";
    s << "<polyline class=\"delta\" points=\"";
    for (std::size_t i = 0; i < profile.size(); ++i)
        s << fmt12(profile[i].xi) << "," << fmt12(-profile[i].delta)
          << (i + 1 < profile.size() ? " " : "");
    s << "\"/>\n</svg>\n";
    return s.str();
}

std::string extrusion_report_json(const ProblemConfig& cfg, const ExtrusionReport& rep) {
    ordered_json r = ordered_json::object();
    r["x_E"] = rep.x_E;
    r["y_E"] = rep.y_E;
    r["H"] = rep.H;
    r["h_exit"] = rep.h_exit;
    r["P_over_H"] = rep.P_over_H;
    r["p_B"] = rep.p_B;
    r["p_D"] = rep.p_D;
    r["sigma_hat"] = rep.sigma_hat;
    r["path_consistency"] = rep.path_consistency;
    r["origin"] = {{"x", rep.origin.x}, {"y", rep.origin.y}, {"phi", rep.origin.phi}};
    r["a_coeffs"] = series_json(rep.field.a());
    r["b_coeffs"] = series_json(rep.field.b());
    return finish(cfg, std::move(r));
}

std::string elliptic_report_json(const ProblemConfig& cfg, const EllipticHoleReport& rep) {
    ordered_json r = ordered_json::object();
    r["r_coeffs"] = series_json(rep.r_row);
    r["r_fit_error"] = rep.r_fit_error;
    r["convergence_warning"] = rep.convergence_warning;
    r["vertex"] = {{"x", rep.vertex.x}, {"y", rep.vertex.y}, {"phi", rep.vertex.phi}};
    r["vertex_error"] = rep.vertex_error;
    r["mirror_symmetry_error"] = rep.mirror_symmetry_error;
    r["domain1_a"] = series_json(rep.field1.a());
    r["domain1_b"] = series_json(rep.field1.b());
    r["domain2_a"] = series_json(rep.field2.a());
    r["domain2_b"] = series_json(rep.field2.b());
    ordered_json prof = ordered_json::array();
    for (const AxisSample& p : rep.profile)
        prof.push_back({{"xi", p.xi},
                        {"alpha", p.alpha},
                        {"sigma1_2k", p.sigma1},
                        {"sigma2_2k", p.sigma2},
                        {"delta_2k", p.delta}});
    r["axis_profile"] = std::move(prof);
    return finish(cfg, std::move(r));
}

std::string field_report_json(const ProblemConfig& cfg, const SlipLineField& field,
                              const CharacteristicNet& net,
                              const std::vector<std::pair<std::string, double>>& extras) {
    ordered_json r = ordered_json::object();
    r["a_coeffs"] = series_json(field.a());
    r["b_coeffs"] = series_json(field.b());
    r["sigma0"] = field.sigma0();
    r["k"] = field.k();
    for (const auto& [key, v] : extras) r[key] = v;
    const NetNode& last = net.at(net.n_alpha() - 1, net.n_beta() - 1);
    r["corner"] = {{"alpha", last.alpha}, {"beta", last.beta}, {"x", last.x}, {"y", last.y}};
    return finish(cfg, std::move(r));
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace slat

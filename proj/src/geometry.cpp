#include "slat/geometry.hpp"

#include "slat/detail/quadrature.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace slat {
namespace {

using detail::kGaussW;
using detail::kGaussX;

struct XY {
    double x, y;
};

// integrate the alpha-leg from (a0, beta) to (a1, beta); two Gauss panels
// per cell edge keep even violently oscillating high-order series terms
// integrated to near machine precision
XY alpha_leg(const SlipLineField& f, double a0, double a1, double beta, double phi0,
             const NetOptions& opt) {
    double dx = 0.0, dy = 0.0;
    for (int p = 0; p < 2; ++p) {
        const double lo = a0 + 0.5 * p * (a1 - a0);
        const double mid = lo + 0.25 * (a1 - a0), half = 0.25 * (a1 - a0);
        for (std::size_t g = 0; g < kGaussX.size(); ++g) {
            const double a = mid + half * kGaussX[g];
            const double r = f.radius_alpha(a, beta, opt.terms);
            const double ph = phi0 + a + beta;
            dx += kGaussW[g] * half * r * std::cos(ph);
            dy += kGaussW[g] * half * r * std::sin(ph);
        }
    }
    return {dx, dy};
}

// integrate the beta-leg from (alpha, b0) to (alpha, b1)
XY beta_leg(const SlipLineField& f, double b0, double b1, double alpha, double phi0,
            const NetOptions& opt) {
    double dx = 0.0, dy = 0.0;
    for (int p = 0; p < 2; ++p) {
        const double lo = b0 + 0.5 * p * (b1 - b0);
        const double mid = lo + 0.25 * (b1 - b0), half = 0.25 * (b1 - b0);
        for (std::size_t g = 0; g < kGaussX.size(); ++g) {
            const double b = mid + half * kGaussX[g];
            const double s = f.radius_beta(alpha, b, opt.terms);
            const double ph = phi0 + alpha + b;
            dx += kGaussW[g] * half * s * std::sin(ph);
            dy += -kGaussW[g] * half * s * std::cos(ph);
        }
    }
    return {dx, dy};
}

// circumscribed-circle radius through three points; infinite -> huge value
double circumradius(const NetNode& p, const NetNode& q, const NetNode& r) {
    const double ax = q.x - p.x, ay = q.y - p.y;
    const double bx = r.x - q.x, by = r.y - q.y;
    const double cx = r.x - p.x, cy = r.y - p.y;
    const double la = std::hypot(ax, ay), lb = std::hypot(bx, by), lc = std::hypot(cx, cy);
    const double cross = ax * by - ay * bx;
    if (std::abs(cross) < 1e-300) return 1e300;
    return la * lb * lc / (2.0 * std::abs(cross));
}

}  // namespace

StressState stress_at(const SlipLineField& f, double alpha, double beta) {
    const double k = f.k();
    StressState st{};
    st.phi = alpha + beta;
    st.sigma = f.sigma0() + 2.0 * k * (alpha - beta);
    st.s11 = st.sigma - k * std::sin(2.0 * st.phi);
    st.s22 = st.sigma + k * std::sin(2.0 * st.phi);
    st.s12 = k * std::cos(2.0 * st.phi);
    st.s1 = st.sigma + k;
    st.s2 = st.sigma - k;
    return st;
}

CharacteristicNet build_net(const SlipLineField& f, std::size_t n_alpha, std::size_t n_beta,
                            double alpha0, double alpha1, double beta0, double beta1,
                            const Pose& origin, const NetOptions& opt) {
    if (n_alpha < 2 || n_beta < 2)
        throw std::invalid_argument("build_net: grid must be at least 2x2");
    CharacteristicNet net(n_alpha, n_beta);
    const double da = (alpha1 - alpha0) / static_cast<double>(n_alpha - 1);
    const double db = (beta1 - beta0) / static_cast<double>(n_beta - 1);

    for (std::size_t i = 0; i < n_alpha; ++i)
        for (std::size_t j = 0; j < n_beta; ++j) {
            NetNode& nd = net.at(i, j);
            nd.alpha = alpha0 + static_cast<double>(i) * da;
            nd.beta = beta0 + static_cast<double>(j) * db;
            nd.phi = origin.phi + (nd.alpha - alpha0) + (nd.beta - beta0);
            nd.sigma = f.sigma0() + 2.0 * f.k() * (nd.alpha - nd.beta);
        }

    // column j = 0 along the initial alpha-line, then each beta-line outward
    net.at(0, 0).x = origin.x;
    net.at(0, 0).y = origin.y;
    const double phi_origin = origin.phi - alpha0 - beta0;  // so that phi = phi_origin + alpha + beta
    for (std::size_t i = 1; i < n_alpha; ++i) {
        const NetNode& prev = net.at(i - 1, 0);
        XY d = alpha_leg(f, prev.alpha, prev.alpha + da, beta0, phi_origin, opt);
        net.at(i, 0).x = prev.x + d.x;
        net.at(i, 0).y = prev.y + d.y;
    }
    for (std::size_t i = 0; i < n_alpha; ++i) {
        const double alpha = net.at(i, 0).alpha;
        for (std::size_t j = 1; j < n_beta; ++j) {
            const NetNode& prev = net.at(i, j - 1);
            XY d = beta_leg(f, prev.beta, prev.beta + db, alpha, phi_origin, opt);
            NetNode& nd = net.at(i, j);
            nd.x = prev.x + d.x;
            nd.y = prev.y + d.y;
            if (!std::isfinite(nd.x) || !std::isfinite(nd.y))
                throw std::runtime_error("build_net: non-finite coordinates at node (" +
                                         std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
    return net;
}

Pose node_via_beta_first(const SlipLineField& f, double alpha0, double beta0, double alpha,
                         double beta, const Pose& origin, const NetOptions& opt) {
    const double phi_origin = origin.phi - alpha0 - beta0;
    double x = origin.x, y = origin.y;
    const int steps = 8;  // composite panels for the single long legs
    double b = beta0;
    const double db = (beta - beta0) / steps;
    for (int s = 0; s < steps; ++s, b += db) {
        XY d = beta_leg(f, b, b + db, alpha0, phi_origin, opt);
        x += d.x;
        y += d.y;
    }
    double a = alpha0;
    const double da = (alpha - alpha0) / steps;
    for (int s = 0; s < steps; ++s, a += da) {
        XY d = alpha_leg(f, a, a + da, beta, phi_origin, opt);
        x += d.x;
        y += d.y;
    }
    return {x, y, origin.phi + (alpha - alpha0) + (beta - beta0)};
}

CurvatureReport net_curvature_check(const CharacteristicNet& net, const SlipLineField& f,
                                    std::size_t terms) {
    CurvatureReport rep;
    for (std::size_t j = 0; j < net.n_beta(); ++j)
        for (std::size_t i = 1; i + 1 < net.n_alpha(); ++i) {
            const double measured = circumradius(net.at(i - 1, j), net.at(i, j), net.at(i + 1, j));
            const NetNode& nd = net.at(i, j);
            const double exact = f.radius_alpha(nd.alpha, nd.beta, terms);
            if (std::abs(exact) < 1e-12) continue;
            rep.max_rel_err_alpha =
                std::max(rep.max_rel_err_alpha, std::abs(measured - std::abs(exact)) / std::abs(exact));
        }
    for (std::size_t i = 0; i < net.n_alpha(); ++i)
        for (std::size_t j = 1; j + 1 < net.n_beta(); ++j) {
            const double measured = circumradius(net.at(i, j - 1), net.at(i, j), net.at(i, j + 1));
            const NetNode& nd = net.at(i, j);
            const double exact = f.radius_beta(nd.alpha, nd.beta, terms);
            if (std::abs(exact) < 1e-12) continue;
            rep.max_rel_err_beta =
                std::max(rep.max_rel_err_beta, std::abs(measured - std::abs(exact)) / std::abs(exact));
        }
    return rep;
}

}  // namespace slat

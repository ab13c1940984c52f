#include "slat/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace slat::oracle {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

FdGrid fd_telegraph(const std::function<double(double)>& edge_alpha,
                    const std::function<double(double)>& edge_beta,
                    double A, double B, std::size_t steps, int sign) {
    const std::size_t n = steps;
    FdGrid g{n, A / static_cast<double>(n), B / static_cast<double>(n),
             std::vector<double>((n + 1) * (n + 1), 0.0)};
    auto idx = [n](std::size_t i, std::size_t j) { return i * (n + 1) + j; };
    for (std::size_t i = 0; i <= n; ++i) g.f[idx(i, 0)] = edge_alpha(g.ha * static_cast<double>(i));
    for (std::size_t j = 0; j <= n; ++j) g.f[idx(0, j)] = edge_beta(g.hb * static_cast<double>(j));

    // integral form f(a,b) = f(a,0) + f(0,b) - f(0,0) - sign * double-integral,
    // discretized cell by cell with the trapezoid rule; the resulting per-cell
    // fixed point has the closed-form solution below.
    const double q = sign * g.ha * g.hb / 4.0;
    const double denom = 1.0 + q;
    if (std::abs(denom) < 1e-12)
        throw std::runtime_error("fd_telegraph: step too large, cell update degenerate");
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            const double f00 = g.f[idx(i - 1, j - 1)];
            const double f10 = g.f[idx(i, j - 1)];
            const double f01 = g.f[idx(i - 1, j)];
            g.f[idx(i, j)] = (f10 + f01 - f00 - q * (f00 + f10 + f01)) / denom;
        }
    return g;
}

EllipsePoint ellipse_curvature_param(double t, double b) {
    if (b <= 0.0) throw std::domain_error("ellipse_curvature_param: axis ratio b must be positive");
    const double st = std::sin(t), ct = std::cos(t);
    EllipsePoint p{};
    p.rho = std::pow(st * st + b * b * ct * ct, 1.5) / b;
    p.gamma = std::atan2(b * ct, st);  // tangent rotates 0 -> pi/2 over the quarter
    p.alpha = 0.5 * (p.gamma - kPi / 4.0);
    return p;
}

double ellipse_radius_of_alpha(double alpha, double b) {
    if (b <= 0.0) throw std::domain_error("ellipse_radius_of_alpha: axis ratio b must be positive");
    const double gamma = kPi / 4.0 + 2.0 * alpha;
    double t;
    if (gamma <= 0.0)
        t = kPi / 2.0;
    else if (gamma >= kPi / 2.0)
        t = 0.0;
    else
        t = std::atan(b / std::tan(gamma));
    return ellipse_curvature_param(t, b).rho;
}

double series_sum_reference(const std::function<double(int)>& term, double tol) {
    double sum = 0.0, comp = 0.0;
    int small_run = 0;
    for (int k = 0; k < 100000; ++k) {
        const double t = term(k);
        const double y = t - comp;
        const double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
        if (std::abs(t) < tol * std::abs(sum)) {
            if (++small_run >= 3) break;
        } else {
            small_run = 0;
        }
    }
    return sum;
}

}  // namespace slat::oracle

// Independent numerical ground truth: a finite-difference marching solver
// for the telegraph equation, first-principles ellipse curvature, and a
// compensated reference summation. Nothing here shares evaluation code with
// the series kernel; that independence is the point.
#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace slat::oracle {

struct FdGrid {
    std::size_t n;            // steps per side; (n+1)^2 values
    double ha, hb;            // step sizes
    std::vector<double> f;    // row-major (i*(n+1)+j), i along alpha

    double at(std::size_t i, std::size_t j) const { return f[i * (n + 1) + j]; }
};

/// March f_ab + sign * f = 0 over [0,A] x [0,B] from edge data
/// f(alpha, 0) = edge_alpha(alpha), f(0, beta) = edge_beta(beta) using the
/// second-order trapezoidal cell update (the per-cell fixed point solved in
/// closed form). Edges must agree at the corner.
FdGrid fd_telegraph(const std::function<double(double)>& edge_alpha,
                    const std::function<double(double)>& edge_beta,
                    double A, double B, std::size_t steps, int sign = +1);

struct EllipsePoint {
    double rho;    // radius of curvature
    double gamma;  // tangent angle
    double alpha;  // characteristic parameter, gamma = pi/4 + 2 alpha
};

/// First-principles curvature of the ellipse x = cos t, y = b sin t, with
/// the quarter arc traversed from the semiminor to the semimajor vertex so
/// the tangent angle grows from 0 to pi/2:
///   rho(t) = (sin^2 t + b^2 cos^2 t)^{3/2} / b,  tan(gamma) = b cot(t).
/// Throws std::domain_error for b <= 0.
EllipsePoint ellipse_curvature_param(double t, double b);

/// rho composed with the inverse tangent-angle map: the boundary curvature
/// radius as a function of the characteristic parameter alpha in
/// [-pi/8, pi/8].
double ellipse_radius_of_alpha(double alpha, double b);

/// Kahan-compensated partial summation; stops once |term| < tol * |sum|
/// holds for three consecutive terms. `term(k)` returns the k-th term.
double series_sum_reference(const std::function<double(int)>& term, double tol);

}  // namespace slat::oracle

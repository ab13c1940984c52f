// Boundary value problems for the slip-line curvature radii R, S.
//
// A solved field is a pair of factorial coefficient rows (a, b) holding the
// curvature radii of the initial characteristics, R(alpha,0) and S(0,beta),
// together with the stress datum (sigma0, k). Everything else is evaluated
// from the hypergeometric representation
//
//   R(alpha,beta) = sum_n (a_n alpha_n + b_{n-1} beta_n) F(n+1; -alpha beta)
//   S(alpha,beta) = sum_n (-a_{n-1} alpha_n + b_n beta_n) F(n+1; -alpha beta)
//
// with x_n = x^n/n! and a_{-1} = b_{-1} = 0. Both satisfy the telegraph
// equation f_ab + f = 0 and the compatibility system S_a + R = 0,
// R_b - S = 0 identically. The Cauchy, free-surface and straight-contact
// mixed problems reduce to this initial-characteristic form.
#pragma once

#include <cstddef>

#include "slat/operators.hpp"
#include "slat/series.hpp"

namespace slat {

struct Domain {
    double alpha_min = 0.0, alpha_max = 0.0;
    double beta_min = 0.0, beta_max = 0.0;
};

class SlipLineField {
public:
    SlipLineField() = default;
    SlipLineField(FactorialSeries a, FactorialSeries b, double sigma0, double k)
        : a_(std::move(a)), b_(std::move(b)), sigma0_(sigma0), k_(k) {}

    const FactorialSeries& a() const { return a_; }
    const FactorialSeries& b() const { return b_; }
    double sigma0() const { return sigma0_; }
    double k() const { return k_; }
    Domain& domain() { return domain_; }
    const Domain& domain() const { return domain_; }

    /// R(alpha, beta), hypergeometric form, first `terms` series terms.
    double radius_alpha(double alpha, double beta, std::size_t terms) const;
    /// S(alpha, beta).
    double radius_beta(double alpha, double beta, std::size_t terms) const;
    double radius_alpha(double alpha, double beta) const { return radius_alpha(alpha, beta, default_terms()); }
    double radius_beta(double alpha, double beta) const { return radius_beta(alpha, beta, default_terms()); }

    std::size_t default_terms() const;

private:
    FactorialSeries a_, b_;
    double sigma0_ = 0.0;
    double k_ = 1.0;
    Domain domain_{};
};

/// Initial characteristic problem: both initial curvature rows given.
SlipLineField solve_initial_char(FactorialSeries a, FactorialSeries b,
                                 double sigma0 = 0.0, double k = 1.0);

enum class Family { alpha, beta };

/// Degenerate rectangle: one initial line shrinks to a point (its row is
/// zero); `which` names the family of the surviving initial line.
SlipLineField solve_fan(const FactorialSeries& nonzero, Family which,
                        double sigma0 = 0.0, double k = 1.0);

// ---------------------------------------------------------------------------
struct CauchyBoundary {
    FactorialSeries r;   // radius of curvature of the data curve, row in alpha
    double eta;          // angle between the curve and the alpha direction
    double sigma_n = 0.0;
    double tau_n = 0.0;

    CauchyBoundary(FactorialSeries r_, double eta_) : r(std::move(r_)), eta(eta_) {}

    /// Constant tractions fix eta = pi/2 - acos(tau_n/k)/2. Throws if
    /// |tau_n| > k (yield criterion violated).
    static CauchyBoundary from_tractions(FactorialSeries r, double sigma_n, double tau_n,
                                         double k = 1.0);

    /// Mean stress on the data curve implied by the tractions.
    double boundary_mean_stress(double k = 1.0) const;
};

/// Sign convention for the reported b row of the Cauchy solution. The two
/// conventions describe the same physical net with opposite orientation of
/// the beta-line family:
///  * identity_consistent: b = 2 r D; the field satisfies
///      R(alpha,alpha) = 2 cos(eta) r(alpha),
///      S(alpha,alpha) = -2 sin(eta) r(alpha)
///    along the data diagonal.
///  * mirrored (default): b negated, so beta-line radii are reported with
///    the opposite sign (e.g. the unit circle under normal pressure gives
///    b_n = sqrt(2) (-1)^n, the classical log-spiral presentation).
enum class BetaOrientation { mirrored, identity_consistent };

SlipLineField solve_cauchy_const(const CauchyBoundary& bnd, double sigma0, double k,
                                 std::size_t n,
                                 BetaOrientation orient = BetaOrientation::mirrored);

struct FreeSurfaceSolution {
    SlipLineField field;  // b = a F
    FactorialSeries r;    // free-surface curvature radius row: r = R(alpha,alpha)/sqrt(2)
};

/// Stress-free surface (eta = pi/4): given the alpha-line row, returns the
/// completed field and the surface curvature-radius row.
FreeSurfaceSolution solve_free_surface(const FactorialSeries& a, double sigma0, double k,
                                       std::size_t n);

/// Straight frictional contact along beta = -alpha: b = a T(eta) for
/// eta < pi/2; the perfectly rough case eta = pi/2 uses b_n = (-1)^n a_n.
/// Throws std::domain_error outside (0, pi/2].
SlipLineField solve_mixed_straight(const FactorialSeries& a, double eta, double sigma0,
                                   double k, std::size_t n);

// ---------------------------------------------------------------------------
// Alternate evaluation routes, kept for cross-validation of the production
// hypergeometric form.
double eval_R_matrix_form(const SlipLineField& f, double alpha, double beta, std::size_t n);
double eval_S_matrix_form(const SlipLineField& f, double alpha, double beta, std::size_t n);
double eval_R_double_series(const SlipLineField& f, double alpha, double beta, std::size_t n);
double eval_S_double_series(const SlipLineField& f, double alpha, double beta, std::size_t n);

}  // namespace slat

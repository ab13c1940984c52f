#include "slat/bvp.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace slat {
namespace {

constexpr double kPi = 3.14159265358979323846;

// Angles are radians throughout the library; a characteristic coordinate
// beyond pi in magnitude almost certainly means a degree value leaked in.
void check_radians(double alpha, double beta) {
    assert(std::abs(alpha) <= kPi && std::abs(beta) <= kPi &&
           "characteristic coordinates must be radians");
    (void)alpha;
    (void)beta;
}

}  // namespace

std::size_t SlipLineField::default_terms() const {
    return std::max<std::size_t>(std::max(a_.size(), b_.size() + 1), 1);
}

double SlipLineField::radius_alpha(double alpha, double beta, std::size_t terms) const {
    check_radians(alpha, beta);
    const double z = -alpha * beta;
    double an = 1.0, bn = 1.0;  // alpha^n/n!, beta^n/n!
    double sum = 0.0;
    for (std::size_t n = 0; n < terms; ++n) {
        const double coeff_a = a_[n];
        const double coeff_b = (n >= 1 ? b_[n - 1] : 0.0);
        if (coeff_a != 0.0 || coeff_b != 0.0)
            sum += (coeff_a * an + coeff_b * bn) * hyp0f1(static_cast<int>(n), z);
        an *= alpha / static_cast<double>(n + 1);
        bn *= beta / static_cast<double>(n + 1);
    }
    return sum;
}

double SlipLineField::radius_beta(double alpha, double beta, std::size_t terms) const {
    check_radians(alpha, beta);
    const double z = -alpha * beta;
    double an = 1.0, bn = 1.0;
    double sum = 0.0;
    for (std::size_t n = 0; n < terms; ++n) {
        const double coeff_a = (n >= 1 ? -a_[n - 1] : 0.0);
        const double coeff_b = b_[n];
        if (coeff_a != 0.0 || coeff_b != 0.0)
            sum += (coeff_a * an + coeff_b * bn) * hyp0f1(static_cast<int>(n), z);
        an *= alpha / static_cast<double>(n + 1);
        bn *= beta / static_cast<double>(n + 1);
    }
    return sum;
}

SlipLineField solve_initial_char(FactorialSeries a, FactorialSeries b, double sigma0, double k) {
    return SlipLineField(std::move(a), std::move(b), sigma0, k);
}

SlipLineField solve_fan(const FactorialSeries& nonzero, Family which, double sigma0, double k) {
    const std::size_t n = std::max<std::size_t>(nonzero.size(), 1);
    if (which == Family::alpha)
        return SlipLineField(nonzero, FactorialSeries::zeros(n), sigma0, k);
    return SlipLineField(FactorialSeries::zeros(n), nonzero, sigma0, k);
}

CauchyBoundary CauchyBoundary::from_tractions(FactorialSeries r, double sigma_n, double tau_n,
                                              double k) {
    if (std::abs(tau_n) > k)
        throw std::domain_error("CauchyBoundary: |tau_n| > k violates the yield criterion");
    const double eta = kPi / 2.0 - 0.5 * std::acos(tau_n / k);
    CauchyBoundary b(std::move(r), eta);
    b.sigma_n = sigma_n;
    b.tau_n = tau_n;
    return b;
}

double CauchyBoundary::boundary_mean_stress(double k) const {
    return sigma_n + k * std::sin(2.0 * eta);
}

SlipLineField solve_cauchy_const(const CauchyBoundary& bnd, double sigma0, double k,
                                 std::size_t n, BetaOrientation orient) {
    if (std::abs(bnd.tau_n) > k)
        throw std::domain_error("solve_cauchy_const: |tau_n| > k violates the yield criterion");
    CauchyRows rows = match_cauchy_const(bnd.r, bnd.eta, n);
    if (orient == BetaOrientation::mirrored) rows.b *= -1.0;
    return SlipLineField(std::move(rows.a), std::move(rows.b), sigma0, k);
}

FreeSurfaceSolution solve_free_surface(const FactorialSeries& a, double sigma0, double k,
                                       std::size_t n) {
    FactorialSeries b = match_free_surface(a, n);
    SlipLineField field(a.truncated(n), b, sigma0, k);
    // r(2 alpha + eta) = R(alpha, alpha)/sqrt(2) with eta = pi/4
    DiagonalRows diag = diagonal_rows(field.a(), field.b(), +1, n);
    FactorialSeries r = (1.0 / std::sqrt(2.0)) * diag.r_row;
    return {std::move(field), std::move(r)};
}

SlipLineField solve_mixed_straight(const FactorialSeries& a, double eta, double sigma0,
                                   double k, std::size_t n) {
    if (!(eta > 0.0 && eta <= kPi / 2.0))
        throw std::domain_error("solve_mixed_straight: eta must lie in (0, pi/2]");
    FactorialSeries b = (eta == kPi / 2.0 || std::abs(eta - kPi / 2.0) < 1e-15)
                            ? a.truncated(n).reflected(1.0, -1)  // b_n = (-1)^n a_n
                            : match_mixed_straight(a, eta, n);
    return SlipLineField(a.truncated(n), std::move(b), sigma0, k);
}

double eval_R_matrix_form(const SlipLineField& f, double alpha, double beta, std::size_t n) {
    FactorialSeries row = matrix_A(beta, n).apply(f.a().truncated(n));
    row += matrix_B(beta, n).apply(f.b().truncated(n));
    return row.eval(alpha);
}

double eval_S_matrix_form(const SlipLineField& f, double alpha, double beta, std::size_t n) {
    FactorialSeries row = matrix_B(alpha, n).apply(-1.0 * f.a().truncated(n));
    row += matrix_A(alpha, n).apply(f.b().truncated(n));
    return row.eval(beta);
}

double eval_R_double_series(const SlipLineField& f, double alpha, double beta, std::size_t n) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double an = f.a()[i], bn = f.b()[i];
        double apow = 1.0, bpow = 1.0;  // alpha^{i+k}/(i+k)!, beta^{i+k+1}/(i+k+1)!
        for (std::size_t d = 1; d <= i; ++d) apow *= alpha / static_cast<double>(d);
        for (std::size_t d = 1; d <= i + 1; ++d) bpow *= beta / static_cast<double>(d);
        double ka = 1.0, kb = 1.0;  // (-beta)^k/k!, (-alpha)^k/k!
        for (std::size_t kk = 0; kk < n; ++kk) {
            sum += an * apow * ka + bn * bpow * kb;
            apow *= alpha / static_cast<double>(i + kk + 1);
            bpow *= beta / static_cast<double>(i + kk + 2);
            ka *= -beta / static_cast<double>(kk + 1);
            kb *= -alpha / static_cast<double>(kk + 1);
        }
    }
    return sum;
}

double eval_S_double_series(const SlipLineField& f, double alpha, double beta, std::size_t n) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double an = f.a()[i], bn = f.b()[i];
        double apow = 1.0, bpow = 1.0;  // alpha^{i+k+1}/(i+k+1)!, beta^{i+k}/(i+k)!
        for (std::size_t d = 1; d <= i + 1; ++d) apow *= alpha / static_cast<double>(d);
        for (std::size_t d = 1; d <= i; ++d) bpow *= beta / static_cast<double>(d);
        double ka = 1.0, kb = 1.0;
        for (std::size_t kk = 0; kk < n; ++kk) {
            sum += -an * apow * ka + bn * bpow * kb;
            apow *= alpha / static_cast<double>(i + kk + 2);
            bpow *= beta / static_cast<double>(i + kk + 1);
            ka *= -beta / static_cast<double>(kk + 1);
            kb *= -alpha / static_cast<double>(kk + 1);
        }
    }
    return sum;
}

}  // namespace slat

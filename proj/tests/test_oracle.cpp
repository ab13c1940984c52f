#include "slat/oracle.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "slat/bvp.hpp"

using namespace slat;

namespace {
constexpr double kPi = 3.14159265358979323846;

// local factorial-basis evaluation, deliberately separate from the library
double eval_row(const std::vector<double>& c, double t) {
    double s = 0.0, tn = 1.0;
    for (std::size_t n = 0; n < c.size(); ++n) {
        s += c[n] * tn;
        tn *= t / static_cast<double>(n + 1);
    }
    return s;
}
}  // namespace

TEST_CASE("fd_telegraph: zero edges give the zero grid") {
    auto g = oracle::fd_telegraph([](double) { return 0.0; }, [](double) { return 0.0; }, 0.5, 0.5,
                                  16);
    for (double v : g.f) CHECK(v == 0.0);
}

TEST_CASE("fd_telegraph matches the two-arc closed form at second order") {
    const double a0 = 1.0, b0 = 0.4;
    // R(alpha,0) = a0, R(0,beta) = a0 + b0*beta (edge data of the arc field)
    auto edge_a = [&](double) { return a0; };
    auto edge_b = [&](double be) { return a0 + b0 * be; };
    double prev = 0.0;
    bool first = true;
    for (std::size_t steps : {16u, 32u, 64u}) {
        auto g = oracle::fd_telegraph(edge_a, edge_b, 0.5, 0.5, steps);
        double err = 0.0;
        for (std::size_t i = 0; i <= steps; ++i)
            for (std::size_t j = 0; j <= steps; ++j) {
                const double al = g.ha * i, be = g.hb * j;
                const double z = -al * be;
                const double exact = a0 * hyp0f1(0, z) + b0 * be * hyp0f1(1, z);
                err = std::max(err, std::abs(g.at(i, j) - exact));
            }
        if (!first) {
            const double order = std::log2(prev / err);
            CHECK(order > 1.8);
            CHECK(order < 2.2);
        }
        prev = err;
        first = false;
    }
}

TEST_CASE("fd_telegraph vs the hypergeometric solution on random rows") {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> ac(12), bc(12);
    for (auto& v : ac) v = u(rng);
    for (auto& v : bc) v = u(rng);
    SlipLineField f = solve_initial_char(FactorialSeries(ac), FactorialSeries(bc));

    auto edge_a = [&](double al) { return eval_row(ac, al); };
    auto edge_b = [&](double be) {
        double s = ac[0], pw = be;
        for (std::size_t n = 0; n < bc.size(); ++n) {
            s += bc[n] * pw;
            pw *= be / static_cast<double>(n + 2);
        }
        return s;
    };
    std::vector<double> errs;
    for (std::size_t steps : {16u, 32u, 64u}) {
        auto g = oracle::fd_telegraph(edge_a, edge_b, 0.5, 0.5, steps);
        double err = 0.0;
        for (std::size_t i = 0; i <= steps; ++i)
            for (std::size_t j = 0; j <= steps; ++j)
                err = std::max(err, std::abs(g.at(i, j) - f.radius_alpha(g.ha * i, g.hb * j, 20)));
        errs.push_back(err);
    }
    CHECK(std::log2(errs[0] / errs[1]) == doctest::Approx(2.0).epsilon(0.12));
    CHECK(std::log2(errs[1] / errs[2]) == doctest::Approx(2.0).epsilon(0.12));
}

TEST_CASE("fd_telegraph cross-checks the two-arc field at negative beta") {
    // substitute beta = -beta~ : g(alpha, beta~) = R(alpha, -beta~) obeys
    // g_ab - g = 0, handled by the oracle's sign switch
    const double s2 = std::sqrt(2.0);
    SlipLineField f = solve_initial_char(FactorialSeries{s2}, FactorialSeries{-s2});
    auto edge_a = [&](double) { return s2; };
    auto edge_b = [&](double bt) { return s2 + s2 * bt; };  // R(0, -bt) = a0 - b0 bt
    const double A = kPi / 6.0, B = kPi / 9.0;
    double prev = 0.0;
    bool first = true;
    for (std::size_t steps : {32u, 64u, 128u}) {
        auto g = oracle::fd_telegraph(edge_a, edge_b, A, B, steps, -1);
        const double err = std::abs(g.at(steps, steps) - f.radius_alpha(A, -B, 16));
        if (!first) {
            const double order = std::log2(prev / err);
            CHECK(order > 1.8);
            CHECK(order < 2.2);
        }
        prev = err;
        first = false;
    }
    CHECK(prev < 1e-5);
}

TEST_CASE("ellipse curvature: circle reduces to unit radius") {
    for (double t = 0.0; t <= kPi / 2.0 + 1e-9; t += 0.1)
        CHECK(oracle::ellipse_curvature_param(t, 1.0).rho == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("ellipse curvature at the vertices, b = 0.4") {
    CHECK(oracle::ellipse_curvature_param(kPi / 2.0, 0.4).rho == doctest::Approx(2.5).epsilon(1e-13));
    CHECK(oracle::ellipse_curvature_param(0.0, 0.4).rho == doctest::Approx(0.16).epsilon(1e-13));
}

TEST_CASE("ellipse curvature range and continuity over the quadrant") {
    const double b = 0.55;
    double lo = 1e300, hi = -1e300, prev = 0.0;
    bool first = true;
    for (double t = 0.0; t <= kPi / 2.0 + 1e-9; t += kPi / 720.0) {
        const double r = oracle::ellipse_curvature_param(t, b).rho;
        lo = std::min(lo, r);
        hi = std::max(hi, r);
        if (!first) CHECK(std::abs(r - prev) < 0.05);
        prev = r;
        first = false;
    }
    CHECK(lo == doctest::Approx(b * b).epsilon(1e-10));
    CHECK(hi == doctest::Approx(1.0 / b).epsilon(1e-10));
}

TEST_CASE("ellipse composition: gamma = pi/4 + 2 alpha inversion") {
    const double b = 0.4;
    // alpha = 0 is the 45-degree-tangent point; the composition agrees with
    // the direct parametric values there and at the vertices
    CHECK(oracle::ellipse_radius_of_alpha(kPi / 8.0, b) == doctest::Approx(b * b).epsilon(1e-12));
    CHECK(oracle::ellipse_radius_of_alpha(-kPi / 8.0, b) == doctest::Approx(1.0 / b).epsilon(1e-12));
    const double tstar = std::atan(b);
    CHECK(oracle::ellipse_radius_of_alpha(0.0, b) ==
          doctest::Approx(oracle::ellipse_curvature_param(tstar, b).rho).epsilon(1e-12));
    CHECK_THROWS_AS(oracle::ellipse_curvature_param(0.3, -0.1), std::domain_error);
}

TEST_CASE("series_sum_reference: exponential series") {
    const double s = oracle::series_sum_reference(
        [](int k) {
            double t = std::sqrt(2.0);
            for (int j = 1; j <= k; ++j) t /= j;
            return t;
        },
        1e-16);
    CHECK(s == doctest::Approx(std::sqrt(2.0) * std::exp(1.0)).epsilon(1e-14));
}

TEST_CASE("series_sum_reference: frozen hypergeometric constants") {
    const double j02 = oracle::series_sum_reference(
        [](int k) {
            double t = 1.0;
            for (int j = 1; j <= k; ++j) t *= -1.0 / (static_cast<double>(j) * j);
            return t;
        },
        1e-16);
    const double i12 = oracle::series_sum_reference(
        [](int k) {
            double t = 1.0;
            for (int j = 1; j <= k; ++j) t *= 1.0 / (static_cast<double>(j) * (j + 1));
            return t;
        },
        1e-16);
    CHECK(std::abs(j02 - 0.22389077914) < 1e-11);
    CHECK(std::abs(i12 - 1.59063685463) < 1e-11);
}

#include "slat/bvp.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"

using namespace slat;

namespace {
constexpr double kPi = 3.14159265358979323846;
const double kSqrt2 = std::sqrt(2.0);

FactorialSeries random_series(std::mt19937& rng, std::size_t n, double amp = 1.0) {
    std::uniform_real_distribution<double> u(-amp, amp);
    std::vector<double> c(n);
    for (auto& v : c) v = u(rng);
    return FactorialSeries(std::move(c));
}
}  // namespace

TEST_CASE("two circular arcs: closed form with F(1), F(2)") {
    const double a0 = 1.3, b0 = -0.7;
    SlipLineField f = solve_initial_char(FactorialSeries{a0}, FactorialSeries{b0});
    for (double al : {0.0, 0.2, 0.45})
        for (double be : {-0.4, 0.0, 0.3}) {
            const double z = -al * be;
            CHECK(f.radius_alpha(al, be, 16) ==
                  doctest::Approx(a0 * hyp0f1(0, z) + b0 * be * hyp0f1(1, z)).epsilon(1e-14));
            CHECK(f.radius_beta(al, be, 16) ==
                  doctest::Approx(b0 * hyp0f1(0, z) - a0 * al * hyp0f1(1, z)).epsilon(1e-14));
        }
}

TEST_CASE("zero rows give the zero field") {
    SlipLineField f = solve_initial_char(FactorialSeries::zeros(4), FactorialSeries::zeros(4));
    CHECK(f.radius_alpha(0.3, -0.2, 10) == 0.0);
    CHECK(f.radius_beta(0.3, -0.2, 10) == 0.0);
}

TEST_CASE("log-spiral field: R(alpha,0) = sqrt2 exp(alpha), S(0,beta) = sqrt2 exp(-beta)") {
    std::vector<double> ac(20, kSqrt2), bc(20);
    for (std::size_t n = 0; n < 20; ++n) bc[n] = kSqrt2 * (n % 2 ? -1.0 : 1.0);
    SlipLineField f = solve_initial_char(FactorialSeries(ac), FactorialSeries(bc));
    for (double al = 0.0; al <= 0.5 + 1e-12; al += 0.05) {
        CHECK(std::abs(f.radius_alpha(al, 0.0, 20) - kSqrt2 * std::exp(al)) < 1e-10);
        CHECK(std::abs(f.radius_beta(0.0, al, 20) - kSqrt2 * std::exp(-al)) < 1e-10);
    }
}

TEST_CASE("edge values: R at beta = 0 reduces to the a row") {
    std::mt19937 rng(2);
    FactorialSeries a = random_series(rng, 12), b = random_series(rng, 12);
    SlipLineField f = solve_initial_char(a, b);
    for (double al : {0.1, 0.7})
        CHECK(f.radius_alpha(al, 0.0, 14) == doctest::Approx(a.eval(al)).epsilon(1e-13));
}

TEST_CASE("edge values follow the compatibility system") {
    // R(0,beta) = a_0 + sum b_n beta^{n+1}/(n+1)!  and
    // S(alpha,0) = b_0 - sum a_n alpha^{n+1}/(n+1)!  (from S_a = -R, R_b = S)
    std::mt19937 rng(4);
    FactorialSeries a = random_series(rng, 12), b = random_series(rng, 12);
    SlipLineField f = solve_initial_char(a, b);
    for (double t : {0.15, 0.4}) {
        double r_edge = a[0], s_edge = b[0];
        double pw = t;  // t^{n+1}/(n+1)!
        for (std::size_t n = 0; n < 12; ++n) {
            r_edge += b[n] * pw;
            s_edge -= a[n] * pw;
            pw *= t / static_cast<double>(n + 2);
        }
        CHECK(f.radius_alpha(0.0, t, 14) == doctest::Approx(r_edge).epsilon(1e-13));
        CHECK(f.radius_beta(t, 0.0, 14) == doctest::Approx(s_edge).epsilon(1e-13));
    }
}

TEST_CASE("fan: single arc against the closed form") {
    SlipLineField f = solve_fan(FactorialSeries{1.0}, Family::alpha);
    for (double al : {0.1, 0.5})
        for (double be : {-0.3, 0.2}) {
            const double z = -al * be;
            CHECK(f.radius_alpha(al, be, 16) == doctest::Approx(hyp0f1(0, z)).epsilon(1e-14));
            CHECK(f.radius_beta(al, be, 16) == doctest::Approx(-al * hyp0f1(1, z)).epsilon(1e-14));
        }
    SlipLineField z = solve_fan(FactorialSeries::zeros(3), Family::beta);
    CHECK(z.radius_alpha(0.2, 0.2, 8) == 0.0);
}

TEST_CASE("telegraph residual of a fan field vanishes at second order") {
    SlipLineField f = solve_fan(FactorialSeries{1.0, 0.5}, Family::alpha);
    const double al = 0.3, be = 0.25;
    double prev = 0.0;
    bool first = true;
    for (double h : {0.02, 0.01}) {
        const double cross = (f.radius_alpha(al + h, be + h, 24) - f.radius_alpha(al + h, be - h, 24) -
                              f.radius_alpha(al - h, be + h, 24) + f.radius_alpha(al - h, be - h, 24)) /
                             (4.0 * h * h);
        const double res = std::abs(cross + f.radius_alpha(al, be, 24));
        if (!first) CHECK(res < 0.3 * prev + 1e-11);
        prev = res;
        first = false;
    }
}

TEST_CASE("compatibility system holds pointwise by finite differences") {
    std::mt19937 rng(8);
    FactorialSeries a = random_series(rng, 10), b = random_series(rng, 10);
    SlipLineField f = solve_initial_char(a, b);
    const double h = 1e-4;
    for (double al : {0.15, 0.35})
        for (double be : {-0.25, 0.2}) {
            const double s_a =
                (f.radius_beta(al + h, be, 24) - f.radius_beta(al - h, be, 24)) / (2.0 * h);
            CHECK(std::abs(s_a + f.radius_alpha(al, be, 24)) < 1e-6);
            const double r_b =
                (f.radius_alpha(al, be + h, 24) - f.radius_alpha(al, be - h, 24)) / (2.0 * h);
            CHECK(std::abs(r_b - f.radius_beta(al, be, 24)) < 1e-6);
        }
}

TEST_CASE("cauchy solve: unit circle, frictionless") {
    CauchyBoundary bnd = CauchyBoundary::from_tractions(FactorialSeries{1.0}, -2.0, 0.0, 1.0);
    CHECK(bnd.eta == doctest::Approx(kPi / 4.0));
    SlipLineField f = solve_cauchy_const(bnd, 0.0, 1.0, 20);
    for (std::size_t n = 0; n < 20; ++n) {
        CHECK(f.a()[n] == doctest::Approx(kSqrt2).epsilon(1e-12));
        CHECK(f.b()[n] == doctest::Approx(kSqrt2 * (n % 2 ? -1.0 : 1.0)).epsilon(1e-12));
    }
    for (double al = 0.0; al <= 0.5 + 1e-12; al += 0.1)
        CHECK(std::abs(f.radius_alpha(al, 0.0, 20) - kSqrt2 * std::exp(al)) < 1e-10);
}

TEST_CASE("cauchy solve: leading-order rows for a plain arc") {
    for (double eta : {0.5, kPi / 4.0, 1.2}) {
        const double rho0 = 1.7;
        SlipLineField f = solve_cauchy_const(CauchyBoundary(FactorialSeries{rho0}, eta), 0.0, 1.0, 8);
        CHECK(f.a()[0] == doctest::Approx(2.0 * rho0 * std::cos(eta)).epsilon(1e-13));
        // mirrored default: b_0 = +2 rho0 sin(eta)
        CHECK(f.b()[0] == doctest::Approx(2.0 * rho0 * std::sin(eta)).epsilon(1e-13));
    }
}

TEST_CASE("cauchy solve, identity orientation: diagonal data identity") {
    std::mt19937 rng(12);
    FactorialSeries r = random_series(rng, 10, 0.5);
    r.at(0) += 2.0;  // keep the radius positive-ish
    const double eta = kPi / 3.0;
    SlipLineField f = solve_cauchy_const(CauchyBoundary(r, eta), 0.0, 1.0, 24,
                                         BetaOrientation::identity_consistent);
    for (double al = -0.3; al <= 0.3 + 1e-12; al += 0.1) {
        const double rv = r.eval(al);
        CHECK(std::abs(f.radius_alpha(al, al, 24) - 2.0 * std::cos(eta) * rv) < 1e-9);
        CHECK(std::abs(f.radius_beta(al, al, 24) + 2.0 * std::sin(eta) * rv) < 1e-9);
    }
}

TEST_CASE("cauchy solve rejects super-yield shear") {
    CHECK_THROWS_AS(CauchyBoundary::from_tractions(FactorialSeries{1.0}, 0.0, 1.5, 1.0),
                    std::domain_error);
}

TEST_CASE("free surface: b = aF, R + S vanishes on the diagonal") {
    std::mt19937 rng(21);
    FactorialSeries a = random_series(rng, 16);
    FreeSurfaceSolution sol = solve_free_surface(a, 0.0, 1.0, 16);
    FactorialSeries bF = matrix_F(16).apply(a.truncated(16));
    for (std::size_t n = 0; n < 16; ++n) CHECK(std::abs(sol.field.b()[n] - bF[n]) < 1e-12);
    for (double al = 0.0; al <= 0.4 + 1e-12; al += 0.05)
        CHECK(std::abs(sol.field.radius_alpha(al, al, 16) + sol.field.radius_beta(al, al, 16)) <
              1e-10);
}

TEST_CASE("free surface: radius row at the origin") {
    FreeSurfaceSolution sol = solve_free_surface(FactorialSeries{1.0}, 0.0, 1.0, 8);
    CHECK(sol.field.b()[0] == doctest::Approx(-1.0));
    CHECK(sol.r[0] == doctest::Approx(1.0 / kSqrt2).epsilon(1e-14));
    // r row reproduces R(alpha,alpha)/sqrt2 along the surface
    for (double al : {0.05, 0.15})
        CHECK(sol.r.eval(al) ==
              doctest::Approx(sol.field.radius_alpha(al, al, 8) / kSqrt2).epsilon(1e-10));
}

TEST_CASE("mixed straight contact: frictionless and rough special cases") {
    std::mt19937 rng(29);
    FactorialSeries a = random_series(rng, 10);
    SlipLineField f45 = solve_mixed_straight(a, kPi / 4.0, 0.0, 1.0, 10);
    SlipLineField frough = solve_mixed_straight(a, kPi / 2.0, 0.0, 1.0, 10);
    for (std::size_t n = 0; n < 10; ++n) {
        const double want = (n % 2 ? -1.0 : 1.0) * a[n];
        CHECK(f45.b()[n] == doctest::Approx(want).epsilon(1e-12));
        CHECK(frough.b()[n] == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("mixed straight contact: T-row data and wall identity") {
    const double eta = kPi / 3.0;
    SlipLineField f = solve_mixed_straight(FactorialSeries{1.0}, eta, 0.0, 1.0, 8);
    const double tn = std::tan(eta);
    CHECK(f.b()[0] == doctest::Approx(tn).epsilon(1e-13));
    CHECK(f.b()[1] == doctest::Approx(tn * tn - 1.0).epsilon(1e-13));
    CHECK(f.b()[2] == doctest::Approx(tn * (tn * tn - 1.0)).epsilon(1e-13));

    std::mt19937 rng(33);
    for (double e : {kPi / 6.0, kPi / 3.0}) {
        FactorialSeries a = random_series(rng, 16);
        SlipLineField g = solve_mixed_straight(a, e, 0.0, 1.0, 16);
        for (double al = 0.0; al <= 0.3 + 1e-12; al += 0.05) {
            const double res = g.radius_alpha(al, -al, 16) * std::sin(e) -
                               g.radius_beta(al, -al, 16) * std::cos(e);
            CHECK(std::abs(res) < 1e-10);
        }
    }
}

TEST_CASE("mirror-symmetric data satisfies the opposite wall identity") {
    // b_k = (-1)^{k+1} a_k is the reflection of the alpha-line in the wall;
    // on beta = -alpha it gives R + S = 0 (the other material side).
    std::mt19937 rng(41);
    FactorialSeries a = random_series(rng, 14);
    FactorialSeries b = a.reflected(-1.0, -1);
    SlipLineField f = solve_initial_char(a, b);
    for (double al = 0.0; al <= 0.4 + 1e-12; al += 0.08)
        CHECK(std::abs(f.radius_alpha(al, -al, 14) + f.radius_beta(al, -al, 14)) < 1e-11);
}

TEST_CASE("mixed domain errors") {
    CHECK_THROWS_AS(solve_mixed_straight(FactorialSeries{1.0}, -0.1, 0.0, 1.0, 4),
                    std::domain_error);
    CHECK_THROWS_AS(solve_mixed_straight(FactorialSeries{1.0}, 2.0, 0.0, 1.0, 4),
                    std::domain_error);
}

TEST_CASE("representation equivalence: hypergeometric, matrix, double series") {
    std::mt19937 rng(55);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    FactorialSeries a = random_series(rng, 16), b = random_series(rng, 16);
    SlipLineField f = solve_initial_char(a, b);
    for (int trial = 0; trial < 100; ++trial) {
        const double al = u(rng), be = u(rng);
        const double rh = f.radius_alpha(al, be, 16);
        const double sh = f.radius_beta(al, be, 16);
        CHECK(std::abs(rh - eval_R_matrix_form(f, al, be, 16)) < 1e-12);
        CHECK(std::abs(rh - eval_R_double_series(f, al, be, 16)) < 1e-12);
        CHECK(std::abs(sh - eval_S_matrix_form(f, al, be, 16)) < 1e-12);
        CHECK(std::abs(sh - eval_S_double_series(f, al, be, 16)) < 1e-12);
    }
}

TEST_CASE("truncation error decays factorially for bounded rows") {
    std::mt19937 rng(60);
    FactorialSeries a = random_series(rng, 30), b = random_series(rng, 30);
    SlipLineField f = solve_initial_char(a, b);
    double prev = 1e300;
    for (std::size_t n = 4; n <= 16; n += 4) {
        double worst = 0.0;
        for (double al : {0.5, 1.0})
            for (double be : {-1.0, 0.7})
                worst = std::max(worst,
                                 std::abs(f.radius_alpha(al, be, n) - f.radius_alpha(al, be, 30)));
        CHECK(worst < prev);
        // at least factorial-rate decay between successive checks
        if (n > 4) CHECK(worst < prev * 0.05);
        prev = worst;
    }
}

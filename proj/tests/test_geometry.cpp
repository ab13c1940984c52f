#include "slat/geometry.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"

using namespace slat;

namespace {
constexpr double kPi = 3.14159265358979323846;
const double kSqrt2 = std::sqrt(2.0);
}  // namespace

TEST_CASE("stress_at origin") {
    SlipLineField f = solve_initial_char(FactorialSeries{1.0}, FactorialSeries{1.0}, 0.0, 1.0);
    StressState st = stress_at(f, 0.0, 0.0);
    CHECK(st.sigma == 0.0);
    CHECK(st.phi == 0.0);
    CHECK(st.s11 == doctest::Approx(0.0));
    CHECK(st.s22 == doctest::Approx(0.0));
    CHECK(st.s12 == doctest::Approx(1.0));
    CHECK(st.s1 == doctest::Approx(1.0));
    CHECK(st.s2 == doctest::Approx(-1.0));
}

TEST_CASE("stress_at mean stress follows 2k(alpha - beta)") {
    SlipLineField f = solve_initial_char(FactorialSeries{1.0}, FactorialSeries{1.0}, 0.0, 1.0);
    CHECK(stress_at(f, 0.1, -0.2).sigma == doctest::Approx(0.6).epsilon(1e-14));
}

TEST_CASE("stress_at satisfies the yield identity") {
    SlipLineField f = solve_initial_char(FactorialSeries{1.0}, FactorialSeries{1.0}, -0.4, 1.7);
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> u(-0.6, 0.6);
    for (int i = 0; i < 50; ++i) {
        StressState st = stress_at(f, u(rng), u(rng));
        const double lhs = (st.s11 - st.s22) * (st.s11 - st.s22) + 4.0 * st.s12 * st.s12;
        CHECK(lhs == doctest::Approx(4.0 * f.k() * f.k()).epsilon(1e-12));
        CHECK(st.sigma == doctest::Approx(0.5 * (st.s11 + st.s22)).epsilon(1e-12));
    }
}

TEST_CASE("constant-curvature alpha line reconstructs a circle") {
    const double a0 = 1.5;
    SlipLineField f = solve_initial_char(FactorialSeries{a0}, FactorialSeries::zeros(1));
    NetOptions opt;
    opt.terms = 8;
    CharacteristicNet net = build_net(f, 33, 2, 0.0, 1.0, 0.0, 0.01, Pose{0.0, 0.0, 0.0}, opt);
    // center of the circle is at origin + a0 * (-(sin phi0), cos phi0) = (0, a0)
    for (std::size_t i = 0; i < 33; ++i) {
        const NetNode& n = net.at(i, 0);
        CHECK(std::abs(std::hypot(n.x - 0.0, n.y - a0) - a0) < 1e-8);
    }
}

TEST_CASE("log-spiral alpha line matches the closed-form curve") {
    // rows of the spiral field: R(alpha,0) = sqrt2 e^alpha; the initial
    // alpha line integrates to ((e^a cos a + e^a sin a - 1), ...) * sqrt2/2
    // from x'(a) = sqrt2 e^a cos(a), y'(a) = sqrt2 e^a sin(a), phi0 = 0
    std::vector<double> ac(24, kSqrt2), bc(24);
    for (std::size_t n = 0; n < 24; ++n) bc[n] = kSqrt2 * (n % 2 ? -1.0 : 1.0);
    SlipLineField f = solve_initial_char(FactorialSeries(ac), FactorialSeries(bc));
    NetOptions opt;
    opt.terms = 24;
    CharacteristicNet net = build_net(f, 41, 2, 0.0, 0.5, 0.0, 0.01, Pose{0.0, 0.0, 0.0}, opt);
    for (std::size_t i = 0; i < 41; ++i) {
        const NetNode& n = net.at(i, 0);
        const double a = n.alpha;
        const double x = kSqrt2 / 2.0 * (std::exp(a) * (std::cos(a) + std::sin(a)) - 1.0);
        const double y = kSqrt2 / 2.0 * (std::exp(a) * (std::sin(a) - std::cos(a)) + 1.0);
        CHECK(std::abs(n.x - x) < 1e-8);
        CHECK(std::abs(n.y - y) < 1e-8);
    }
}

TEST_CASE("Hencky's first theorem holds exactly on the grid") {
    SlipLineField f = solve_initial_char(FactorialSeries{1.0, 0.3}, FactorialSeries{-1.0, 0.2});
    CharacteristicNet net = build_net(f, 9, 7, 0.0, 0.4, 0.0, -0.3, Pose{0, 0, 0.2});
    for (std::size_t j = 1; j < 7; ++j) {
        const double dphi = net.at(0, j).phi - net.at(0, j - 1).phi;
        for (std::size_t i = 0; i < 9; ++i)
            CHECK(net.at(i, j).phi - net.at(i, j - 1).phi == doctest::Approx(dphi).epsilon(1e-15));
    }
}

TEST_CASE("net orthogonality at interior nodes") {
    SlipLineField f = solve_initial_char(FactorialSeries{1.0, 0.4, -0.2}, FactorialSeries{-0.8, 0.1});
    const std::size_t n = 17;
    CharacteristicNet net = build_net(f, n, n, 0.0, 0.4, 0.0, -0.35, Pose{0, 0, -0.5});
    for (std::size_t i = 1; i + 1 < n; ++i)
        for (std::size_t j = 1; j + 1 < n; ++j) {
            const double ax = net.at(i + 1, j).x - net.at(i - 1, j).x;
            const double ay = net.at(i + 1, j).y - net.at(i - 1, j).y;
            const double bx = net.at(i, j + 1).x - net.at(i, j - 1).x;
            const double by = net.at(i, j + 1).y - net.at(i, j - 1).y;
            const double cosang = (ax * bx + ay * by) / (std::hypot(ax, ay) * std::hypot(bx, by));
            CHECK(std::abs(cosang) < 0.03);  // O(h)
        }
}

TEST_CASE("path independence of the corner node") {
    SlipLineField f = solve_initial_char(FactorialSeries{1.2, -0.3, 0.5}, FactorialSeries{-0.9, 0.6});
    NetOptions opt;
    CharacteristicNet net = build_net(f, 25, 25, 0.0, 0.45, 0.0, -0.3, Pose{0.3, -0.1, 0.7}, opt);
    const Pose alt = node_via_beta_first(f, 0.0, 0.0, 0.45, -0.3, Pose{0.3, -0.1, 0.7}, opt);
    const NetNode& corner = net.at(24, 24);
    CHECK(std::abs(alt.x - corner.x) < 1e-9);
    CHECK(std::abs(alt.y - corner.y) < 1e-9);
}

TEST_CASE("curvature recovery converges at second order") {
    SlipLineField f = solve_initial_char(FactorialSeries{kSqrt2}, FactorialSeries{-kSqrt2});
    const Pose pose{0, 0, -0.96};
    double prev_a = 0.0, prev_b = 0.0;
    bool first = true;
    for (std::size_t n : {17u, 33u, 65u}) {
        CharacteristicNet net =
            build_net(f, n, n, 0.0, kPi / 6.0, 0.0, -kPi / 9.0, pose);
        CurvatureReport rep = net_curvature_check(net, f);
        if (!first) {
            const double ra = prev_a / rep.max_rel_err_alpha;
            const double rb = prev_b / rep.max_rel_err_beta;
            CHECK(ra > 2.8);  // ratio ~ 4 under h -> h/2
            CHECK(ra < 5.5);
            CHECK(rb > 2.8);
            CHECK(rb < 5.5);
        }
        prev_a = rep.max_rel_err_alpha;
        prev_b = rep.max_rel_err_beta;
        first = false;
    }
    CHECK(prev_a < 1e-3);  // 65x65 grid resolves the radii to better than 0.1%
    CHECK(prev_b < 1e-3);
}

TEST_CASE("build_net rejects degenerate grids") {
    SlipLineField f = solve_initial_char(FactorialSeries{1.0}, FactorialSeries{1.0});
    CHECK_THROWS_AS(build_net(f, 1, 5, 0, 1, 0, 1, Pose{}), std::invalid_argument);
}

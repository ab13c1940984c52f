#include "slat/problems.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "slat/detail/quadrature.hpp"
#include "slat/oracle.hpp"

namespace slat {
namespace {

constexpr double kPi = 3.14159265358979323846;

using detail::kGaussW;
using detail::kGaussX;

// composite 8-point Gauss-Legendre on [lo, hi]
double integrate(double lo, double hi, int panels, const std::function<double(double)>& f) {
    double acc = 0.0;
    const double w = (hi - lo) / panels;
    for (int p = 0; p < panels; ++p) {
        const double a = lo + p * w;
        const double mid = a + 0.5 * w, half = 0.5 * w;
        for (std::size_t g = 0; g < kGaussX.size(); ++g) acc += kGaussW[g] * half * f(mid + half * kGaussX[g]);
    }
    return acc;
}

}  // namespace

ExtrusionReport run_extrusion(const ExtrusionConfig& cfg) {
    const double k = cfg.k;
    const double r0 = cfg.face_length / std::sqrt(2.0);
    const double phi0 = -kPi / 4.0 - cfg.gamma;

    // Stage 1: field with zero datum, exit balance fixes sigma_hat.
    SlipLineField f0 = solve_initial_char(FactorialSeries{r0}, FactorialSeries{-r0}, 0.0, k);

    // Exit boundary = straight fan radial A -> A* (frozen state (alpha1, 0),
    // length r0) + the beta-line alpha = alpha1. Traction x-component across
    // a beta-line is -sigma cos(phi) + k sin(phi); sigma = sigma_hat +
    // 2k(alpha - beta) splits the balance into sigma_hat and constant parts.
    const double phiA = phi0 + cfg.alpha1;
    double c_sig = -std::cos(phiA) * r0;
    double c_const = (-2.0 * k * cfg.alpha1 * std::cos(phiA) + k * std::sin(phiA)) * r0;
    c_sig += integrate(cfg.beta1, 0.0, 4, [&](double b) {
        const double ph = phiA + b;
        return -std::cos(ph) * (-f0.radius_beta(cfg.alpha1, b, cfg.terms));
    });
    c_const += integrate(cfg.beta1, 0.0, 4, [&](double b) {
        const double ph = phiA + b;
        const double ds = -f0.radius_beta(cfg.alpha1, b, cfg.terms);
        return (-2.0 * k * (cfg.alpha1 - b) * std::cos(ph) + k * std::sin(ph)) * ds;
    });
    if (std::abs(c_sig) < 1e-14)
        throw std::runtime_error("run_extrusion: degenerate exit balance");
    const double sigma_hat = -c_const / c_sig;

    ExtrusionReport rep{
        0, 0, 0, 0, 0, 0, 0, sigma_hat, 0,
        Pose{r0 * std::cos(phi0), r0 * std::sin(phi0), phi0},
        CharacteristicNet(2, 2),
        solve_initial_char(FactorialSeries{r0}, FactorialSeries{-r0}, sigma_hat, k)};
    rep.field.domain() = {0.0, cfg.alpha1, cfg.beta1, 0.0};

    NetOptions opt;
    opt.terms = cfg.terms;
    rep.net = build_net(rep.field, cfg.grid_alpha, cfg.grid_beta, 0.0, cfg.alpha1, 0.0, cfg.beta1,
                        rep.origin, opt);

    const NetNode& corner = rep.net.at(cfg.grid_alpha - 1, cfg.grid_beta - 1);
    rep.x_E = corner.x;
    rep.y_E = corner.y;
    const Pose alt =
        node_via_beta_first(rep.field, 0.0, 0.0, cfg.alpha1, cfg.beta1, rep.origin, opt);
    rep.path_consistency = std::hypot(alt.x - corner.x, alt.y - corner.y);

    rep.H = -rep.y_E;
    rep.h_exit = rep.H - cfg.face_length * std::sin(cfg.gamma);
    rep.P_over_H = (k - sigma_hat) * cfg.face_length * std::sin(cfg.gamma) / rep.H;
    rep.p_B = -(sigma_hat + 2.0 * k * (0.0 - cfg.beta1));
    rep.p_D = -(sigma_hat + 2.0 * k * (cfg.alpha1 - 0.0));
    return rep;
}

FactorialSeries ellipse_boundary_row(double axis_ratio, std::size_t terms) {
    if (!(axis_ratio > 0.0 && axis_ratio <= 1.0))
        throw std::domain_error("ellipse_boundary_row: axis ratio must lie in (0, 1]");
    const double hw = kPi / 8.0;
    constexpr std::size_t M = 64;  // Chebyshev sample count
    constexpr long double kPiL = 3.141592653589793238462643383279503L;
    std::array<long double, M> ys;
    for (std::size_t j = 0; j < M; ++j) {
        const long double xj = std::cos((2.0L * j + 1.0L) * kPiL / (2.0 * M));
        ys[j] = oracle::ellipse_radius_of_alpha(static_cast<double>(hw * xj), axis_ratio);
    }
    // Chebyshev coefficients by discrete cosine sum; extended precision keeps
    // the basis conversion below the oracle's own accuracy
    std::vector<long double> ck(terms, 0.0L);
    for (std::size_t kk = 0; kk < terms; ++kk) {
        long double acc = 0.0L;
        for (std::size_t j = 0; j < M; ++j)
            acc += ys[j] * std::cos(kk * (2.0L * j + 1.0L) * kPiL / (2.0 * M));
        ck[kk] = 2.0L * acc / M;
    }
    ck[0] *= 0.5L;
    // Chebyshev -> monomial in u = alpha/hw via the T_k recurrence
    std::vector<long double> mono(terms, 0.0L), tkm1(terms, 0.0L), tk(terms, 0.0L);
    tkm1[0] = 1.0L;  // T_0
    mono[0] += ck[0];
    if (terms > 1) {
        tk[1] = 1.0L;  // T_1
        for (std::size_t i = 0; i < terms; ++i) mono[i] += ck[1] * tk[i];
        for (std::size_t kk = 2; kk < terms; ++kk) {
            std::vector<long double> tkp(terms, 0.0L);
            for (std::size_t i = 0; i + 1 < terms; ++i) tkp[i + 1] = 2.0L * tk[i];
            for (std::size_t i = 0; i < terms; ++i) tkp[i] -= tkm1[i];
            for (std::size_t i = 0; i < terms; ++i) mono[i] += ck[kk] * tkp[i];
            tkm1 = tk;
            tk = tkp;
        }
    }
    // u^n -> alpha^n/hw^n, then factorial normalization
    std::vector<double> row(terms, 0.0);
    long double fact = 1.0L, hwn = 1.0L;
    for (std::size_t n = 0; n < terms; ++n) {
        if (n > 0) {
            fact *= static_cast<long double>(n);
            hwn *= hw;
        }
        row[n] = static_cast<double>(mono[n] / hwn * fact);
    }
    return FactorialSeries(std::move(row));
}

EllipticHoleReport run_elliptic_hole(const EllipticHoleConfig& cfg) {
    const double b = cfg.axis_ratio;
    const double k = cfg.k;
    const double hw = kPi / 8.0;
    const std::size_t n_field = cfg.terms + 9;  // internal truncation headroom

    FactorialSeries r_row = ellipse_boundary_row(b, cfg.terms);

    double fit_err = 0.0;
    for (int i = 0; i <= 200; ++i) {
        const double al = -hw + 2.0 * hw * i / 200.0;
        fit_err = std::max(fit_err,
                           std::abs(r_row.eval(al) - oracle::ellipse_radius_of_alpha(al, b)));
    }

    CauchyBoundary bnd = CauchyBoundary::from_tractions(r_row, -cfg.pressure * k, 0.0, k);
    const double sigma_hat = bnd.boundary_mean_stress(k);  // -p + k
    SlipLineField field1 =
        solve_cauchy_const(bnd, sigma_hat, k, n_field, BetaOrientation::identity_consistent);
    field1.domain() = {-hw, hw, -hw, hw};

    // Domain 2: initial beta-line = domain-1 edge beta-line through the
    // vertex (alpha = pi/8), recentred at beta = pi/8; alpha-line mirrored.
    const double av = hw, bv = hw;
    FactorialSeries rowS = matrix_B(av, n_field).apply(-1.0 * field1.a());
    rowS += matrix_A(av, n_field).apply(field1.b());
    FactorialSeries b2 = rowS.shifted(bv);
    FactorialSeries a2 = b2.reflected(-1.0, -1);  // a_k = (-1)^{k+1} b_k
    SlipLineField field2(a2, b2, sigma_hat, k);
    field2.domain() = {0.0, cfg.axis_span, -cfg.axis_span, 0.0};

    // Domain-1 net from the mid-arc origin; the (pi/8, pi/8) node is the
    // semimajor vertex and must land on (1, 0).
    const double tstar = std::atan(b);
    Pose origin1{std::cos(tstar), -b * std::sin(tstar), 0.0};
    NetOptions opt;
    // one extra series term so the R evaluation carries the full b row (its
    // entry n contributes at series index n + 1) and vice versa; otherwise
    // the marching paths lose exact compatibility at the truncation edge
    opt.terms = n_field + 1;
    // build_net anchors at the (alpha0, beta0) = (-hw, -hw) corner; march
    // there from the mid-arc origin first.
    const Pose corner_pose = node_via_beta_first(field1, 0.0, 0.0, -hw, -hw, origin1, opt);
    CharacteristicNet net1 = build_net(field1, cfg.grid, cfg.grid, -hw, hw, -hw, hw, corner_pose, opt);

    // vertex = node (hw, hw) of domain 1
    const NetNode& vx = net1.at(cfg.grid - 1, cfg.grid - 1);
    Pose vertex{vx.x, vx.y, vx.phi};
    const double vertex_error = std::hypot(vx.x - 1.0, vx.y - 0.0);

    CharacteristicNet net2 = build_net(field2, cfg.grid, cfg.grid, 0.0, cfg.axis_span, 0.0,
                                       -cfg.axis_span, vertex, opt);

    double mirror_err = 0.0;
    for (std::size_t i = 0; i < cfg.grid; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            const NetNode& p = net2.at(i, j);
            const NetNode& q = net2.at(j, i);
            mirror_err = std::max(mirror_err, std::abs(p.x - q.x));
            mirror_err = std::max(mirror_err, std::abs((p.y - vertex.y) + (q.y - vertex.y)));
        }

    EllipticHoleReport rep{std::move(r_row),
                           fit_err,
                           fit_err > 1e-4,
                           std::move(field1),
                           std::move(field2),
                           vertex,
                           vertex_error,
                           mirror_err,
                           {},
                           std::move(net1),
                           std::move(net2),
                           corner_pose};

    // Axis profile along the anti-diagonal of domain 2.
    rep.profile.reserve(cfg.profile_points);
    for (std::size_t i = 0; i < cfg.profile_points; ++i) {
        const double ap = cfg.axis_span * static_cast<double>(i) /
                          static_cast<double>(cfg.profile_points - 1);
        const Pose node = node_via_beta_first(rep.field2, 0.0, 0.0, ap, -ap, vertex, opt);
        AxisSample s{};
        s.xi = node.x;
        s.alpha = ap;
        const StressState st = stress_at(rep.field2, ap, -ap);
        s.sigma1 = st.s1 / (2.0 * k);
        s.sigma2 = st.s2 / (2.0 * k);
        s.delta = (st.s1 + cfg.pressure * k) / (2.0 * k);
        rep.profile.push_back(s);
    }
    return rep;
}

}  // namespace slat

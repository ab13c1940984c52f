#include "slat/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace slat {
namespace {

// (n+2k)! / (k! (n+k)!) = C(n+2k, k) -- weight of alpha_{n+2k} in
// alpha_n * F(n+1; z(alpha)). Exact integer arithmetic; the left-to-right
// product keeps every partial result integral.
double diag_weight(std::size_t n, std::size_t k) {
    unsigned long long w = 1;
    for (std::size_t j = 1; j <= k; ++j) w = w * (n + k + j) / j;
    return static_cast<double>(w);
}

double check_eta_open(double eta, const char* who) {
    if (!(eta > 0.0 && eta < M_PI / 2.0))
        throw std::domain_error(std::string(who) + ": eta must lie in (0, pi/2)");
    return eta;
}

// Shared state for the order-by-order expansion of R(alpha, s*alpha) and
// S(alpha, s*alpha). With u_n = a_n + s^n b_{n-1}, v_n = s^n b_n - a_{n-1},
// the factorial rows of the diagonal restrictions are
//   rho_m   = sum_{2k <= m} (-s)^k w(m-2k, k) u_{m-2k},
//   sigma_m = sum_{2k <= m} (-s)^k w(m-2k, k) v_{m-2k}.
// The weights grow large and cancel; extended precision keeps the
// triangular solve well below 1e-12 absolute at the truncations used here.
struct DiagonalExpansion {
    int sign;
    std::vector<long double> u, v;

    explicit DiagonalExpansion(std::size_t n, int s) : sign(s), u(n, 0.0L), v(n, 0.0L) {}

    // contributions of orders < m to (rho_m, sigma_m)
    std::pair<long double, long double> lower(std::size_t m) const {
        long double ru = 0.0L, rv = 0.0L;
        long double zk = 1.0L;
        for (std::size_t k = 1; 2 * k <= m; ++k) {
            zk *= -sign;
            const std::size_t n = m - 2 * k;
            const long double w = zk * static_cast<long double>(diag_weight(n, k));
            ru += w * u[n];
            rv += w * v[n];
        }
        return {ru, rv};
    }
};

}  // namespace

FactorialSeries OperatorMatrix::apply(const FactorialSeries& row) const {
    std::vector<double> out(n_, 0.0);
    for (std::size_t j = 0; j < n_; ++j) {
        double acc = 0.0;
        for (std::size_t i = 0; i < n_; ++i) acc += row[i] * (*this)(i, j);
        out[j] = acc;
    }
    return FactorialSeries(std::move(out));
}

OperatorMatrix OperatorMatrix::multiply(const OperatorMatrix& o) const {
    OperatorMatrix out(n_, kind_, parameter_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            const double lik = (*this)(i, k);
            if (lik == 0.0) continue;
            for (std::size_t j = 0; j < n_; ++j) out(i, j) += lik * o(k, j);
        }
    return out;
}

bool OperatorMatrix::is_upper_triangular(double tol) const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (std::abs((*this)(i, j)) > tol) return false;
    return true;
}

OperatorMatrix matrix_A(double t, std::size_t n) {
    OperatorMatrix m(n, OperatorKind::A, t);
    for (std::size_t i = 0; i < n; ++i) {
        double e = 1.0;  // (-t)^{j-i} / (j-i)!
        for (std::size_t j = i; j < n; ++j) {
            m(i, j) = e;
            e *= -t / static_cast<double>(j - i + 1);
        }
    }
    return m;
}

OperatorMatrix matrix_B(double t, std::size_t n) {
    OperatorMatrix m(n, OperatorKind::B, t);
    // first row: t^{j+1}/(j+1)! with alternating sign
    std::vector<double> pw(2 * n, 0.0);
    double e = t;
    for (std::size_t d = 1; d < 2 * n; ++d) {  // e = t^d / d!
        pw[d] = e;
        e *= t / static_cast<double>(d + 1);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = ((j % 2) ? -1.0 : 1.0) * pw[i + j + 1];
    return m;
}

OperatorMatrix matrix_F(std::size_t n) {
    OperatorMatrix m(n, OperatorKind::F, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = -1.0;
        for (std::size_t j = i + 1; j < n; ++j)
            m(i, j) = 2.0 * (((i + j + 1) % 2) ? -1.0 : 1.0);
    }
    return m;
}

OperatorMatrix matrix_T(double eta, std::size_t n) {
    check_eta_open(eta, "matrix_T");
    const double tn = std::tan(eta);
    OperatorMatrix m(n, OperatorKind::T, eta);
    for (std::size_t i = 0; i < n; ++i) {
        const double si = (i % 2) ? -1.0 : 1.0;
        m(i, i) = si * tn;
        double p = 1.0;  // tan^{j-i-1}
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = si * p * (tn * tn - 1.0);
            p *= tn;
        }
    }
    return m;
}

DiagonalRows diagonal_rows(const FactorialSeries& a, const FactorialSeries& b,
                           int sign, std::size_t n) {
    DiagonalExpansion ex(n, sign);
    long double sn = 1.0L;  // sign^n
    for (std::size_t m = 0; m < n; ++m) {
        ex.u[m] = a[m] + (m >= 1 ? sn * b[m - 1] : 0.0L);
        ex.v[m] = sn * b[m] - (m >= 1 ? a[m - 1] : 0.0L);
        sn *= sign;
    }
    std::vector<double> rr(n, 0.0), ss(n, 0.0);
    for (std::size_t m = 0; m < n; ++m) {
        auto [lu, lv] = ex.lower(m);
        rr[m] = static_cast<double>(ex.u[m] + lu);
        ss[m] = static_cast<double>(ex.v[m] + lv);
    }
    return {FactorialSeries(std::move(rr)), FactorialSeries(std::move(ss))};
}

CauchyRows match_cauchy_const(const FactorialSeries& r, double eta, std::size_t n) {
    check_eta_open(eta, "match_cauchy_const");
    const long double c = std::cos(eta), s = std::sin(eta);
    DiagonalExpansion ex(n, +1);
    std::vector<long double> a(n, 0.0L), b(n, 0.0L);
    for (std::size_t m = 0; m < n; ++m) {
        auto [lu, lv] = ex.lower(m);
        ex.u[m] = 2.0L * c * r[m] - lu;
        ex.v[m] = -2.0L * s * r[m] - lv;
        a[m] = ex.u[m] - (m >= 1 ? b[m - 1] : 0.0L);
        b[m] = ex.v[m] + (m >= 1 ? a[m - 1] : 0.0L);
    }
    std::vector<double> ad(a.begin(), a.end()), bd(b.begin(), b.end());
    return {FactorialSeries(std::move(ad)), FactorialSeries(std::move(bd))};
}

FactorialSeries match_free_surface(const FactorialSeries& a, std::size_t n) {
    DiagonalExpansion ex(n, +1);
    std::vector<long double> b(n, 0.0L);
    for (std::size_t m = 0; m < n; ++m) {
        auto [lu, lv] = ex.lower(m);
        // (u_m + v_m) + (lu + lv) = 0 with v_m = b_m - a_{m-1}
        const long double am1 = (m >= 1 ? a[m - 1] : 0.0L);
        const long double bm1 = (m >= 1 ? b[m - 1] : 0.0L);
        b[m] = -(a[m] + bm1 - am1 + lu + lv);
        ex.u[m] = a[m] + bm1;
        ex.v[m] = b[m] - am1;
    }
    std::vector<double> bd(b.begin(), b.end());
    return FactorialSeries(std::move(bd));
}

FactorialSeries match_mixed_straight(const FactorialSeries& a, double eta, std::size_t n) {
    check_eta_open(eta, "match_mixed_straight");
    const long double c = std::cos(eta), s = std::sin(eta);
    DiagonalExpansion ex(n, -1);
    std::vector<long double> b(n, 0.0L);
    long double sm = 1.0L;  // (-1)^m
    for (std::size_t m = 0; m < n; ++m) {
        auto [lu, lv] = ex.lower(m);
        // s*(u_m + lu) - c*(v_m + lv) = 0, v_m = (-1)^m b_m - a_{m-1}
        const long double pivot = c * sm;
        if (std::abs(static_cast<double>(pivot)) < 1e-14)
            throw std::domain_error("match_mixed_straight: zero pivot at order " + std::to_string(m));
        const long double am1 = (m >= 1 ? a[m - 1] : 0.0L);
        const long double bm1 = (m >= 1 ? sm * b[m - 1] : 0.0L);  // (-1)^m b_{m-1}
        ex.u[m] = a[m] + bm1;
        const long double rhs = s * (ex.u[m] + lu) - c * (lv - am1);
        b[m] = rhs / pivot;
        ex.v[m] = sm * b[m] - am1;
        sm = -sm;
    }
    std::vector<double> bd(b.begin(), b.end());
    return FactorialSeries(std::move(bd));
}

FactorialSeries match_boundary_coeffs(BoundaryCondition cnd, const FactorialSeries& known,
                                      double eta, std::size_t n) {
    switch (cnd) {
        case BoundaryCondition::cauchy_const:
            return match_cauchy_const(known, eta, n).a;
        case BoundaryCondition::free_surface:
            return match_free_surface(known, n);
        case BoundaryCondition::mixed_straight:
            return match_mixed_straight(known, eta, n);
    }
    throw std::invalid_argument("match_boundary_coeffs: unknown constraint");
}

OperatorMatrix matrix_C(double eta, std::size_t n) {
    check_eta_open(eta, "matrix_C");
    OperatorMatrix m(n, OperatorKind::C, eta);
    double fact = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) fact *= static_cast<double>(i);
        auto rows = match_cauchy_const(FactorialSeries::unit(i, n), eta, n);
        for (std::size_t j = 0; j < n; ++j) m(i, j) = fact * rows.a[j] / 2.0;
    }
    return m;
}

OperatorMatrix matrix_D(double eta, std::size_t n) {
    check_eta_open(eta, "matrix_D");
    OperatorMatrix m(n, OperatorKind::D, eta);
    double fact = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) fact *= static_cast<double>(i);
        auto rows = match_cauchy_const(FactorialSeries::unit(i, n), eta, n);
        for (std::size_t j = 0; j < n; ++j) m(i, j) = fact * rows.b[j] / 2.0;
    }
    return m;
}

FactorialSeries apply_cauchy(const OperatorMatrix& cd, const FactorialSeries& r) {
    const std::size_t n = cd.size();
    std::vector<double> ordinary(n, 0.0);
    double fact = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) fact *= static_cast<double>(i);
        ordinary[i] = r[i] / fact;
    }
    std::vector<double> out(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) acc += ordinary[i] * cd(i, j);
        out[j] = 2.0 * acc;
    }
    return FactorialSeries(std::move(out));
}

}  // namespace slat

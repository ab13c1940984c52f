// Truncated power series in the factorial-normalized basis and the 0F1
// hypergeometric kernel. A coefficient row c represents
//
//     f(t) = sum_n c_n t^n / n!
//
// which is the convention every boundary-value solver and matrix operator
// in this library acts on.
#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace slat {

class FactorialSeries {
public:
    FactorialSeries() = default;
    explicit FactorialSeries(std::vector<double> coeffs) : c_(std::move(coeffs)) {}
    FactorialSeries(std::initializer_list<double> coeffs) : c_(coeffs) {}

    static FactorialSeries zeros(std::size_t n) { return FactorialSeries(std::vector<double>(n, 0.0)); }
    /// Unit row e_i of length n.
    static FactorialSeries unit(std::size_t i, std::size_t n);

    std::size_t size() const { return c_.size(); }
    bool empty() const { return c_.empty(); }

    /// Coefficient c_n; zero beyond the stored truncation.
    double operator[](std::size_t n) const { return n < c_.size() ? c_[n] : 0.0; }
    double& at(std::size_t n) { return c_.at(n); }
    const std::vector<double>& coeffs() const { return c_; }
    std::span<const double> span() const { return c_; }

    /// sum_{n < size} c_n t^n / n!
    double eval(double t) const { return eval(t, c_.size()); }
    /// Same, using only the first `terms` coefficients.
    double eval(double t, std::size_t terms) const;

    FactorialSeries truncated(std::size_t n) const;
    /// Row of g(t) = f(shift + t). Exact for the stored polynomial.
    FactorialSeries shifted(double shift) const;
    /// Row of g(t) = scale * f(sign * t) with sign = +-1.
    FactorialSeries reflected(double scale = 1.0, int sign = -1) const;

    FactorialSeries& operator+=(const FactorialSeries& o);
    FactorialSeries& operator*=(double s);
    friend FactorialSeries operator+(FactorialSeries l, const FactorialSeries& r) { return l += r; }
    friend FactorialSeries operator*(double s, FactorialSeries f) { return f *= s; }

private:
    std::vector<double> c_;
};

/// 0F1(n+1; z) = n! sum_k z^k / (k! (k+n)!), by forward summation with a
/// relative-term stopping criterion of 1e-16 and a hard cap of 200 terms.
/// Throws std::invalid_argument for non-finite z or n < 0.
double hyp0f1(int n, double z);

/// Upper bound on the truncation error after `terms` terms of the slip-line
/// curvature series when the coefficient rows satisfy |a_n|, |b_n| <= q^n n!
/// and |alpha|, |beta| <= p. The terms form a geometric series with ratio
/// p*q, each majorized by exp(p^2). Requires 0 < p < 1/q.
double tail_bound(double q, double p, int terms);

/// Variant for plainly bounded coefficients |a_n| <= m: exponential-series
/// tail m * exp(p^2) * sum_{n >= terms} p^n / n! (single-row field).
double tail_bound_bounded(double m, double p, int terms);

}  // namespace slat

#include "slat/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace slat {

FactorialSeries FactorialSeries::unit(std::size_t i, std::size_t n) {
    std::vector<double> c(n, 0.0);
    if (i < n) c[i] = 1.0;
    return FactorialSeries(std::move(c));
}

double FactorialSeries::eval(double t, std::size_t terms) const {
    const std::size_t n = std::min(terms, c_.size());
    double sum = 0.0;
    double tn = 1.0;  // t^k / k!
    for (std::size_t k = 0; k < n; ++k) {
        sum += c_[k] * tn;
        tn *= t / static_cast<double>(k + 1);
    }
    return sum;
}

FactorialSeries FactorialSeries::truncated(std::size_t n) const {
    std::vector<double> c(c_.begin(), c_.begin() + std::min(n, c_.size()));
    c.resize(n, 0.0);
    return FactorialSeries(std::move(c));
}

FactorialSeries FactorialSeries::shifted(double shift) const {
    const std::size_t n = c_.size();
    std::vector<double> out(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double acc = 0.0;
        double sk = 1.0;  // shift^k / k!
        for (std::size_t k = 0; j + k < n; ++k) {
            acc += c_[j + k] * sk;
            sk *= shift / static_cast<double>(k + 1);
        }
        out[j] = acc;
    }
    return FactorialSeries(std::move(out));
}

FactorialSeries FactorialSeries::reflected(double scale, int sign) const {
    std::vector<double> out(c_);
    double s = 1.0;
    for (std::size_t n = 0; n < out.size(); ++n) {
        out[n] *= scale * s;
        s *= sign;
    }
    return FactorialSeries(std::move(out));
}

FactorialSeries& FactorialSeries::operator+=(const FactorialSeries& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

FactorialSeries& FactorialSeries::operator*=(double s) {
    for (double& v : c_) v *= s;
    return *this;
}

double hyp0f1(int n, double z) {
    if (n < 0) throw std::invalid_argument("hyp0f1: lower parameter must be non-negative");
    if (!std::isfinite(z)) throw std::invalid_argument("hyp0f1: argument must be finite");
    double sum = 1.0;
    double term = 1.0;
    for (int k = 1; k <= 200; ++k) {
        term *= z / (static_cast<double>(k) * static_cast<double>(k + n));
        sum += term;
        if (std::abs(term) <= 1e-16 * std::abs(sum)) break;
    }
    return sum;
}

double tail_bound(double q, double p, int terms) {
    if (q <= 0.0 || p <= 0.0) throw std::domain_error("tail_bound: q and p must be positive");
    if (p >= 1.0 / q) throw std::domain_error("tail_bound: requires p < 1/q, the bound diverges");
    if (terms < 0) throw std::domain_error("tail_bound: terms must be non-negative");
    const double r = p * q;
    const double amp = std::exp(p * p);
    if (terms == 0) return amp * (1.0 + p) / (1.0 - r);
    return amp * std::pow(r, terms - 1) * (r + p) / (1.0 - r);
}

double tail_bound_bounded(double m, double p, int terms) {
    if (m < 0.0 || p <= 0.0) throw std::domain_error("tail_bound_bounded: bad arguments");
    if (terms < 0) throw std::domain_error("tail_bound_bounded: terms must be non-negative");
    // sum_{n >= terms} p^n / n!
    double tn = 1.0;
    for (int k = 1; k <= terms; ++k) tn *= p / k;
    double tail = 0.0;
    for (int k = terms; k < terms + 80; ++k) {
        tail += tn;
        tn *= p / (k + 1);
        if (tn < 1e-300) break;
    }
    return m * std::exp(p * p) * tail;
}

}  // namespace slat

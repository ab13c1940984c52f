// Truncated matrix operators acting on factorial-normalized coefficient
// rows, plus a generic order-by-order boundary-matching solver that
// re-derives the action of each boundary operator from the identity it
// encodes. The two constructions cross-validate each other in the tests.
//
// Conventions, fixed once for the whole library:
//
//  * A(t), B(t) map initial-line rows to the row of R(., beta) or S(alpha, .)
//    on factorial rows directly:  R(a,b) = (a A(b) + b B(b)) [a].
//  * F and T(eta) map factorial rows to factorial rows:  b = a F, b = a T.
//  * C(eta), D(eta) are kept in their classical printed form, whose rows
//    carry i! weights: they contract against ordinary Taylor coefficients
//    r_i / i! of the boundary curvature radius. Use apply_cauchy() (or the
//    matcher) instead of a bare row-matrix product.
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "slat/series.hpp"

namespace slat {

enum class OperatorKind { A, B, C, D, F, T };

class OperatorMatrix {
public:
    OperatorMatrix(std::size_t n, OperatorKind kind, double parameter)
        : n_(n), kind_(kind), parameter_(parameter), e_(n * n, 0.0) {}

    std::size_t size() const { return n_; }
    OperatorKind kind() const { return kind_; }
    double parameter() const { return parameter_; }

    double operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }

    /// row * M, plain contraction: out_j = sum_i row_i M_ij.
    FactorialSeries apply(const FactorialSeries& row) const;
    /// M * N (used for the A(s)A(t) = A(s+t) law).
    OperatorMatrix multiply(const OperatorMatrix& o) const;

    bool is_upper_triangular(double tol = 0.0) const;

private:
    std::size_t n_;
    OperatorKind kind_;
    double parameter_;
    std::vector<double> e_;
};

/// Upper-triangular Toeplitz shift exponential: A_ij = (-1)^{j-i} t^{j-i}/(j-i)!.
OperatorMatrix matrix_A(double t, std::size_t n);
/// Signed Hankel companion: B_ij = (-1)^j t^{i+j+1}/(i+j+1)!.
OperatorMatrix matrix_B(double t, std::size_t n);

/// Constant-traction Cauchy operators in the classical printed convention
/// (row i scaled by i!; see header note). Entries are generated by the
/// boundary matcher. Requires 0 < eta < pi/2.
OperatorMatrix matrix_C(double eta, std::size_t n);
OperatorMatrix matrix_D(double eta, std::size_t n);

/// Free-surface operator: f_ii = -1, f_ij = 2(-1)^{i+j+1} for j > i.
OperatorMatrix matrix_F(std::size_t n);

/// Straight frictional-contact operator, eta in (0, pi/2):
///   t_ii = (-1)^i tan(eta),
///   t_ij = (-1)^i tan(eta)^{j-i-1} (tan(eta)^2 - 1) for j > i.
/// The perfectly rough limit eta = pi/2 is not a matrix; use
/// b_n = (-1)^n a_n (solve_mixed_straight handles it).
OperatorMatrix matrix_T(double eta, std::size_t n);

// ---------------------------------------------------------------------------
// Diagonal restrictions. For rows (a, b) the field values along beta =
// sign*alpha form power series in alpha; these return their factorial rows up
// to length n. Used both by the matcher and by the free-surface radius.
struct DiagonalRows {
    FactorialSeries r_row;  // R(alpha, sign*alpha)
    FactorialSeries s_row;  // S(alpha, sign*alpha)
};
DiagonalRows diagonal_rows(const FactorialSeries& a, const FactorialSeries& b,
                           int sign, std::size_t n);

// ---------------------------------------------------------------------------
// Order-by-order boundary matching.
//
// Each boundary condition is an identity between R, S restricted to a
// characteristic-plane line and boundary data; the matcher expands both
// sides as power series in the line parameter and solves the triangular
// system for the unknown row.
enum class BoundaryCondition {
    cauchy_const,    // R(a,a)/cos(eta) = -S(a,a)/sin(eta) = 2 r(a); r known
    free_surface,    // R(a,a) + S(a,a) = 0 (eta = pi/4, traction-free); a known
    mixed_straight,  // R(a,-a)/cos(eta) = S(a,-a)/sin(eta); a known
};

struct CauchyRows {
    FactorialSeries a;
    FactorialSeries b;
};

/// Both initial rows for the constant-traction Cauchy problem with boundary
/// curvature radius row r (factorial). Solves R(alpha,alpha) = 2 cos(eta) *
/// r(alpha), S(alpha,alpha) = -2 sin(eta) * r(alpha) order by order.
CauchyRows match_cauchy_const(const FactorialSeries& r, double eta, std::size_t n);

/// b such that R(alpha,alpha) + S(alpha,alpha) = 0 through order n-1.
FactorialSeries match_free_surface(const FactorialSeries& a, std::size_t n);

/// b such that sin(eta) R(alpha,-alpha) - cos(eta) S(alpha,-alpha) = 0
/// through order n-1. Throws on the degenerate pivot cos(eta) = 0, naming
/// the failing order.
FactorialSeries match_mixed_straight(const FactorialSeries& a, double eta, std::size_t n);

/// Dispatch on the constraint kind; for cauchy_const returns the a-row
/// (use match_cauchy_const for both rows).
FactorialSeries match_boundary_coeffs(BoundaryCondition c, const FactorialSeries& known,
                                      double eta, std::size_t n);

/// a = 2 r C or b = 2 r D through a printed-convention Cauchy matrix:
/// contracts the ordinary Taylor coefficients r_i/i! against the matrix.
FactorialSeries apply_cauchy(const OperatorMatrix& cd, const FactorialSeries& r);

}  // namespace slat

// The two built-in metal-forming problems and their report structures.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "slat/bvp.hpp"
#include "slat/geometry.hpp"

namespace slat {

// ---------------------------------------------------------------------------
// Extrusion through a short frictionless wedge-shaped die.
//
// Geometry (die entry corner O at the origin, lengths in units of the die
// face): the face runs from O at angle -gamma to the exit corner A,
// |OA| = face_length. Slip lines meet the frictionless face at 45 degrees,
// so a uniform triangle hangs under the face with apex
//   C0 = O + (face_length/sqrt(2)) * dir(-pi/4 - gamma),
// and the characteristic rectangle is spanned by two circular initial arcs
// of radius face_length/sqrt(2) centered at O and A:
//   a = (face_length/sqrt(2), 0, ...),  b = (-face_length/sqrt(2), 0, ...),
// with origin pose (C0, phi0 = -pi/4 - gamma). The far corner E of the
// rectangle lands on the centerline; H = -y_E is the entry half-height.
//
// The stress datum sigma_hat (mean stress in the uniform triangle) comes
// from the axial force balance of the rigid exit slab: the x-resultant
// transmitted across the exit boundary (the straight fan radial A->A* plus
// the beta-line alpha = alpha1) must vanish. The ram pressure then follows
// from the global axial balance, P = (k - sigma_hat) * face_length *
// sin(gamma), reported as P/H.
struct ExtrusionConfig {
    double gamma = 10.0 * 3.14159265358979323846 / 180.0;   // die half-angle
    double alpha1 = 30.0 * 3.14159265358979323846 / 180.0;  // alpha extent
    double beta1 = -20.0 * 3.14159265358979323846 / 180.0;  // beta extent
    double face_length = 2.0;                               // |OA|
    double k = 1.0;
    std::size_t terms = 16;
    std::size_t grid_alpha = 33, grid_beta = 33;
};

struct ExtrusionReport {
    double x_E, y_E;
    double H;         // entry half-height, -y_E
    double h_exit;    // exit half-height, H - face_length sin(gamma)
    double P_over_H;  // ram pressure normalized by k
    double p_B, p_D;  // hydrostatic pressures -sigma at the initial-arc ends
    double sigma_hat; // mean stress datum of the uniform triangle
    double path_consistency;  // corner-position disagreement of the two marching paths
    Pose origin;      // rectangle origin C0 and phi0
    CharacteristicNet net;
    SlipLineField field;
};

ExtrusionReport run_extrusion(const ExtrusionConfig& cfg);

// ---------------------------------------------------------------------------
// Plane flow near an elliptic hole under constant normal pressure.
//
// Lengths are normalized by the semimajor axis. Domain 1 is the
// constant-traction Cauchy problem on the quarter arc (eta = pi/4), with the
// boundary curvature-radius row extracted from the parametric oracle by a
// truncated Chebyshev projection on alpha in [-pi/8, pi/8] (gamma = pi/4 +
// 2 alpha). Domain 2 continues across the semimajor vertex: its initial
// beta-line is the domain-1 edge characteristic through the vertex and the
// initial alpha-line is its mirror image in the symmetry axis,
// a_k = (-1)^{k+1} b_k. Stresses on the axis follow sigma = sigma_hat +
// 4 k alpha', giving Delta = sigma_1 + p = 2k (1 + 2 alpha').
struct EllipticHoleConfig {
    double axis_ratio = 0.4;  // b, semiminor/semimajor
    double pressure = 1.0;    // p, applied normal pressure (units of k)
    double k = 1.0;
    std::size_t terms = 15;          // boundary row truncation
    std::size_t grid = 25;           // net nodes per direction (both domains)
    double axis_span = 3.14159265358979323846 / 4.0;  // alpha' extent of domain 2
    std::size_t profile_points = 33;
};

struct AxisSample {
    double xi;       // position on the symmetry axis (>= 1)
    double alpha;    // characteristic parameter alpha'
    double sigma1, sigma2;  // principal stresses normalized by 2k
    double delta;    // (sigma1 + p) / 2k
};

struct EllipticHoleReport {
    FactorialSeries r_row;       // boundary curvature radius row
    double r_fit_error;          // max |row - oracle| over the quadrant
    bool convergence_warning;    // fit error above the 1e-4 target
    SlipLineField field1, field2;
    Pose vertex;                 // computed semimajor-vertex pose (should be (1,0,pi/4))
    double vertex_error;         // distance from the exact vertex (1, 0)
    double mirror_symmetry_error;  // net-2 mirror asymmetry about the axis
    std::vector<AxisSample> profile;
    CharacteristicNet net1, net2;
    Pose origin1;                // mid-arc origin pose of domain 1
};

EllipticHoleReport run_elliptic_hole(const EllipticHoleConfig& cfg);

/// Factorial row of the boundary curvature radius: truncated Chebyshev
/// projection (64 first-kind samples) of the parametric-oracle composition
/// over alpha in [-pi/8, pi/8].
FactorialSeries ellipse_boundary_row(double axis_ratio, std::size_t terms);

}  // namespace slat

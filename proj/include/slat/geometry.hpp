// Physical reconstruction: characteristic nets (x, y) from curvature fields
// and pointwise stress states.
//
// Marching conventions, fixed globally:
//   phi = phi0 + alpha + beta, sigma = sigma0 + 2k(alpha - beta)
//   along an alpha-line: dx = R cos(phi) d(alpha), dy = R sin(phi) d(alpha)
//   along a beta-line:   dx = S sin(phi) d(beta),  dy = -S cos(phi) d(beta)
// (the beta tangent is the alpha tangent rotated +90 degrees and
// ds_beta = -S d(beta)).
#pragma once

#include <cstddef>
#include <vector>

#include "slat/bvp.hpp"

namespace slat {

struct StressState {
    double sigma;  // mean stress
    double phi;    // alpha-line angle
    double s11, s22, s12;
    double s1, s2;  // principal stresses sigma +- k
};

/// Stress tensor at characteristic coordinates (alpha, beta):
/// phi = alpha + beta (plus nothing: the field's origin pose is not known
/// here), sigma = sigma0 + 2k(alpha - beta), s11 = sigma - k sin 2phi,
/// s22 = sigma + k sin 2phi, s12 = k cos 2phi.
StressState stress_at(const SlipLineField& f, double alpha, double beta);

struct Pose {
    double x = 0.0, y = 0.0, phi = 0.0;
};

struct NetNode {
    double alpha, beta;
    double x, y;
    double phi, sigma;
};

class CharacteristicNet {
public:
    CharacteristicNet(std::size_t n_alpha, std::size_t n_beta)
        : n_alpha_(n_alpha), n_beta_(n_beta), nodes_(n_alpha * n_beta) {}

    std::size_t n_alpha() const { return n_alpha_; }
    std::size_t n_beta() const { return n_beta_; }
    NetNode& at(std::size_t i, std::size_t j) { return nodes_[i * n_beta_ + j]; }
    const NetNode& at(std::size_t i, std::size_t j) const { return nodes_[i * n_beta_ + j]; }
    const std::vector<NetNode>& nodes() const { return nodes_; }

private:
    std::size_t n_alpha_, n_beta_;
    std::vector<NetNode> nodes_;  // row-major: i indexes alpha, j indexes beta
};

struct NetOptions {
    std::size_t terms = 16;  // series truncation for R, S
};

/// Build the net over the rectangle [alpha0, alpha1] x [beta0, beta1] with
/// node (0,0) at `origin` (which must correspond to (alpha0, beta0)).
/// n_alpha, n_beta >= 2 node counts. Throws NumericalError on non-finite
/// curvature evaluation, naming the node.
CharacteristicNet build_net(const SlipLineField& f, std::size_t n_alpha, std::size_t n_beta,
                            double alpha0, double alpha1, double beta0, double beta1,
                            const Pose& origin, const NetOptions& opt = {});

/// Position of node (alpha, beta) integrating beta-first instead of the
/// builder's alpha-leg path; used for path-independence checks.
Pose node_via_beta_first(const SlipLineField& f, double alpha0, double beta0, double alpha,
                         double beta, const Pose& origin, const NetOptions& opt = {});

struct CurvatureReport {
    double max_rel_err_alpha = 0.0;  // finite-difference radius vs eval along alpha-lines
    double max_rel_err_beta = 0.0;
};

/// Recover curvature radii from node coordinates (circumscribed circle of
/// consecutive node triples) and compare with the field evaluators.
CurvatureReport net_curvature_check(const CharacteristicNet& net, const SlipLineField& f,
                                    std::size_t terms = 16);

}  // namespace slat

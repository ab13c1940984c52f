// 12-point Gauss-Legendre rule on [-1, 1]; exact for polynomials through
// degree 23, which covers the truncated series data used by the solvers.
#pragma once

#include <array>

namespace slat::detail {

inline constexpr std::array<double, 12> kGaussX = {
    -0.9815606342467192, -0.9041172563704749, -0.7699026741943047, -0.5873179542866175,
    -0.3678314989981802, -0.1252334085114689, 0.1252334085114689,  0.3678314989981802,
    0.5873179542866175,  0.7699026741943047,  0.9041172563704749,  0.9815606342467192};

inline constexpr std::array<double, 12> kGaussW = {
    0.0471753363865118, 0.1069393259953184, 0.1600783285433462, 0.2031674267230659,
    0.2334925365383548, 0.2491470458134028, 0.2491470458134028, 0.2334925365383548,
    0.2031674267230659, 0.1600783285433462, 0.1069393259953184, 0.0471753363865118};

}  // namespace slat::detail

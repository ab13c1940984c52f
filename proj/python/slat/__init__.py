"""Slip-line analytic technique: series solvers for plane-strain rigid-plastic flow."""

from ._slat import (
    BetaOrientation,
    CauchyBoundary,
    FactorialSeries,
    Family,
    Pose,
    SlipLineField,
    StressState,
    build_net,
    ellipse_curvature_param,
    ellipse_radius_of_alpha,
    fd_telegraph,
    hyp0f1,
    match_cauchy_const,
    match_free_surface,
    match_mixed_straight,
    matrix_A,
    matrix_B,
    matrix_C,
    matrix_D,
    matrix_F,
    matrix_T,
    run_elliptic_hole,
    run_extrusion,
    solve_cauchy_const,
    solve_fan,
    solve_free_surface,
    solve_initial_char,
    solve_mixed_straight,
    stress_at,
    tail_bound,
    tail_bound_bounded,
)

__all__ = [
    "BetaOrientation",
    "CauchyBoundary",
    "FactorialSeries",
    "Family",
    "Pose",
    "SlipLineField",
    "StressState",
    "build_net",
    "ellipse_curvature_param",
    "ellipse_radius_of_alpha",
    "fd_telegraph",
    "hyp0f1",
    "match_cauchy_const",
    "match_free_surface",
    "match_mixed_straight",
    "matrix_A",
    "matrix_B",
    "matrix_C",
    "matrix_D",
    "matrix_F",
    "matrix_T",
    "run_elliptic_hole",
    "run_extrusion",
    "solve_cauchy_const",
    "solve_fan",
    "solve_free_surface",
    "solve_initial_char",
    "solve_mixed_straight",
    "stress_at",
    "tail_bound",
    "tail_bound_bounded",
]

__version__ = "0.1.0"

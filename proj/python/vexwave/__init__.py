"""ADI compact finite-difference solvers for two-dimensional diffusion-wave
equations with a time-varying fractional exponent."""

from vexwave._core import (
    cq_table,
    eval_g,
    gamma,
    gauss_jacobi,
    gauss_legendre,
    kernel_table,
    pi_table,
    rate,
    solve,
    two_mesh_space_error,
    two_mesh_time_error,
)

__all__ = [
    "cq_table",
    "eval_g",
    "gamma",
    "gauss_jacobi",
    "gauss_legendre",
    "kernel_table",
    "pi_table",
    "rate",
    "solve",
    "two_mesh_space_error",
    "two_mesh_time_error",
]

__version__ = "0.1.0"

"""
Floating-point kernel laboratory for SU(1,1) x SU(1,1) and its diagonal
"""
from branchlab.analytic.checks import (
    check_cocycle_identity,
    check_diagonal_normalization,
    check_equivariance,
    check_hermitian_symmetry,
    check_nakahama,
    check_refined_factorization,
    check_sbo_split,
    check_separation_formula,
    check_transfer,
    check_vs_norms,
    relative_residual,
)
from branchlab.analytic.kernels import TruncatedKernel, tail_estimate
from branchlab.analytic.su11 import (
    RefinedFactorization,
    Su11Element,
    cocycle,
    disc_kernel,
    disc_norm_squared,
    evaluate_vs,
    group_kernel,
    refined_cartan_factor,
    vs_norm_squared,
    x1,
    x2,
)

__all__ = [
    "RefinedFactorization",
    "Su11Element",
    "TruncatedKernel",
    "check_cocycle_identity",
    "check_diagonal_normalization",
    "check_equivariance",
    "check_hermitian_symmetry",
    "check_nakahama",
    "check_refined_factorization",
    "check_sbo_split",
    "check_separation_formula",
    "check_transfer",
    "check_vs_norms",
    "cocycle",
    "disc_kernel",
    "disc_norm_squared",
    "evaluate_vs",
    "group_kernel",
    "refined_cartan_factor",
    "relative_residual",
    "tail_estimate",
    "vs_norm_squared",
    "x1",
    "x2",
]

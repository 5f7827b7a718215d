"""
Exact root systems: root data, positive systems, Weyl actions and Chevalley constants
"""
from branchlab.rootsys.weight import Basis, Weight, render_fraction, to_fraction, weight_sum
from branchlab.rootsys.cartan import (
    PositiveSystem,
    RootDatum,
    build_root_datum,
    compact_by_parity,
    coroot_pairing,
    dominant_conjugate,
    positive_system,
    reflect,
    rho_vectors,
    signed_orbit,
    simple_roots_of,
    solve_in_span,
    system_flags,
    weyl_act,
)
from branchlab.rootsys.chevalley import AlgebraElement, ChevalleyConstants, chevalley_constants, element

__all__ = [
    "AlgebraElement",
    "Basis",
    "ChevalleyConstants",
    "PositiveSystem",
    "RootDatum",
    "Weight",
    "build_root_datum",
    "chevalley_constants",
    "compact_by_parity",
    "coroot_pairing",
    "dominant_conjugate",
    "element",
    "positive_system",
    "reflect",
    "render_fraction",
    "rho_vectors",
    "signed_orbit",
    "simple_roots_of",
    "solve_in_span",
    "system_flags",
    "to_fraction",
    "weight_sum",
    "weyl_act",
]

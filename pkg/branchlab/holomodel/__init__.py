"""
Exact polynomial model of holomorphic discrete series and the duality maps
"""
from branchlab.holomodel.action import GAction, act, g_action, h_action
from branchlab.holomodel.duality import Projector, duality_map_D, project_Q, q_gram_determinants
from branchlab.holomodel.inner import BallModel, DiscProductModel, InnerProductModel, inner_product_model, pochhammer
from branchlab.holomodel.intertwine import (
    HolographicMap,
    IntertwineReport,
    h_spanning,
    holographic_map_from_phi,
    inclusion_map,
    intertwine_check,
)
from branchlab.holomodel.model import DualPair, HolomorphicModel, holomorphic_model
from branchlab.holomodel.phi import diagonal_model, factor_variables, holographic_phi, phi_coefficients, vs_scale
from branchlab.holomodel.polyvector import PolyVector, monomials
from branchlab.holomodel.subspaces import GradedSubspace, degree_piece_dim, lwh_subspace, uh0w_subspace
from branchlab.holomodel.wmodule import WModule, module_from_highest_weight

__all__ = [
    "BallModel",
    "DiscProductModel",
    "DualPair",
    "GAction",
    "GradedSubspace",
    "HolographicMap",
    "HolomorphicModel",
    "InnerProductModel",
    "IntertwineReport",
    "PolyVector",
    "Projector",
    "WModule",
    "act",
    "degree_piece_dim",
    "diagonal_model",
    "duality_map_D",
    "factor_variables",
    "g_action",
    "h_action",
    "h_spanning",
    "holographic_map_from_phi",
    "holographic_phi",
    "holomorphic_model",
    "inclusion_map",
    "inner_product_model",
    "intertwine_check",
    "lwh_subspace",
    "module_from_highest_weight",
    "monomials",
    "phi_coefficients",
    "pochhammer",
    "project_Q",
    "q_gram_determinants",
    "uh0w_subspace",
    "vs_scale",
]

"""
Holographic element Phi for the diagonal SU(1,1) in SU(1,1) x SU(1,1)
"""
from fractions import Fraction
from math import comb
from typing import Dict, Tuple

from branchlab.compactrep.characters import HighestWeight
from branchlab.holomodel.inner import pochhammer
from branchlab.holomodel.model import HolomorphicModel, holomorphic_model
from branchlab.holomodel.polyvector import PolyVector
from branchlab.rootsys.weight import Basis, Weight
from branchlab.sympair.pair import build_pair

DIAGONAL_PAIR = "su11su11_diag"


def vs_scale(lam, s: int) -> Fraction:
    """v_s corresponds to (lambda)_s z^s in the polynomial model"""
    return pochhammer(Fraction(lam), s)


def diagonal_model(lam: int, lam2: int) -> HolomorphicModel:
    """Scalar model of SU(1,1) x SU(1,1) with K-type (lam, lam2) in fundamental labels"""
    pair = build_pair(DIAGONAL_PAIR)
    tau = pair.ambient.to_epsilon(Weight.of([lam, lam2], Basis.FUNDAMENTAL))
    return holomorphic_model(pair, HighestWeight(tau, pair.k_group))


def factor_variables(model: HolomorphicModel) -> Tuple[int, int]:
    """Indices of z (first factor) and z' (second factor) among the model variables"""
    simple = model.pair.ambient.simple_roots
    index = {-r: i for i, r in enumerate(model.action.lead_roots)}
    return index[simple[0]], index[simple[1]]


def phi_coefficients(lam: int, lam2: int, n: int) -> Dict[int, Fraction]:
    """Coefficient of v_s (x) v'_{n-s}: (-1)^s C(n, s) / ((lam)_s (lam2)_{n-s})"""
    return {
        s: Fraction((-1) ** s * comb(n, s)) / (pochhammer(Fraction(lam), s) * pochhammer(Fraction(lam2), n - s))
        for s in range(n + 1)
    }


def holographic_phi(lam: int, lam2: int, n: int, model: HolomorphicModel = None) -> PolyVector:
    """
    Phi(1) as a degree-n polynomial in the diagonal model.

    Args:
        lam, lam2: integers >= 2 (scalar K-type of the two factors)
        n: degree
        model: model from diagonal_model(lam, lam2), built when omitted

    Returns:
        sum_s (-1)^s C(n,s)/((lam)_s (lam2)_{n-s}) v_s (x) v'_{n-s}
    """
    if lam < 2 or lam2 < 2 or n < 0:
        raise ValueError(f"holographic_phi needs lam, lam2 >= 2 and n >= 0, got ({lam}, {lam2}, {n})")
    model = model or diagonal_model(lam, lam2)
    first, second = factor_variables(model)
    data = {}
    for s, c in phi_coefficients(lam, lam2, n).items():
        mono = [0] * model.nvars
        mono[first] = s
        mono[second] = n - s
        data[tuple(mono)] = [c * vs_scale(lam, s) * vs_scale(lam2, n - s)]
    return PolyVector.from_dict(model.nvars, 1, data)

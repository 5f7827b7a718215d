"""
Minimal gradient orders: least n with Z inside S^n(p_h0) (x) W
"""
from collections import Counter
from typing import List, Optional

from loguru import logger

from branchlab.compactrep.characters import (
    HighestWeight,
    character,
    decompose,
    restrict_character,
    symmetric_power_character,
    tensor_character,
)
from branchlab.rootsys.weight import Weight
from branchlab.sympair.pair import SymmetricPairDatum


def p_h0_weights(pair: SymmetricPairDatum) -> List[Weight]:
    """L-weights of p_h0 = p_h0^+ + p_h0^-"""
    minus = list(pair.h0_noncompact_positive_weights)
    return minus + [-w for w in minus]


def minimal_gradient_order(
    pair: SymmetricPairDatum,
    tau: HighestWeight,
    target: HighestWeight,
    max_n: int,
) -> Optional[int]:
    """
    Least n such that the L-type target occurs in S^n(p_h0) (x) W.

    Args:
        pair: symmetric pair
        tau: K-type W
        target: L-type Z
        max_n: search bound

    Returns:
        The order, or None when Z does not occur for any n <= max_n
    """
    w_char = restrict_character(character(tau), pair.qu_restrict)
    weights = p_h0_weights(pair)
    dim = pair.ambient.ambient_dim
    for n in range(max_n + 1):
        piece: Counter = tensor_character(symmetric_power_character(weights, n, dim), w_char)
        if piece.get(target.weight, 0) == 0:
            continue
        if decompose(piece, pair.l_group).multiplicity(target.weight):
            logger.debug(f"Gradient order of {target.render()} over {tau.render()} on {pair.id}: {n}")
            return n
    return None

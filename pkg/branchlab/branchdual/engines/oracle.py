"""
Symmetric-algebra engine: decompose S^d(p_h0^-) (x) Z over L degree by degree
"""
from collections import Counter
from typing import Dict

from loguru import logger

from branchlab.branchdual.engines.base import LTypeCount, MultiplicityEngine
from branchlab.compactrep.characters import (
    HighestWeight,
    character,
    decompose,
    symmetric_power_character,
    tensor_character,
)
from branchlab.errors import UnsupportedModelError
from branchlab.rootsys.weight import Weight


class SymmetricAlgebraEngine(MultiplicityEngine):
    """Holomorphic oracle: the L-types of U(h0)Z_j are those of S(p_h0^-) (x) Z_j"""

    name = "oracle"

    def supports(self, pair) -> bool:
        return pair.holomorphic_pair and pair.flags["holomorphic"]

    def ltypes(self, pair, lowest: HighestWeight, cutoff: int) -> Dict[Weight, LTypeCount]:
        if not self.supports(pair):
            raise UnsupportedModelError(f"Symmetric-algebra engine needs a holomorphic pair, got {pair.id}")
        weights = pair.h0_noncompact_positive_weights
        dim = pair.ambient.ambient_dim
        base = character(lowest)
        result: Dict[Weight, LTypeCount] = {}
        for degree in range(cutoff + 1):
            piece: Counter = tensor_character(symmetric_power_character(weights, degree, dim), base)
            for hw, multiplicity in decompose(piece, pair.l_group).parts:
                if hw.weight in result:
                    previous = result[hw.weight]
                    result[hw.weight] = LTypeCount(previous.multiplicity + multiplicity, previous.degree)
                else:
                    result[hw.weight] = LTypeCount(multiplicity, degree)
        logger.debug(f"Oracle engine: {len(result)} L-types up to degree {cutoff} above {lowest.render()}")
        return result

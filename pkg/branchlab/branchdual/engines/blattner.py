"""
Blattner engine: L-types of U(h0)W from the alternating partition-function sum
"""
from typing import Dict, List

from loguru import logger

from branchlab.branchdual.engines.base import LTypeCount, MultiplicityEngine
from branchlab.compactrep.blattner import blattner_formula
from branchlab.compactrep.characters import HighestWeight
from branchlab.rootsys.weight import Weight


def cone_candidates(lowest: Weight, roots: List[Weight], cutoff: int) -> Dict[Weight, int]:
    """Weights lowest + (sum of at most cutoff roots), with the least number of parts"""
    found = {lowest: 0}
    frontier = [lowest]
    for degree in range(1, cutoff + 1):
        next_frontier = []
        for mu in frontier:
            for root in roots:
                nu = mu + root
                if nu not in found:
                    found[nu] = degree
                    next_frontier.append(nu)
        frontier = next_frontier
    return found


class BlattnerEngine(MultiplicityEngine):
    """Engine using the Blattner-type formula over the noncompact roots of h0"""

    name = "blattner"

    def ltypes(self, pair, lowest: HighestWeight, cutoff: int) -> Dict[Weight, LTypeCount]:
        system = pair.h0_data.system
        group = pair.l_group
        roots = list(system.noncompact_positives)
        formula = blattner_formula(group, system.noncompact_positives, system.chamber)
        result: Dict[Weight, LTypeCount] = {}
        for mu, degree in cone_candidates(lowest.weight, roots, cutoff).items():
            if not group.is_dominant(mu):
                continue
            multiplicity = formula.multiplicity(lowest.weight, mu)
            if multiplicity < 0:
                raise ArithmeticError(
                    f"Negative Blattner multiplicity {multiplicity} at {mu.render()} for {pair.id}"
                )
            if multiplicity:
                result[mu] = LTypeCount(multiplicity, degree)
        logger.debug(f"Blattner engine: {len(result)} L-types up to degree {cutoff} above {lowest.render()}")
        return result

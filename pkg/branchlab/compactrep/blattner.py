"""
Blattner-type multiplicity formula for discrete series L-types.

m(mu) = sum over w in W_L of det(w) Q(w(mu + rho_c) - Lambda - rho_c), where
Lambda is the lowest L-type and Q is the partition function of the noncompact
positive roots.
"""
from functools import lru_cache
from typing import TYPE_CHECKING, Optional, Tuple

from branchlab.compactrep.characters import CompactGroup, HighestWeight
from branchlab.compactrep.partition import PartitionFunction
from branchlab.errors import CutoffExceededError
from branchlab.rootsys.cartan import signed_orbit
from branchlab.rootsys.weight import Weight

if TYPE_CHECKING:
    from branchlab.branchdual.params import DiscreteSeriesParam


class BlattnerFormula:
    """Alternating Weyl-group sum of a noncompact partition function"""

    def __init__(self, group: CompactGroup, noncompact_positives: Tuple[Weight, ...], direction: Weight):
        self.group = group
        self.noncompact_positives = noncompact_positives
        self.partition = PartitionFunction(noncompact_positives, direction)

    def multiplicity(self, lowest: Weight, mu: Weight) -> int:
        rho_c = self.group.rho
        shift = lowest + rho_c
        total = 0
        for image, sign in signed_orbit(mu + rho_c, self.group.simple_roots).items():
            total += sign * self.partition(image - shift)
        return total

    def degree(self, lowest: Weight, mu: Weight) -> Optional[int]:
        """Least number of noncompact roots separating mu from the lowest L-type"""
        return self.partition.min_parts(mu - lowest)


@lru_cache(maxsize=64)
def blattner_formula(group: CompactGroup, noncompact_positives: Tuple[Weight, ...], direction: Weight) -> BlattnerFormula:
    return BlattnerFormula(group, noncompact_positives, direction)


def blattner_multiplicity(h0_param: "DiscreteSeriesParam", ltype: HighestWeight, cutoff: Optional[int] = None) -> int:
    """
    Multiplicity of an L-type in a discrete series of H0.

    Args:
        h0_param: discrete series of H0 (its lowest K-type is an L-type)
        ltype: L-type whose multiplicity is wanted
        cutoff: optional degree bound; L-types beyond it are refused

    Returns:
        Nonnegative multiplicity

    Raises:
        ValueError: if ltype belongs to another compact group
        CutoffExceededError: if ltype lies beyond the cutoff degree
    """
    lowest = h0_param.lowest_ktype
    if ltype.group != lowest.group:
        raise ValueError(f"L-type of {ltype.group.name} does not match {lowest.group.name}")
    system = h0_param.system
    formula = blattner_formula(lowest.group, system.noncompact_positives, system.chamber)
    if cutoff is not None:
        degree = formula.degree(lowest.weight, ltype.weight)
        if degree is not None and degree > cutoff:
            raise CutoffExceededError(
                f"L-type {ltype.render()} has degree {degree} beyond cutoff {cutoff}"
            )
    return formula.multiplicity(lowest.weight, ltype.weight)

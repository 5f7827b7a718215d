"""
Base class defining the interface for L-type multiplicity engines
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Dict

from branchlab.compactrep.characters import HighestWeight
from branchlab.rootsys.weight import Weight


@dataclass(frozen=True)
class LTypeCount:
    """Multiplicity of an L-type and the least degree it appears in"""
    multiplicity: int
    degree: int


class MultiplicityEngine(ABC):
    """Abstract base class for engines counting L-types of H0-discrete series"""

    name: str = "abstract"

    @abstractmethod
    def ltypes(self, pair, lowest: HighestWeight, cutoff: int) -> Dict[Weight, LTypeCount]:
        """
        L-types of the H0-discrete series with lowest L-type `lowest`

        Args:
            pair: symmetric pair with the system already selected
            lowest: lowest L-type sigma_j (a highest weight of pair.l_group)
            cutoff: largest degree in the h0-grading to report

        Returns:
            Mapping L-type highest weight -> count, for every L-type of
            degree <= cutoff with nonzero multiplicity

        Raises:
            UnsupportedModelError: the engine does not apply to this pair
        """
        pass

    def supports(self, pair) -> bool:
        """
        Check whether the engine applies to the pair

        Args:
            pair: symmetric pair

        Returns:
            True if supported, False otherwise
        """
        return True

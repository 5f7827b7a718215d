"""
Multiplicity engines for the L-types of U(h0)W
"""
from branchlab.branchdual.engines.base import LTypeCount, MultiplicityEngine
from branchlab.branchdual.engines.blattner import BlattnerEngine, cone_candidates
from branchlab.branchdual.engines.oracle import SymmetricAlgebraEngine

ENGINES = {
    BlattnerEngine.name: BlattnerEngine,
    SymmetricAlgebraEngine.name: SymmetricAlgebraEngine,
}

__all__ = [
    "BlattnerEngine",
    "ENGINES",
    "LTypeCount",
    "MultiplicityEngine",
    "SymmetricAlgebraEngine",
    "cone_candidates",
]

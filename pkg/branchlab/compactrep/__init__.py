"""
Finite-dimensional representations of compact groups and discrete series L-type counts
"""
from branchlab.compactrep.characters import (
    CompactGroup,
    HighestWeight,
    IrrepDecomposition,
    WeightMultiset,
    character,
    decompose,
    group_from_roots,
    irrep_dim,
    restrict_character,
    restrict_decompose,
    symmetric_power_character,
    tensor_character,
    tensor_decompose,
    trivial_group,
    weight_multiplicities,
)
from branchlab.compactrep.partition import PartitionFunction, brute_force_partition, kostant_partition
from branchlab.compactrep.blattner import BlattnerFormula, blattner_formula, blattner_multiplicity

__all__ = [
    "BlattnerFormula",
    "CompactGroup",
    "HighestWeight",
    "IrrepDecomposition",
    "PartitionFunction",
    "WeightMultiset",
    "blattner_formula",
    "blattner_multiplicity",
    "brute_force_partition",
    "character",
    "decompose",
    "group_from_roots",
    "irrep_dim",
    "kostant_partition",
    "restrict_character",
    "restrict_decompose",
    "symmetric_power_character",
    "tensor_character",
    "tensor_decompose",
    "trivial_group",
    "weight_multiplicities",
]

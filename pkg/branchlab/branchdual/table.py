"""
Branching tables: the computed spectrum of res_H with multiplicities and cutoff
"""
from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

from branchlab.branchdual.params import DiscreteSeriesParam
from branchlab.compactrep.characters import HighestWeight
from branchlab.models import BranchEntryModel, BranchingTableModel, DiagnosticModel, WeightModel
from branchlab.rootsys.cartan import coroot_pairing
from branchlab.rootsys.weight import Weight, render_fraction


@dataclass(frozen=True)
class BranchEntry:
    """H-discrete series occurring in the restriction"""
    lowest_ltype: HighestWeight
    h_param: DiscreteSeriesParam
    multiplicity: int
    discovery_degree: int


@dataclass(frozen=True)
class Diagnostic:
    """L-type of U(h0)W with no valid H-parameter"""
    ltype: HighestWeight
    multiplicity: int
    discovery_degree: int
    reason: str


@dataclass(frozen=True)
class BranchingTable:
    """Spectrum of the restriction below a degree cutoff"""
    pair_id: str
    system: str
    engine: str
    source: DiscreteSeriesParam
    cutoff: int
    complete_below_cutoff: bool
    entries: Tuple[BranchEntry, ...]
    diagnostics: Tuple[Diagnostic, ...] = ()
    label_roots: Tuple[Weight, ...] = field(default=(), repr=False)

    def multiplicities(self) -> dict:
        return {e.lowest_ltype.weight: e.multiplicity for e in self.entries}

    def ltypes(self) -> list:
        return [e.lowest_ltype.weight for e in self.entries]

    def entry(self, weight: Weight) -> Optional[BranchEntry]:
        for e in self.entries:
            if e.lowest_ltype.weight == weight:
                return e
        return None

    def labels(self, weight: Weight) -> Tuple[str, ...]:
        return weight_labels(weight, self.label_roots)

    def to_model(self, source_roots: Sequence[Weight] = ()) -> BranchingTableModel:
        return BranchingTableModel(
            pair=self.pair_id,
            system=self.system,
            engine=self.engine,
            input_hc=weight_model(self.source.hc_param, source_roots),
            input_ktype=weight_model(self.source.lowest_ktype.weight, source_roots),
            cutoff=self.cutoff,
            complete_below_cutoff=self.complete_below_cutoff,
            entries=[
                BranchEntryModel(
                    lowest_ltype=weight_model(e.lowest_ltype.weight, self.label_roots),
                    h_param=weight_model(e.h_param.hc_param, self.label_roots),
                    multiplicity=e.multiplicity,
                    discovery_degree=e.discovery_degree,
                )
                for e in self.entries
            ],
            diagnostics=[
                DiagnosticModel(
                    ltype=weight_model(d.ltype.weight, self.label_roots),
                    multiplicity=d.multiplicity,
                    discovery_degree=d.discovery_degree,
                    reason=d.reason,
                )
                for d in self.diagnostics
            ],
        )


def weight_labels(weight: Weight, simple_roots: Sequence[Weight]) -> Tuple[str, ...]:
    return tuple(render_fraction(coroot_pairing(weight, alpha)) for alpha in simple_roots)


def weight_model(weight: Weight, simple_roots: Sequence[Weight] = ()) -> WeightModel:
    return WeightModel(coords=list(weight.to_strings()), labels=list(weight_labels(weight, simple_roots)))

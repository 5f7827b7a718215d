"""
Resolution of CLI pair and parameter options into pair data and discrete series
"""
from dataclasses import dataclass
from typing import Dict, Mapping, Optional

from branchlab.branchdual.params import DiscreteSeriesParam, ds_from_hc, ds_from_lowest_ktype
from branchlab.errors import BranchlabError, CatalogError
from branchlab.rootsys.weight import Basis, Weight
from branchlab.sympair.catalog import ParamKind, evaluate_labels
from branchlab.sympair.pair import SymmetricPairDatum, build_pair

# family variable -> CLI flag
FLAGS = {"n": "--n", "m": "--m", "lam": "--lambda", "lam2": "--lambda2", "a": "--a"}


@dataclass(frozen=True)
class ParameterRequest:
    """Parameter options as given on the command line"""
    hc: Optional[str] = None
    ktype: Optional[str] = None
    system: Optional[str] = None
    family: Optional[str] = None
    values: Mapping[str, int] = None

    def given(self) -> Dict[str, int]:
        return {k: v for k, v in (self.values or {}).items() if v is not None}


def resolve_pair(pair_id: str, request: ParameterRequest) -> SymmetricPairDatum:
    """Build the pair, selecting series members (spin2m2 --m, sun1_un11 --n) from the request"""
    return build_pair(pair_id, **request.given())


def parse_labels(text: str):
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if not parts:
        raise BranchlabError(f"Empty label list {text!r}")
    return evaluate_labels(parts, {})


def _labels_to_weight(pair: SymmetricPairDatum, labels) -> Weight:
    if len(labels) != pair.ambient.rank:
        raise BranchlabError(f"Pair {pair.id} needs {pair.ambient.rank} Dynkin labels, got {len(labels)}")
    return pair.ambient.to_epsilon(Weight.of(labels, Basis.FUNDAMENTAL))


def resolve_parameter(pair: SymmetricPairDatum, request: ParameterRequest) -> DiscreteSeriesParam:
    """
    Discrete series from --hc/--ktype labels, or from a cataloged family and its variables.

    Raises:
        BranchlabError: missing family variables or malformed labels
        ValueError: singular or non-dominant parameter
    """
    if request.hc and request.ktype:
        raise BranchlabError("Give either --hc or --ktype, not both")
    if request.hc or request.ktype:
        system_name = request.system or pair.entry.default_system
        labels = parse_labels(request.hc or request.ktype)
        kind = ParamKind.HC if request.hc else ParamKind.KTYPE
    else:
        try:
            family = pair.entry.family_entry(request.family)
        except CatalogError as e:
            raise BranchlabError(f"{e}; give --hc or --ktype")
        system_name = request.system or family.system
        given = request.given()
        values = {}
        for variable in family.variables:
            if variable in given:
                values[variable] = given[variable]
            elif variable in family.defaults:
                values[variable] = family.defaults[variable]
            else:
                raise BranchlabError(f"Family {family.name} of {pair.id} needs {FLAGS.get(variable, variable)}")
        labels = evaluate_labels(family.labels, values)
        kind = family.kind
    if system_name not in pair.systems:
        raise BranchlabError(f"Pair {pair.id} has no system {system_name}; systems: {', '.join(pair.systems)}")
    selected = pair.for_system(system_name)
    weight = _labels_to_weight(selected, labels)
    build = ds_from_hc if kind == ParamKind.HC else ds_from_lowest_ktype
    return build(selected.k_group, weight, selected.system)

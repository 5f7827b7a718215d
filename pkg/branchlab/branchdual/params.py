"""
Discrete series parameters: Harish-Chandra parameter <-> lowest K-type
"""
from dataclasses import dataclass
from typing import Tuple, Union

from branchlab.compactrep.characters import CompactGroup, HighestWeight
from branchlab.rootsys.cartan import PositiveSystem, rho_vectors
from branchlab.rootsys.weight import Weight


@dataclass(frozen=True)
class DiscreteSeriesParam:
    """Discrete series labeled by a regular dominant HC parameter and its lowest K-type"""
    group_tag: str
    hc_param: Weight
    lowest_ktype: HighestWeight
    system: PositiveSystem

    def shifts(self) -> Tuple[Weight, Weight]:
        _, rho_c, rho_n = rho_vectors(self.system.datum, self.system)
        return rho_n, rho_c


def _group(tag: Union[str, CompactGroup], system: PositiveSystem) -> CompactGroup:
    if isinstance(tag, CompactGroup):
        return tag
    return CompactGroup(tag, system.compact_positives, system.datum.ambient_dim)


def _check_parameter(lam: Weight, system: PositiveSystem) -> None:
    if not system.is_regular(lam):
        raise ValueError(f"Harish-Chandra parameter {lam.render()} is singular for system {system.name}")
    if not system.is_dominant(lam):
        raise ValueError(f"Harish-Chandra parameter {lam.render()} is not dominant for system {system.name}")


def ds_from_hc(group_tag: Union[str, CompactGroup], lam: Weight, system: PositiveSystem) -> DiscreteSeriesParam:
    """
    Discrete series with Harish-Chandra parameter lam.

    Args:
        group_tag: name of K, or the CompactGroup itself
        lam: regular weight dominant for system
        system: positive system of the group

    Returns:
        DiscreteSeriesParam with lowest K-type lam + rho_n - rho_c

    Raises:
        ValueError: lam singular or not dominant, or the K-type not integral
    """
    lam = system.datum.to_epsilon(lam)
    _check_parameter(lam, system)
    _, rho_c, rho_n = rho_vectors(system.datum, system)
    group = _group(group_tag, system)
    return DiscreteSeriesParam(group.name, lam, HighestWeight(lam + rho_n - rho_c, group), system)


def ds_from_lowest_ktype(group_tag: Union[str, CompactGroup], ktype: Weight, system: PositiveSystem) -> DiscreteSeriesParam:
    """
    Discrete series with the given lowest K-type; inverse of ds_from_hc.

    Raises:
        ValueError: the derived HC parameter is singular or not dominant
    """
    ktype = system.datum.to_epsilon(ktype)
    _, rho_c, rho_n = rho_vectors(system.datum, system)
    lam = ktype - rho_n + rho_c
    _check_parameter(lam, system)
    group = _group(group_tag, system)
    return DiscreteSeriesParam(group.name, lam, HighestWeight(ktype, group), system)

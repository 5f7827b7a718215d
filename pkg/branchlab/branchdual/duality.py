"""
Duality engine: U(h0)W spectra and branching tables of admissible restrictions
"""
from typing import Dict, List, Optional, Tuple

from loguru import logger

from branchlab.branchdual.engines import ENGINES, LTypeCount, MultiplicityEngine
from branchlab.branchdual.params import DiscreteSeriesParam, ds_from_lowest_ktype
from branchlab.branchdual.table import BranchEntry, BranchingTable, Diagnostic
from branchlab.compactrep.characters import HighestWeight, WeightMultiset, restrict_decompose
from branchlab.errors import BranchlabError, InadmissibleError, UnsupportedModelError
from branchlab.rootsys.weight import Weight
from branchlab.sympair.pair import SymmetricPairDatum, find_system, is_admissible


def get_engine(engine) -> MultiplicityEngine:
    """Resolve an engine name or instance"""
    if isinstance(engine, MultiplicityEngine):
        return engine
    if engine not in ENGINES:
        raise ValueError(f"Unknown engine '{engine}'. Available: {', '.join(sorted(ENGINES))}")
    return ENGINES[engine]()


def as_ktype(pair: SymmetricPairDatum, tau) -> HighestWeight:
    weight = tau.weight if isinstance(tau, HighestWeight) else tau
    return HighestWeight(pair.ambient.to_epsilon(weight), pair.k_group)


def uh0w_spectrum(
    pair: SymmetricPairDatum,
    tau,
    cutoff: int,
    engine="blattner",
) -> Dict[Weight, LTypeCount]:
    """
    L-types of U(h0)W up to a degree cutoff, with multiplicity and discovery degree.

    Args:
        pair: symmetric pair with the system of tau's discrete series selected
        tau: lowest K-type (HighestWeight of pair.k_group, or a bare Weight)
        cutoff: largest h0-degree to include
        engine: "blattner", "oracle" or a MultiplicityEngine

    Raises:
        BranchlabError: negative cutoff
        UnsupportedModelError: engine does not apply to the pair
    """
    if cutoff < 0:
        raise BranchlabError(f"Cutoff {cutoff} does not contain the lowest L-types (degree 0)")
    engine = get_engine(engine)
    if not engine.supports(pair):
        raise UnsupportedModelError(f"Engine {engine.name} does not support pair {pair.id}")
    tau = as_ktype(pair, tau)
    pieces = restrict_decompose(tau, pair)
    logger.debug(f"res_L {tau.render()} = {len(pieces.parts)} L-types on {pair.id}")

    spectrum: Dict[Weight, LTypeCount] = {}
    for sigma_j, r_j in pieces.parts:
        for weight, count in engine.ltypes(pair, sigma_j, cutoff).items():
            previous = spectrum.get(weight)
            if previous is None:
                spectrum[weight] = LTypeCount(r_j * count.multiplicity, count.degree)
            else:
                spectrum[weight] = LTypeCount(
                    previous.multiplicity + r_j * count.multiplicity, min(previous.degree, count.degree)
                )
    return dict(sorted(spectrum.items(), key=lambda item: (item[1].degree, item[0].sort_key())))


def uh0w_ltypes(pair: SymmetricPairDatum, tau, cutoff: int, engine="blattner") -> WeightMultiset:
    """L-type multiplicities of U(h0)W up to the cutoff, as a multiset of highest weights"""
    spectrum = uh0w_spectrum(pair, tau, cutoff, engine)
    return WeightMultiset.of({weight: count.multiplicity for weight, count in spectrum.items()})


def _select_system(pair: SymmetricPairDatum, ds: DiscreteSeriesParam) -> SymmetricPairDatum:
    name = find_system(pair, ds.system)
    if name is None:
        raise InadmissibleError(
            f"Positive system {ds.system.name} is not cataloged for {pair.id} "
            f"(admissible: {', '.join(pair.admissible_systems)}; {pair.entry.provenance})"
        )
    if not is_admissible(pair, ds.system):
        system_entry = pair.entry.system(name)
        raise InadmissibleError(
            f"Restriction of discrete series of system {name} to {pair.entry.title} is not admissible "
            f"(catalog: {system_entry.provenance})"
        )
    return pair.for_system(name)


def branch(
    pair: SymmetricPairDatum,
    ds: DiscreteSeriesParam,
    cutoff: Optional[int] = None,
    engine="blattner",
) -> BranchingTable:
    """
    Branching table of res_H of a discrete series, up to a degree cutoff.

    Every L-type Z of U(h0)W that is the lowest L-type of an H-discrete series
    for the restricted positive system gives one entry with the multiplicity
    of Z in U(h0)W. The remaining L-types go to the diagnostics channel.

    Args:
        pair: symmetric pair
        ds: discrete series of G (its system must be cataloged as admissible)
        cutoff: degree cutoff; defaults to the catalog value
        engine: multiplicity engine name or instance

    Returns:
        BranchingTable sorted by discovery degree, then weight

    Raises:
        InadmissibleError: the system of ds is not admissible for the pair
        BranchlabError: negative cutoff
    """
    pair = _select_system(pair, ds)
    if cutoff is None:
        cutoff = pair.entry.default_cutoff
    engine = get_engine(engine)
    spectrum = uh0w_spectrum(pair, ds.lowest_ktype, cutoff, engine)

    h_system = pair.h_data.system
    entries: List[BranchEntry] = []
    diagnostics: List[Diagnostic] = []
    for weight, count in spectrum.items():
        ltype = HighestWeight(weight, pair.l_group)
        try:
            h_param = ds_from_lowest_ktype(pair.l_group, weight, h_system)
        except ValueError as e:
            diagnostics.append(Diagnostic(ltype, count.multiplicity, count.degree, str(e)))
            continue
        entries.append(BranchEntry(ltype, h_param, count.multiplicity, count.degree))

    if diagnostics:
        logger.warning(f"{len(diagnostics)} L-types of U(h0)W on {pair.id} have no H-discrete series parameter")
    table = BranchingTable(
        pair_id=pair.id,
        system=pair.selected,
        engine=engine.name,
        source=ds,
        cutoff=cutoff,
        complete_below_cutoff=not diagnostics,
        entries=tuple(entries),
        diagnostics=tuple(diagnostics),
        label_roots=tuple(h_system.simple_roots),
    )
    logger.info(f"Branching table for {pair.id}/{pair.selected}: {len(entries)} entries up to degree {cutoff}")
    return table


def source_roots(pair: SymmetricPairDatum) -> Tuple[Weight, ...]:
    """Simple roots used to label the input parameter of a table"""
    return tuple(pair.ambient.simple_roots)

"""
Symmetric pairs: catalog, involution data, q_u and the bracket condition
"""
from branchlab.sympair.catalog import (
    Catalog,
    CatalogFile,
    FamilyEntry,
    PairEntry,
    ParamKind,
    SampleEntry,
    SigmaEntry,
    SystemEntry,
    evaluate_labels,
    load_catalog,
    read_catalog_file,
)
from branchlab.sympair.pair import (
    LinearMap,
    SubalgebraData,
    SymmetricPairDatum,
    bracket_condition,
    build_pair,
    default_catalog,
    find_system,
    is_admissible,
    pair_from_entry,
    qu_restrict,
    split_p,
)

__all__ = [
    "Catalog",
    "CatalogFile",
    "FamilyEntry",
    "LinearMap",
    "PairEntry",
    "ParamKind",
    "SampleEntry",
    "SigmaEntry",
    "SubalgebraData",
    "SymmetricPairDatum",
    "SystemEntry",
    "bracket_condition",
    "build_pair",
    "default_catalog",
    "evaluate_labels",
    "find_system",
    "is_admissible",
    "load_catalog",
    "pair_from_entry",
    "qu_restrict",
    "read_catalog_file",
    "split_p",
]

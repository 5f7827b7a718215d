"""
Catalog of symmetric pairs: JSON schema, loading and lookup
"""
import json
import os
from enum import Enum
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Sequence

import sympy
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from branchlab.config import settings
from branchlab.errors import CatalogError, UnknownPairError
from branchlab.rootsys.weight import to_fraction

CATALOG_VERSION = 1
BUILTIN_CATALOG = Path(__file__).parent / "data" / "catalog.json"


class ParamKind(str, Enum):
    """How a parameter family labels its discrete series"""
    HC = "hc"
    KTYPE = "ktype"


class SigmaEntry(BaseModel):
    """Involution given on simple root vectors: sigma(e_i) = sign_i e_{perm(i)}"""
    model_config = ConfigDict(extra="forbid")

    permutation: List[int] = Field(..., description="1-based image of each simple root")
    signs: List[int] = Field(..., description="Sign of sigma on each simple root vector")
    provenance: str = Field("", description="Where the involution data comes from")

    @model_validator(mode='after')
    def validate_involution(self):
        n = len(self.permutation)
        if sorted(self.permutation) != list(range(1, n + 1)):
            raise ValueError(f"Permutation {self.permutation} is not a permutation of 1..{n}")
        if any(self.permutation[self.permutation[i] - 1] != i + 1 for i in range(n)):
            raise ValueError(f"Permutation {self.permutation} is not an involution")
        if len(self.signs) != n or any(s not in (1, -1) for s in self.signs):
            raise ValueError("Signs must be a list of +1/-1, one per simple root")
        return self


class SystemEntry(BaseModel):
    """Cataloged positive system of the ambient algebra"""
    model_config = ConfigDict(extra="forbid")

    name: str = Field(..., description="System name, unique within a pair")
    chamber: List[str] = Field(..., description="Dynkin labels of a regular chamber vector")
    admissible: bool = Field(..., description="Whether discrete series dominant for this system restrict admissibly")
    provenance: str = Field("", description="Source of the admissibility statement")


class FamilyEntry(BaseModel):
    """Named family of discrete series parameters"""
    model_config = ConfigDict(extra="forbid")

    name: str = Field(..., description="Family name")
    kind: ParamKind = Field(..., description="Labels give the HC parameter or the lowest K-type")
    system: str = Field(..., description="Positive system the parameter is dominant for")
    labels: List[str] = Field(..., description="Dynkin label expressions in the family variables")
    variables: List[str] = Field(default_factory=list, description="Free variables of the expressions")
    defaults: Dict[str, str] = Field(default_factory=dict, description="Default variable values")
    provenance: str = Field("", description="Source of the family")


class SampleEntry(BaseModel):
    """Fixed parameter used by the verification suites"""
    model_config = ConfigDict(extra="forbid")

    system: str
    kind: ParamKind = ParamKind.HC
    labels: List[str]


class PairEntry(BaseModel):
    """One symmetric pair (g, h) with its associated pair h0"""
    model_config = ConfigDict(extra="forbid")

    id: str = Field(..., description="Catalog identifier")
    aliases: List[str] = Field(default_factory=list, description="Alternative identifiers")
    family: Optional[str] = Field(None, description="Base name shared by a parameterized series of pairs")
    family_parameter: Optional[str] = Field(None, description="CLI parameter selecting a member of the series")
    family_value: Optional[int] = Field(None, description="Value of the series parameter for this entry")
    title: str = Field(..., description="Human readable pair, e.g. (e6(2), f4(4))")
    h0_title: str = Field("", description="Associated pair h0")
    ambient_type: str = Field(..., description="Cartan type of g, e.g. E6 or A1xA1")
    noncompact_simple: List[int] = Field(..., description="1-based simple roots fixing the compact/noncompact grading")
    sigma: SigmaEntry
    holomorphic_pair: bool = Field(False, description="g Hermitian with p+ split by sigma")
    systems: List[SystemEntry]
    default_system: str
    parameters: List[FamilyEntry] = Field(default_factory=list)
    samples: List[SampleEntry] = Field(default_factory=list)
    default_cutoff: int = Field(default_factory=lambda: settings.default_cutoff, ge=0)
    provenance: str = Field("", description="Source of the pair data")

    @model_validator(mode='after')
    def validate_references(self):
        names = [s.name for s in self.systems]
        if len(set(names)) != len(names):
            raise ValueError(f"Duplicate system names in pair {self.id}")
        if self.default_system not in names:
            raise ValueError(f"Default system {self.default_system} not declared in pair {self.id}")
        for family in self.parameters:
            if family.system not in names:
                raise ValueError(f"Family {family.name} of {self.id} refers to unknown system {family.system}")
        for sample in self.samples:
            if sample.system not in names:
                raise ValueError(f"Sample of {self.id} refers to unknown system {sample.system}")
        if (self.family is None) != (self.family_value is None):
            raise ValueError(f"Pair {self.id} must set family and family_value together")
        return self

    def system(self, name: str) -> SystemEntry:
        for entry in self.systems:
            if entry.name == name:
                return entry
        raise CatalogError(f"Pair {self.id} has no system named {name}")

    def family_entry(self, name: Optional[str] = None) -> FamilyEntry:
        if not self.parameters:
            raise CatalogError(f"Pair {self.id} declares no parameter family")
        if name is None:
            return self.parameters[0]
        for entry in self.parameters:
            if entry.name == name:
                return entry
        raise CatalogError(f"Pair {self.id} has no parameter family {name}")


class CatalogFile(BaseModel):
    """Versioned catalog document"""
    model_config = ConfigDict(extra="forbid")

    version: int = Field(..., ge=1, description="Catalog schema version")
    pairs: List[PairEntry] = Field(default_factory=list)

    @model_validator(mode='after')
    def validate_version(self):
        if self.version != CATALOG_VERSION:
            raise ValueError(f"Unsupported catalog version {self.version}, expected {CATALOG_VERSION}")
        return self


def evaluate_labels(expressions: Sequence[str], values: Mapping[str, object]) -> List:
    """
    Evaluate Dynkin-label expressions to exact rationals.

    Raises:
        CatalogError: if a label stays symbolic or is not rational
    """
    symbols = {name: sympy.Symbol(name) for name in values}
    substitution = {symbols[name]: sympy.Rational(str(value)) for name, value in values.items()}
    labels = []
    for expr in expressions:
        try:
            value = sympy.sympify(expr, locals=symbols).subs(substitution)
        except (sympy.SympifyError, TypeError) as e:
            raise CatalogError(f"Cannot parse label expression {expr!r}: {e}")
        if not value.is_Rational:
            raise CatalogError(f"Label {expr!r} does not evaluate to a rational with {dict(values)}")
        labels.append(to_fraction(value))
    return labels


class Catalog:
    """Loaded catalog entries indexed by identifier and alias"""

    def __init__(self, entries: Sequence[PairEntry]):
        self.entries: Dict[str, PairEntry] = {}
        self.aliases: Dict[str, str] = {}
        for entry in entries:
            if entry.id in self.entries:
                raise CatalogError(f"Duplicate pair id {entry.id}")
            self.entries[entry.id] = entry
        for entry in entries:
            for alias in entry.aliases:
                if alias in self.entries or alias in self.aliases:
                    raise CatalogError(f"Alias {alias} of {entry.id} collides with another identifier")
                self.aliases[alias] = entry.id

    def ids(self) -> List[str]:
        return sorted(self.entries)

    def families(self) -> Dict[str, List[PairEntry]]:
        grouped: Dict[str, List[PairEntry]] = {}
        for entry in self.entries.values():
            if entry.family:
                grouped.setdefault(entry.family, []).append(entry)
        return grouped

    def resolve(self, pair_id: str, family_values: Optional[Mapping[str, int]] = None) -> PairEntry:
        """
        Find the entry for an identifier, alias or series base name.

        Args:
            pair_id: identifier, alias or series name such as spin2m2
            family_values: values of series parameters (e.g. {"m": 3})

        Raises:
            UnknownPairError: nothing matches
        """
        if pair_id in self.entries:
            return self.entries[pair_id]
        if pair_id in self.aliases:
            return self.entries[self.aliases[pair_id]]
        members = self.families().get(pair_id)
        if members:
            parameter = members[0].family_parameter
            value = (family_values or {}).get(parameter)
            if value is None:
                choices = sorted(m.family_value for m in members)
                raise UnknownPairError(f"Series {pair_id} needs --{parameter}, one of {choices}")
            for member in members:
                if member.family_value == value:
                    return member
            raise UnknownPairError(f"Series {pair_id} has no member with {parameter}={value}")
        raise UnknownPairError(f"Unknown pair {pair_id}; known pairs: {', '.join(self.ids())}")


def read_catalog_file(path: Path) -> CatalogFile:
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise CatalogError(f"Catalog file not found: {path}")
    except json.JSONDecodeError as e:
        raise CatalogError(f"Catalog file {path} is not valid JSON: {e}")
    try:
        return CatalogFile.model_validate(raw)
    except ValidationError as e:
        raise CatalogError(f"Catalog file {path} failed validation: {e}")


def extra_catalog_paths(value: Optional[str] = None) -> List[Path]:
    value = settings.branchlab_catalog if value is None else value
    return [Path(part) for part in value.split(os.pathsep) if part.strip()]


def load_catalog(extra_paths: Optional[Sequence[Path]] = None) -> Catalog:
    """
    Load the built-in catalog plus any extra catalog files.

    Args:
        extra_paths: extra files; defaults to the BRANCHLAB_CATALOG setting
    """
    paths = [BUILTIN_CATALOG] + list(extra_catalog_paths() if extra_paths is None else extra_paths)
    entries: List[PairEntry] = []
    for path in paths:
        document = read_catalog_file(path)
        logger.debug(f"Loaded {len(document.pairs)} pairs from {path}")
        entries.extend(document.pairs)
    return Catalog(entries)

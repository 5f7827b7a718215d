"""
Symmetric pair data: the involution, the restriction map q_u, root partitions
for h, h0 and l, and the derived subalgebra root data.
"""
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import cached_property
from typing import Dict, FrozenSet, List, Optional, Tuple

import sympy
from loguru import logger

from branchlab.compactrep.characters import CompactGroup, group_from_roots
from branchlab.errors import BranchlabError, CatalogError, UnsupportedModelError
from branchlab.rootsys.cartan import (
    PositiveSystem,
    RootDatum,
    build_root_datum,
    positive_system,
    system_flags,
)
from branchlab.rootsys.chevalley import AlgebraElement, ChevalleyConstants, chevalley_constants
from branchlab.rootsys.weight import Weight, to_fraction
from branchlab.sympair.catalog import Catalog, PairEntry, load_catalog

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class LinearMap:
    """Rational matrix acting on epsilon coordinates"""
    rows: Tuple[Tuple[Fraction, ...], ...]

    def __call__(self, mu: Weight) -> Weight:
        return Weight(tuple(sum((a * b for a, b in zip(row, mu.coords)), Fraction(0)) for row in self.rows))

    @classmethod
    def from_images(cls, sources: List[Weight], images: List[Weight]) -> "LinearMap":
        """The map sending sources[i] to images[i]; sources must be a basis"""
        src = sympy.Matrix([[sympy.Rational(c) for c in v.coords] for v in sources]).T
        dst = sympy.Matrix([[sympy.Rational(c) for c in v.coords] for v in images]).T
        matrix = dst * src.inv()
        return cls(tuple(tuple(to_fraction(matrix[i, j]) for j in range(matrix.cols)) for i in range(matrix.rows)))


@dataclass(frozen=True)
class SubalgebraData:
    """Root datum and positive system of h, h0 (in u* coordinates)"""
    datum: RootDatum
    system: PositiveSystem


@dataclass(frozen=True)
class SymmetricPairDatum:
    """
    A cataloged symmetric pair (g, h) with its associated pair h0.

    Derived data (positive systems of h and h0, the groups K and L, split_p
    vectors) refer to the selected cataloged system; use for_system to switch.
    """
    entry: PairEntry
    ambient: RootDatum
    constants: ChevalleyConstants = field(repr=False)
    sigma_star: LinearMap = field(repr=False)
    root_signs: Dict[Weight, int] = field(repr=False)
    compact_roots: FrozenSet[Weight] = field(repr=False)
    systems: Dict[str, PositiveSystem] = field(repr=False)
    selected: str = ""

    def _key(self):
        return self.entry.id, self.selected, self.ambient.form_scale

    def __hash__(self):
        return hash(self._key())

    def __eq__(self, other):
        return isinstance(other, SymmetricPairDatum) and self._key() == other._key()

    @property
    def id(self) -> str:
        return self.entry.id

    @property
    def holomorphic_pair(self) -> bool:
        return self.entry.holomorphic_pair

    @property
    def system(self) -> PositiveSystem:
        return self.systems[self.selected]

    def for_system(self, name: str) -> "SymmetricPairDatum":
        if name not in self.systems:
            raise CatalogError(f"Pair {self.id} has no cataloged system {name}")
        return replace(self, selected=name)

    def rescaled(self, scale) -> "SymmetricPairDatum":
        """The same pair with the invariant form multiplied by scale"""
        return replace(
            self,
            ambient=self.ambient.rescaled(scale),
            systems={name: ps.rescaled(scale) for name, ps in self.systems.items()},
        )

    @property
    def admissible_systems(self) -> List[str]:
        return [s.name for s in self.entry.systems if s.admissible]

    def sigma_root(self, root: Weight) -> Weight:
        return self.sigma_star(root)

    def qu_restrict(self, mu: Weight) -> Weight:
        """q_u(mu) = (mu + sigma* mu)/2, kept in ambient coordinates"""
        mu = self.ambient.to_epsilon(mu)
        return (mu + self.sigma_star(mu)) * HALF

    def root_sign(self, root: Weight) -> int:
        return self.root_signs[root]

    def sigma_element(self, x: AlgebraElement) -> AlgebraElement:
        """sigma applied to an algebra element"""
        terms = tuple((self.sigma_star(r), c * self.root_signs[r]) for r, c in x.root_part)
        return AlgebraElement(self.sigma_star(x.cartan), terms)

    # Root partitions

    def _orbit_representatives(self, roots) -> List[Weight]:
        reps = []
        seen = set()
        for root in sorted(roots, key=lambda r: r.coords):
            if root in seen:
                continue
            image = self.sigma_star(root)
            seen.update({root, image})
            reps.append(root)
        return reps

    def _partition(self, compact: bool, parity: int) -> List[Weight]:
        """Restricted roots q_u(gamma) of the sigma = parity eigenspace on the compact or noncompact part"""
        selected = set()
        for root in self.ambient.roots:
            if (root in self.compact_roots) != compact:
                continue
            image = self.sigma_star(root)
            if image != root or self.root_signs[root] == parity:
                selected.add(self.qu_restrict(root))
        return sorted(selected, key=lambda r: r.coords)

    @cached_property
    def l_roots(self) -> List[Weight]:
        return self._partition(compact=True, parity=1)

    @cached_property
    def h_noncompact(self) -> List[Weight]:
        return self._partition(compact=False, parity=1)

    @cached_property
    def h0_noncompact(self) -> List[Weight]:
        return self._partition(compact=False, parity=-1)

    @cached_property
    def qu_matrix(self) -> Tuple[Tuple[Fraction, ...], ...]:
        n = self.ambient.ambient_dim
        rows = []
        for i in range(n):
            rows.append(tuple(
                (Fraction(1) if i == j else Fraction(0)) / 2 + self.sigma_star.rows[i][j] / 2 for j in range(n)
            ))
        return tuple(rows)

    # Derived data for the selected system

    @cached_property
    def restricted_chamber(self) -> Weight:
        return self.qu_restrict(self.system.chamber)

    def _subalgebra(self, label: str, noncompact: List[Weight]) -> SubalgebraData:
        roots = list(self.l_roots) + list(noncompact)
        try:
            datum = RootDatum.from_roots(label, roots, self.restricted_chamber, self.ambient.form_scale)
        except ValueError as e:
            raise CatalogError(f"System {self.selected} of {self.id} is not sigma-stable: {e}")
        chamber = self.restricted_chamber
        positives = tuple(r for r in datum.roots if r.dot(chamber) > 0)
        ps = PositiveSystem(datum, positives, frozenset(self.l_roots), f"{self.selected}|{label}")
        return SubalgebraData(datum, ps)

    @cached_property
    def h_data(self) -> SubalgebraData:
        return self._subalgebra("h", self.h_noncompact)

    @cached_property
    def h0_data(self) -> SubalgebraData:
        return self._subalgebra("h0", self.h0_noncompact)

    @cached_property
    def k_group(self) -> CompactGroup:
        return CompactGroup(f"K<{self.id}:{self.selected}>", self.system.compact_positives, self.ambient.ambient_dim)

    @cached_property
    def l_group(self) -> CompactGroup:
        return group_from_roots(f"L<{self.id}:{self.selected}>", self.l_roots, self.restricted_chamber)

    @cached_property
    def flags(self) -> Dict[str, bool]:
        return system_flags(self.ambient, self.system)

    def restricted_weights(self, roots) -> List[Weight]:
        return [self.qu_restrict(r) for r in roots]

    def noncompact_orbits(self) -> List[Tuple[Weight, Optional[Weight]]]:
        """Sigma-orbits of positive noncompact roots: (gamma, sigma gamma) or (gamma, None) when fixed"""
        orbits = []
        for root in self._orbit_representatives(self.system.noncompact_positives):
            image = self.sigma_star(root)
            orbits.append((root, None if image == root else image))
        return orbits

    @cached_property
    def h0_noncompact_positive_weights(self) -> List[Weight]:
        """L-weights of p_h0^- (one per h0 spanning vector)"""
        weights = []
        for root, image in self.noncompact_orbits():
            if image is not None or self.root_signs[root] == -1:
                weights.append(self.qu_restrict(root))
        return weights

    def __repr__(self) -> str:
        return f"SymmetricPairDatum({self.id}, system={self.selected})"


def _root_signs(rd: RootDatum, constants: ChevalleyConstants, sigma_star: LinearMap, simple_signs: List[int]) -> Dict[Weight, int]:
    """Signs c_r with sigma(e_r) = c_r e_{sigma r}, propagated from the simple root vectors"""
    signs: Dict[Weight, int] = {}
    for alpha, sign in zip(rd.simple_roots, simple_signs):
        signs[alpha] = sign
    positives = sorted(rd.standard_positives, key=lambda r: (rd.height(r), r.coords))
    for gamma in positives:
        if gamma in signs:
            continue
        for alpha in rd.simple_roots:
            beta = gamma - alpha
            if beta in signs and constants.N(alpha, beta):
                n_image = constants.N(sigma_star(alpha), sigma_star(beta))
                value = Fraction(signs[alpha] * signs[beta] * n_image, constants.N(alpha, beta))
                if value not in (1, -1):
                    raise CatalogError(f"Involution does not preserve structure constants at {gamma.render()}")
                signs[gamma] = int(value)
                break
    for gamma in positives:
        signs[-gamma] = signs[gamma]
    for gamma, sign in signs.items():
        if signs[sigma_star(gamma)] != sign:
            raise CatalogError(f"Sigma is not an involution on the root vector of {gamma.render()}")
    return signs


def pair_from_entry(entry: PairEntry) -> SymmetricPairDatum:
    """Build the pair datum of a catalog entry"""
    rd = build_root_datum(entry.ambient_type)
    if len(entry.sigma.permutation) != rd.rank:
        raise CatalogError(f"Pair {entry.id}: sigma is given on {len(entry.sigma.permutation)} simple roots, rank is {rd.rank}")
    constants = chevalley_constants(rd)

    sources = list(rd.simple_roots)
    images = [rd.simple_roots[j - 1] for j in entry.sigma.permutation]
    complement = sympy.Matrix([[sympy.Rational(c) for c in a.coords] for a in rd.simple_roots]).nullspace()
    for vector in complement:
        fixed = Weight(tuple(to_fraction(c) for c in vector))
        sources.append(fixed)
        images.append(fixed)
    sigma_star = LinearMap.from_images(sources, images)

    systems: Dict[str, PositiveSystem] = {}
    for system_entry in entry.systems:
        try:
            systems[system_entry.name] = positive_system(
                rd, system_entry.chamber, entry.noncompact_simple, system_entry.name
            )
        except ValueError as e:
            raise CatalogError(f"Pair {entry.id}: {e}")
    compact = systems[entry.default_system].compact

    for root in rd.roots:
        if (sigma_star(root) in compact) != (root in compact):
            raise CatalogError(f"Pair {entry.id}: sigma does not commute with the Cartan involution at {root.render()}")

    signs = _root_signs(rd, constants, sigma_star, entry.sigma.signs)
    pair = SymmetricPairDatum(entry, rd, constants, sigma_star, signs, compact, systems, entry.default_system)
    logger.debug(
        f"Built pair {entry.id}: |l|={len(pair.l_roots)} |p_h|={len(pair.h_noncompact)} |p_h0|={len(pair.h0_noncompact)}"
    )
    return pair


_catalog: Optional[Catalog] = None
_pairs: Dict[str, SymmetricPairDatum] = {}


def default_catalog() -> Catalog:
    global _catalog
    if _catalog is None:
        _catalog = load_catalog()
    return _catalog


def build_pair(catalog_id: str, catalog: Optional[Catalog] = None, **family_values) -> SymmetricPairDatum:
    """
    Build the datum of a cataloged pair.

    Args:
        catalog_id: identifier, alias or series name (with family_values, e.g. m=3)
        catalog: catalog to use; defaults to the built-in plus BRANCHLAB_CATALOG files

    Raises:
        UnknownPairError: unknown identifier
        CatalogError: inconsistent catalog data
    """
    catalog = catalog or default_catalog()
    entry = catalog.resolve(catalog_id, family_values)
    if catalog is _catalog and entry.id in _pairs:
        return _pairs[entry.id]
    pair = pair_from_entry(entry)
    if catalog is _catalog:
        _pairs[entry.id] = pair
    return pair


def qu_restrict(pair: SymmetricPairDatum, mu: Weight) -> Weight:
    return pair.qu_restrict(mu)


def split_p(pair: SymmetricPairDatum, signed: bool = True) -> Dict[str, List[AlgebraElement]]:
    """
    Spanning vectors of the sigma-eigenspaces of p.

    With signed=True (holomorphic pairs only) returns p_h_plus, p_h_minus,
    p_h0_plus, p_h0_minus, where p^- is spanned by the root vectors of the
    positive noncompact roots of the selected system and p^+ by their negatives.
    Otherwise returns p_h and p_h0.

    Raises:
        UnsupportedModelError: signed split requested on a non-holomorphic pair
    """
    if signed and not (pair.holomorphic_pair and pair.flags["holomorphic"]):
        raise UnsupportedModelError(f"Pair {pair.id} with system {pair.selected} has no holomorphic splitting of p")
    dim = pair.ambient.ambient_dim
    pieces: Dict[str, List[AlgebraElement]] = {
        "p_h_plus": [], "p_h_minus": [], "p_h0_plus": [], "p_h0_minus": [],
    }
    for root, image in pair.noncompact_orbits():
        for sign_label, gamma in (("minus", root), ("plus", -root)):
            c = pair.root_signs[gamma]
            if image is None:
                target = "p_h" if c == 1 else "p_h0"
                pieces[f"{target}_{sign_label}"].append(AlgebraElement.root_vector(gamma))
                continue
            other = pair.sigma_star(gamma)
            pieces[f"p_h_{sign_label}"].append(AlgebraElement.from_roots({gamma: Fraction(1), other: Fraction(c)}, dim))
            pieces[f"p_h0_{sign_label}"].append(AlgebraElement.from_roots({gamma: Fraction(1), other: Fraction(-c)}, dim))
    if signed:
        return pieces
    return {
        "p_h": pieces["p_h_plus"] + pieces["p_h_minus"],
        "p_h0": pieces["p_h0_plus"] + pieces["p_h0_minus"],
    }


def bracket_condition(pair: SymmetricPairDatum) -> bool:
    """
    True iff [[p_h0^+, p_h^-], p_h0^+] = 0.

    Raises:
        UnsupportedModelError: non-holomorphic pair
    """
    pieces = split_p(pair)
    bracket = pair.constants.bracket
    for x in pieces["p_h0_plus"]:
        for y in pieces["p_h_minus"]:
            inner = bracket(x, y)
            if inner.is_zero():
                continue
            for z in pieces["p_h0_plus"]:
                if not bracket(inner, z).is_zero():
                    logger.debug(f"Bracket condition fails for {pair.id}")
                    return False
    return True


def is_admissible(pair: SymmetricPairDatum, ps: PositiveSystem) -> bool:
    """
    Catalog lookup of admissibility for a positive system of the pair.

    Raises:
        BranchlabError: ps is not among the cataloged systems (admissibility unknown)
    """
    target = set(ps.positives)
    for entry in pair.entry.systems:
        if set(pair.systems[entry.name].positives) == target:
            return entry.admissible
    raise BranchlabError(f"Admissibility unknown: system {ps.name} is not cataloged for {pair.id}")


def find_system(pair: SymmetricPairDatum, ps: PositiveSystem) -> Optional[str]:
    target = set(ps.positives)
    for name, system in pair.systems.items():
        if set(system.positives) == target:
            return name
    return None

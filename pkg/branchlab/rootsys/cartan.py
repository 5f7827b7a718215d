"""
Root data, positive systems and Weyl group actions.

Simple roots follow Bourbaki numbering and live in the usual orthogonal
coordinates (R^{n+1} for A_n, R^8 for E6, R^4 for F4). Products of simple types
are direct sums of coordinate spaces.
"""
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import sympy
from loguru import logger

from branchlab.rootsys.weight import Basis, Weight, to_fraction

HALF = Fraction(1, 2)

SUPPORTED_TYPES = {
    "A": 1,
    "B": 2,
    "C": 2,
    "D": 3,
    "E": 6,
    "F": 4,
}


def coroot_pairing(mu: Weight, alpha: Weight) -> Fraction:
    """<mu, alpha^vee> = 2(mu, alpha)/(alpha, alpha); independent of the form scale"""
    return 2 * mu.dot(alpha) / alpha.dot(alpha)


def reflect(mu: Weight, alpha: Weight) -> Weight:
    return mu - alpha * coroot_pairing(mu, alpha)


def solve_in_span(vectors: Sequence[Weight], mu: Weight) -> Optional[Tuple[Fraction, ...]]:
    """Coefficients c with sum c_i v_i = mu, or None when mu is outside the span"""
    if not vectors:
        return () if mu.is_zero() else None
    gram = sympy.Matrix(len(vectors), len(vectors), lambda i, j: sympy.Rational(vectors[i].dot(vectors[j])))
    rhs = sympy.Matrix([sympy.Rational(v.dot(mu)) for v in vectors])
    solution = gram.LUsolve(rhs)
    coeffs = tuple(to_fraction(sympy.nsimplify(x)) for x in solution)
    rebuilt = Weight.zero(mu.dim)
    for c, v in zip(coeffs, vectors):
        rebuilt = rebuilt + v * c
    if rebuilt != mu:
        return None
    return coeffs


def simple_roots_of(positives: Iterable[Weight]) -> List[Weight]:
    """Indecomposable elements of a positive system"""
    positives = list(positives)
    pos_set = set(positives)
    sums = {a + b for i, a in enumerate(positives) for b in positives[i + 1:]}
    return [r for r in positives if r not in sums and r in pos_set]


def signed_orbit(mu: Weight, simple_roots: Sequence[Weight]) -> Dict[Weight, int]:
    """
    Orbit of a regular weight under the Weyl group generated by simple_roots.

    Returns orbit point -> det(w). Regularity makes the orbit map bijective on
    W, so the sign found along any reflection path is the determinant.
    """
    orbit = {mu: 1}
    queue = deque([mu])
    while queue:
        current = queue.popleft()
        sign = orbit[current]
        for alpha in simple_roots:
            image = reflect(current, alpha)
            if image not in orbit:
                orbit[image] = -sign
                queue.append(image)
    return orbit


def dominant_conjugate(mu: Weight, simple_roots: Sequence[Weight]) -> Weight:
    """Reflect mu into the closed dominant chamber"""
    current = mu
    changed = True
    while changed:
        changed = False
        for alpha in simple_roots:
            if coroot_pairing(current, alpha) < 0:
                current = reflect(current, alpha)
                changed = True
    return current


def _simple_roots_for(family: str, rank: int) -> Tuple[int, List[Weight]]:
    """Ambient dimension and Bourbaki simple roots of a simple type"""
    def vec(dim, entries):
        coords = [Fraction(0)] * dim
        for index, value in entries:
            coords[index] = Fraction(value)
        return Weight(tuple(coords))

    if family == "A":
        dim = rank + 1
        return dim, [vec(dim, [(i, 1), (i + 1, -1)]) for i in range(rank)]
    if family in ("B", "C", "D"):
        dim = rank
        roots = [vec(dim, [(i, 1), (i + 1, -1)]) for i in range(rank - 1)]
        if family == "B":
            roots.append(vec(dim, [(rank - 1, 1)]))
        elif family == "C":
            roots.append(vec(dim, [(rank - 1, 2)]))
        else:
            roots.append(vec(dim, [(rank - 2, 1), (rank - 1, 1)]))
        return dim, roots
    if family == "E" and rank == 6:
        dim = 8
        alpha1 = vec(dim, [(0, HALF), (7, HALF)] + [(i, -HALF) for i in range(1, 7)])
        return dim, [
            alpha1,
            vec(dim, [(0, 1), (1, 1)]),
            vec(dim, [(1, 1), (0, -1)]),
            vec(dim, [(2, 1), (1, -1)]),
            vec(dim, [(3, 1), (2, -1)]),
            vec(dim, [(4, 1), (3, -1)]),
        ]
    if family == "F" and rank == 4:
        dim = 4
        return dim, [
            vec(dim, [(1, 1), (2, -1)]),
            vec(dim, [(2, 1), (3, -1)]),
            vec(dim, [(3, 1)]),
            vec(dim, [(0, HALF), (1, -HALF), (2, -HALF), (3, -HALF)]),
        ]
    raise ValueError(f"Unsupported Cartan type {family}{rank}")


def _root_closure(simple_roots: Sequence[Weight]) -> List[Weight]:
    """All roots: the orbit of the simple roots under simple reflections"""
    seen = set(simple_roots)
    queue = deque(simple_roots)
    while queue:
        root = queue.popleft()
        for alpha in simple_roots:
            image = reflect(root, alpha)
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return list(seen)


@dataclass(frozen=True)
class RootDatum:
    """Root system of a reductive Lie algebra in orthogonal coordinates"""
    cartan_type: str
    simple_roots: Tuple[Weight, ...]
    roots: Tuple[Weight, ...]
    form_scale: Fraction = Fraction(1)
    components: Tuple[Tuple[str, int], ...] = field(default=())
    space_dim: int = 0

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    @property
    def ambient_dim(self) -> int:
        return self.simple_roots[0].dim if self.simple_roots else self.space_dim

    @cached_property
    def cartan_matrix(self) -> Tuple[Tuple[int, ...], ...]:
        """a_ij = <alpha_j, alpha_i^vee>"""
        return tuple(
            tuple(int(coroot_pairing(aj, ai)) for aj in self.simple_roots)
            for ai in self.simple_roots
        )

    @cached_property
    def bilinear_form(self) -> Tuple[Tuple[Fraction, ...], ...]:
        n = self.ambient_dim
        return tuple(
            tuple(self.form_scale if i == j else Fraction(0) for j in range(n))
            for i in range(n)
        )

    @cached_property
    def root_index(self) -> Dict[Weight, int]:
        return {root: i for i, root in enumerate(self.roots)}

    def is_root(self, mu: Weight) -> bool:
        return mu in self.root_index

    def inner(self, a: Weight, b: Weight) -> Fraction:
        return self.form_scale * self.to_epsilon(a).dot(self.to_epsilon(b))

    def pairing(self, mu: Weight, alpha: Weight) -> Fraction:
        return coroot_pairing(self.to_epsilon(mu), alpha)

    @cached_property
    def _simple_gram_inverse(self) -> sympy.Matrix:
        n = self.rank
        gram = sympy.Matrix(n, n, lambda i, j: sympy.Rational(self.simple_roots[i].dot(self.simple_roots[j])))
        return gram.inv()

    @cached_property
    def fundamental_weights(self) -> Tuple[Weight, ...]:
        """omega_i in the span of the roots with <omega_i, alpha_j^vee> = delta_ij"""
        n = self.rank
        weights = []
        for i in range(n):
            rhs = sympy.Matrix([
                sympy.Rational(self.simple_roots[j].dot(self.simple_roots[j])) / 2 if j == i else 0
                for j in range(n)
            ])
            coeffs = self._simple_gram_inverse * rhs
            omega = Weight.zero(self.ambient_dim)
            for c, alpha in zip(coeffs, self.simple_roots):
                omega = omega + alpha * to_fraction(c)
            weights.append(omega)
        return tuple(weights)

    def to_epsilon(self, mu: Weight) -> Weight:
        if mu.basis == Basis.EPSILON:
            return mu
        if mu.dim != self.rank:
            raise ValueError(f"Expected {self.rank} coordinates, got {mu.dim}")
        basis = self.simple_roots if mu.basis == Basis.SIMPLE else self.fundamental_weights
        total = Weight.zero(self.ambient_dim)
        for c, vector in zip(mu.coords, basis):
            total = total + vector * c
        return total

    def to_simple(self, mu: Weight) -> Weight:
        mu = self.to_epsilon(mu)
        rhs = sympy.Matrix([sympy.Rational(alpha.dot(mu)) for alpha in self.simple_roots])
        coeffs = tuple(to_fraction(c) for c in self._simple_gram_inverse * rhs)
        result = Weight(coeffs, Basis.SIMPLE)
        if self.to_epsilon(result) != mu:
            raise ValueError(f"{mu!r} has a component orthogonal to the roots of {self.cartan_type}")
        return result

    def to_fundamental(self, mu: Weight) -> Weight:
        mu = self.to_epsilon(mu)
        return Weight(tuple(coroot_pairing(mu, alpha) for alpha in self.simple_roots), Basis.FUNDAMENTAL)

    def from_simple(self, coeffs: Iterable) -> Weight:
        return self.to_epsilon(Weight(tuple(coeffs), Basis.SIMPLE))

    def from_fundamental(self, labels: Iterable) -> Weight:
        return self.to_epsilon(Weight(tuple(labels), Basis.FUNDAMENTAL))

    def height(self, root: Weight) -> Fraction:
        return sum(self.to_simple(root).coords, Fraction(0))

    @cached_property
    def standard_positives(self) -> Tuple[Weight, ...]:
        return tuple(r for r in self.roots if all(c >= 0 for c in self.to_simple(r).coords))

    @cached_property
    def highest_root(self) -> Weight:
        return max(self.standard_positives, key=lambda r: (self.height(r), r.coords))

    def reflect_simple(self, index: int, mu: Weight) -> Weight:
        if not 1 <= index <= self.rank:
            raise ValueError(f"Simple reflection index {index} outside 1..{self.rank}")
        return reflect(self.to_epsilon(mu), self.simple_roots[index - 1])

    def rescaled(self, scale) -> "RootDatum":
        """The same root system with the bilinear form multiplied by scale > 0"""
        scale = to_fraction(scale)
        if scale <= 0:
            raise ValueError(f"Form scale must be positive, got {scale}")
        return RootDatum(self.cartan_type, self.simple_roots, self.roots, self.form_scale * scale, self.components, self.space_dim)

    @classmethod
    def from_roots(cls, label: str, roots: Iterable[Weight], chamber: Weight,
                   form_scale: Fraction = Fraction(1)) -> "RootDatum":
        """
        Root datum of a closed root subsystem.

        Args:
            label: name used in reports
            roots: every root of the subsystem
            chamber: vector with nonzero pairing against every root; its
                positive side fixes the simple roots

        Raises:
            ValueError: if the chamber is singular for the subsystem
        """
        roots = sorted(set(roots), key=lambda r: r.coords)
        if any(r.dot(chamber) == 0 for r in roots):
            raise ValueError(f"Chamber {chamber!r} is singular for subsystem {label}")
        positives = [r for r in roots if r.dot(chamber) > 0]
        simple = sorted(simple_roots_of(positives), key=lambda r: (-r.dot(chamber), r.coords))
        return cls(label, tuple(simple), tuple(roots), form_scale, (), chamber.dim)


def build_root_datum(cartan_type: str, rank: Optional[int] = None, form_scale=1) -> RootDatum:
    """
    Build the root datum of a simple type or a product such as "A1xA1".

    Args:
        cartan_type: family letter ("A", "E", ...), a label ("E6") or a
            product label joined by "x"
        rank: rank when cartan_type is a bare family letter

    Returns:
        RootDatum with simple roots in Bourbaki order

    Raises:
        ValueError: unsupported type or rank
    """
    if rank is not None:
        labels = [f"{cartan_type}{rank}"]
    else:
        labels = [part.strip() for part in cartan_type.split("x")]
    components = []
    for label in labels:
        family, digits = label[:1].upper(), label[1:]
        if family not in SUPPORTED_TYPES or not digits.isdigit():
            raise ValueError(f"Unsupported Cartan type {label}")
        n = int(digits)
        if n < SUPPORTED_TYPES[family] or (family == "E" and n != 6) or (family == "F" and n != 4):
            raise ValueError(f"Unsupported Cartan type {label}: rank {n} not available")
        components.append((family, n))

    blocks = [_simple_roots_for(family, n) for family, n in components]
    total_dim = sum(dim for dim, _ in blocks)
    simple_roots = []
    offset = 0
    for dim, roots in blocks:
        for root in roots:
            coords = [Fraction(0)] * total_dim
            coords[offset:offset + dim] = root.coords
            simple_roots.append(Weight(tuple(coords)))
        offset += dim

    label = "x".join(f"{family}{n}" for family, n in components)
    roots = sorted(_root_closure(simple_roots), key=lambda r: r.coords)
    logger.debug(f"Built root datum {label}: {len(roots)} roots in R^{total_dim}")
    return RootDatum(label, tuple(simple_roots), tuple(roots), to_fraction(form_scale), tuple(components))


@dataclass(frozen=True)
class PositiveSystem:
    """Positive roots of a root datum together with the compact/noncompact labels"""
    datum: RootDatum
    positives: Tuple[Weight, ...]
    compact: FrozenSet[Weight]
    name: str = "standard"

    def __post_init__(self):
        pos = set(self.positives)
        if len(pos) * 2 != len(self.datum.roots) or any(-r in pos for r in pos):
            raise ValueError(f"System {self.name} is not a positive system of {self.datum.cartan_type}")

    def is_compact(self, root: Weight) -> bool:
        return root in self.compact

    @cached_property
    def compact_flags(self) -> Dict[Weight, bool]:
        return {root: root in self.compact for root in self.datum.roots}

    @cached_property
    def compact_positives(self) -> Tuple[Weight, ...]:
        return tuple(r for r in self.positives if r in self.compact)

    @cached_property
    def noncompact_positives(self) -> Tuple[Weight, ...]:
        return tuple(r for r in self.positives if r not in self.compact)

    @cached_property
    def simple_roots(self) -> Tuple[Weight, ...]:
        simple = simple_roots_of(self.positives)
        if set(simple) == set(self.datum.simple_roots):
            return self.datum.simple_roots
        return tuple(sorted(simple, key=lambda r: tuple(-c for c in r.coords)))

    @cached_property
    def noncompact_simple(self) -> Tuple[Weight, ...]:
        return tuple(r for r in self.simple_roots if r not in self.compact)

    @cached_property
    def chamber(self) -> Weight:
        """A regular weight on the positive side of every positive root"""
        return sum(self.positives, Weight.zero(self.datum.ambient_dim))

    def is_dominant(self, mu: Weight, strict: bool = False) -> bool:
        mu = self.datum.to_epsilon(mu)
        values = [coroot_pairing(mu, alpha) for alpha in self.simple_roots]
        return all(v > 0 for v in values) if strict else all(v >= 0 for v in values)

    def is_regular(self, mu: Weight) -> bool:
        mu = self.datum.to_epsilon(mu)
        return all(mu.dot(alpha) != 0 for alpha in self.positives)

    def rescaled(self, scale) -> "PositiveSystem":
        return PositiveSystem(self.datum.rescaled(scale), self.positives, self.compact, self.name)


def compact_by_parity(datum: RootDatum, noncompact_simple: Iterable[int]) -> FrozenSet[Weight]:
    """
    Compact roots of the Z/2-grading fixed by a set of noncompact simple roots.

    A root is compact when the sum of its simple-root coefficients over the
    noncompact indices (1-based) is even.
    """
    indices = [i - 1 for i in noncompact_simple]
    compact = set()
    for root in datum.roots:
        coeffs = datum.to_simple(root).coords
        if sum(coeffs[i] for i in indices) % 2 == 0:
            compact.add(root)
    return frozenset(compact)


def positive_system(datum: RootDatum, chamber_labels: Iterable, noncompact_simple: Iterable[int],
                    name: str = "standard") -> PositiveSystem:
    """
    Positive system of roots pairing positively with a chamber vector.

    Args:
        datum: ambient root datum
        chamber_labels: Dynkin labels (w.r.t. the Bourbaki simple roots) of
            a regular chamber vector
        noncompact_simple: 1-based indices fixing the compact/noncompact grading
        name: catalog name of the system

    Raises:
        ValueError: if the chamber is singular
    """
    chamber = datum.from_fundamental([to_fraction(x) for x in chamber_labels])
    positives = []
    for root in datum.roots:
        value = root.dot(chamber)
        if value == 0:
            raise ValueError(f"Chamber for system {name} is orthogonal to root {root.render()}")
        if value > 0:
            positives.append(root)
    return PositiveSystem(datum, tuple(positives), compact_by_parity(datum, noncompact_simple), name)


def rho_vectors(rd: RootDatum, ps: PositiveSystem) -> Tuple[Weight, Weight, Weight]:
    """Half sums (rho, rho_c, rho_n) of positive, compact positive and noncompact positive roots"""
    if ps.datum.roots != rd.roots:
        raise ValueError(f"Positive system {ps.name} does not belong to {rd.cartan_type}")
    zero = Weight.zero(rd.ambient_dim)
    rho = sum(ps.positives, zero) * HALF
    rho_c = sum(ps.compact_positives, zero) * HALF
    rho_n = sum(ps.noncompact_positives, zero) * HALF
    return rho, rho_c, rho_n


def weyl_act(rd: RootDatum, word: Sequence[int], mu: Weight) -> Weight:
    """Apply the simple reflections of word (1-based) to mu, first index first"""
    result = rd.to_epsilon(mu)
    for index in word:
        result = rd.reflect_simple(index, result)
    return result


def _components(simple: Sequence[Weight]) -> List[List[Weight]]:
    remaining = list(simple)
    groups = []
    while remaining:
        group = [remaining.pop(0)]
        grew = True
        while grew:
            grew = False
            for root in list(remaining):
                if any(root.dot(other) != 0 for other in group):
                    group.append(root)
                    remaining.remove(root)
                    grew = True
        groups.append(group)
    return groups


def system_flags(rd: RootDatum, ps: PositiveSystem) -> Dict[str, bool]:
    """
    Holomorphic / Borel-de Siebenthal flags of a positive system.

    Evaluated on each simple factor carrying noncompact roots: holomorphic
    means a unique noncompact simple root beta with every root coefficient of
    beta in {-1, 0, 1} and compact exactly when it is 0; Borel-de Siebenthal
    means a unique noncompact simple root with coefficients in {-2, ..., 2}
    and compact exactly when the coefficient is even.
    """
    if ps.datum.roots != rd.roots:
        raise ValueError(f"Positive system {ps.name} does not belong to {rd.cartan_type}")
    holomorphic = True
    bds = True
    unique = True
    saw_noncompact = False
    for group in _components(ps.simple_roots):
        noncompact = [r for r in group if not ps.is_compact(r)]
        if not noncompact:
            continue
        saw_noncompact = True
        if len(noncompact) != 1:
            unique = holomorphic = bds = False
            continue
        beta = noncompact[0]
        index = group.index(beta)
        for root in rd.roots:
            coeffs = solve_in_span(group, root)
            if coeffs is None:
                continue
            c = coeffs[index]
            compact = ps.is_compact(root)
            if not (abs(c) <= 1 and compact == (c == 0)):
                holomorphic = False
            if not (abs(c) <= 2 and compact == (c % 2 == 0)):
                bds = False
    if not saw_noncompact:
        unique = holomorphic = bds = False
    return {
        "holomorphic": holomorphic,
        "borel_de_siebenthal": bds,
        "unique_noncompact_simple": unique,
    }

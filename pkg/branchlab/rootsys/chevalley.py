"""
Chevalley structure constants and the bracket of a complex semisimple Lie algebra.

Signs follow the extraspecial-pair convention: positive roots are ordered by
height (ties broken by coordinates), every extraspecial pair gets a positive
constant, and every other constant is forced by the four-root identity and
the triangle relations.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, Mapping, Optional, Tuple

from loguru import logger

from branchlab.rootsys.cartan import RootDatum
from branchlab.rootsys.weight import Weight, to_fraction


@dataclass(frozen=True)
class AlgebraElement:
    """
    Element h + sum c_r e_r of g.

    The Cartan part h is stored as a vector in the epsilon coordinates with
    [h, e_s] = (s . h) e_s for the plain dot product, so the coroot of r is
    2r/(r . r).
    """
    cartan: Weight
    root_part: Tuple[Tuple[Weight, Fraction], ...] = ()

    def __post_init__(self):
        cleaned: Dict[Weight, Fraction] = {}
        for root, coeff in self.root_part:
            cleaned[root] = cleaned.get(root, Fraction(0)) + to_fraction(coeff)
        items = tuple(sorted(((r, c) for r, c in cleaned.items() if c != 0), key=lambda item: item[0].coords))
        object.__setattr__(self, "root_part", items)

    @classmethod
    def zero(cls, dim: int) -> "AlgebraElement":
        return cls(Weight.zero(dim))

    @classmethod
    def root_vector(cls, root: Weight, coeff=1) -> "AlgebraElement":
        return cls(Weight.zero(root.dim), ((root, to_fraction(coeff)),))

    @classmethod
    def from_roots(cls, coeffs: Mapping[Weight, Fraction], dim: int) -> "AlgebraElement":
        return cls(Weight.zero(dim), tuple(coeffs.items()))

    @property
    def dim(self) -> int:
        return self.cartan.dim

    @cached_property
    def components(self) -> Dict[Weight, Fraction]:
        return dict(self.root_part)

    def coefficient(self, root: Weight) -> Fraction:
        return self.components.get(root, Fraction(0))

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(self.cartan + other.cartan, self.root_part + other.root_part)

    def __neg__(self) -> "AlgebraElement":
        return self * -1

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def __mul__(self, scalar) -> "AlgebraElement":
        factor = to_fraction(scalar)
        return AlgebraElement(self.cartan * factor, tuple((r, c * factor) for r, c in self.root_part))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.cartan.is_zero() and not self.root_part

    def render(self) -> str:
        parts = []
        if not self.cartan.is_zero():
            parts.append(f"h{self.cartan.render()}")
        for root, coeff in self.root_part:
            parts.append(f"{coeff}*e{root.render()}")
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class ChevalleyConstants:
    """Structure constants N_{r,s} of a Chevalley basis of the algebra of a root datum"""
    datum: RootDatum
    table: Dict[Tuple[Weight, Weight], int] = field(repr=False)
    cartan_part: Dict[Weight, Weight] = field(repr=False)

    def N(self, r: Weight, s: Weight) -> int:
        """N_{r,s}; zero when r + s is not a root"""
        return self.table.get((r, s), 0)

    def coroot(self, r: Weight) -> Weight:
        return self.cartan_part[r]

    def bracket(self, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        """Lie bracket [x, y]"""
        cartan = Weight.zero(x.dim)
        coeffs: Dict[Weight, Fraction] = {}

        def add(root: Weight, value: Fraction) -> None:
            coeffs[root] = coeffs.get(root, Fraction(0)) + value

        for s, b in y.root_part:
            value = s.dot(x.cartan)
            if value:
                add(s, value * b)
        for r, a in x.root_part:
            value = r.dot(y.cartan)
            if value:
                add(r, -value * a)
        for r, a in x.root_part:
            for s, b in y.root_part:
                total = r + s
                if total.is_zero():
                    cartan = cartan + self.cartan_part[r] * (a * b)
                    continue
                n = self.table.get((r, s))
                if n:
                    add(total, n * a * b)
        return AlgebraElement(cartan, tuple(coeffs.items()))

    def root_bracket(self, r: Weight, s: Weight) -> AlgebraElement:
        return self.bracket(AlgebraElement.root_vector(r), AlgebraElement.root_vector(s))

    def jacobi(self, x: AlgebraElement, y: AlgebraElement, z: AlgebraElement) -> AlgebraElement:
        """[x,[y,z]] + [y,[z,x]] + [z,[x,y]]"""
        return (
            self.bracket(x, self.bracket(y, z))
            + self.bracket(y, self.bracket(z, x))
            + self.bracket(z, self.bracket(x, y))
        )


class _ConstantSolver:
    """Recursive evaluation of N_{r,s} from the extraspecial pairs"""

    def __init__(self, datum: RootDatum):
        self.datum = datum
        self.roots = set(datum.roots)
        positives = sorted(datum.standard_positives, key=lambda r: (datum.height(r), r.coords))
        self.order = {root: i for i, root in enumerate(positives)}
        self.extraspecial: Dict[Weight, Tuple[Weight, Weight]] = {}
        for xi in positives:
            for alpha in positives:
                beta = xi - alpha
                if beta in self.order:
                    self.extraspecial[xi] = (alpha, beta)
                    break
        self.memo: Dict[Tuple[Weight, Weight], Fraction] = {}

    def string_below(self, alpha: Weight, beta: Weight) -> int:
        """Largest p with beta - p alpha a root"""
        p = 0
        while beta - alpha * (p + 1) in self.roots:
            p += 1
        return p

    def norm(self, r: Weight) -> Fraction:
        return r.dot(r)

    def is_positive(self, r: Weight) -> bool:
        return r in self.order

    def value(self, r: Weight, s: Weight) -> Fraction:
        total = r + s
        if total.is_zero() or total not in self.roots:
            return Fraction(0)
        key = (r, s)
        if key not in self.memo:
            self.memo[key] = self._compute(r, s, total)
        return self.memo[key]

    def _compute(self, r: Weight, s: Weight, total: Weight) -> Fraction:
        r_pos, s_pos = self.is_positive(r), self.is_positive(s)
        if not r_pos and not s_pos:
            return -self.value(-r, -s)
        if r_pos != s_pos:
            t = -total
            # (r, s, t) sums to zero: rotate to a pair of equal sign
            if self.is_positive(s) == self.is_positive(t):
                return self.norm(t) / self.norm(r) * self.value(s, t)
            return self.norm(t) / self.norm(s) * self.value(t, r)
        if self.order[r] > self.order[s]:
            return -self.value(s, r)
        alpha, beta = self.extraspecial[total]
        if (r, s) == (alpha, beta):
            return Fraction(self.string_below(alpha, beta) + 1)
        zeta, eta = r, s
        terms = Fraction(0)
        if (eta - alpha) in self.roots:
            terms += self.value(eta, -alpha) * self.value(zeta, -beta) / self.norm(eta - alpha)
        if (zeta - alpha) in self.roots:
            terms += self.value(-alpha, zeta) * self.value(eta, -beta) / self.norm(zeta - alpha)
        return self.norm(total) / self.value(alpha, beta) * terms


def chevalley_constants(rd: RootDatum) -> ChevalleyConstants:
    """
    Build the structure constants of the Chevalley basis attached to rd.

    Args:
        rd: root datum from build_root_datum

    Returns:
        ChevalleyConstants with N_{r,s} for every pair with r + s a root and
        the coroots h_r = [e_r, e_{-r}]
    """
    solver = _ConstantSolver(rd)
    table: Dict[Tuple[Weight, Weight], int] = {}
    for r in rd.roots:
        for s in rd.roots:
            value = solver.value(r, s)
            if value:
                if value.denominator != 1:
                    raise ArithmeticError(f"Non-integral structure constant for {r!r}, {s!r}: {value}")
                table[(r, s)] = int(value)
    cartan_part = {r: r * (Fraction(2) / r.dot(r)) for r in rd.roots}
    logger.debug(f"Chevalley constants for {rd.cartan_type}: {len(table)} nonzero entries")
    return ChevalleyConstants(rd, table, cartan_part)


def element(terms: Iterable[Tuple[Weight, object]], dim: int, cartan: Optional[Weight] = None) -> AlgebraElement:
    """Convenience constructor from (root, coefficient) pairs"""
    return AlgebraElement(cartan if cartan is not None else Weight.zero(dim),
                          tuple((r, to_fraction(c)) for r, c in terms))

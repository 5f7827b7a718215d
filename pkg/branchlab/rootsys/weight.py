"""
Exact weights.

A Weight is a tuple of rationals together with the basis it is written in.
Root data store everything in the orthogonal epsilon basis of their Cartan
type; simple-root and fundamental-weight coordinates are produced on demand by
RootDatum conversions.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Tuple, Union

import sympy

Scalar = Union[int, Fraction, str]


class Basis(str, Enum):
    """Coordinate bases a weight can be written in"""
    EPSILON = "epsilon"
    SIMPLE = "simple"
    FUNDAMENTAL = "fundamental"


def to_fraction(value) -> Fraction:
    """
    Coerce a scalar into an exact Fraction.

    Accepts ints, Fractions, sympy rationals and strings such as "3/2".
    Floats are rejected: nothing in the exact layer may carry rounding.
    """
    if isinstance(value, bool):
        raise ValueError(f"Not a rational scalar: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, sympy.Basic):
        if not value.is_Rational:
            raise ValueError(f"Not a rational scalar: {value}")
        return Fraction(int(value.p), int(value.q))
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    raise ValueError(f"Not a rational scalar: {value!r}")


def render_fraction(value: Fraction) -> str:
    """Render a rational as "p/q" (or "p" when integral)"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class Weight:
    """Exact rational coordinate vector over a declared basis"""
    coords: Tuple[Fraction, ...]
    basis: Basis = Basis.EPSILON

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(to_fraction(c) for c in self.coords))

    @classmethod
    def of(cls, values: Iterable[Scalar], basis: Basis = Basis.EPSILON) -> "Weight":
        return cls(tuple(values), basis)

    @classmethod
    def zero(cls, dim: int, basis: Basis = Basis.EPSILON) -> "Weight":
        return cls((Fraction(0),) * dim, basis)

    @classmethod
    def unit(cls, dim: int, index: int, basis: Basis = Basis.EPSILON) -> "Weight":
        coords = [Fraction(0)] * dim
        coords[index] = Fraction(1)
        return cls(tuple(coords), basis)

    @property
    def dim(self) -> int:
        return len(self.coords)

    def _check(self, other: "Weight") -> None:
        if self.basis != other.basis or self.dim != other.dim:
            raise ValueError(
                f"Incompatible weights: {self.basis.value}[{self.dim}] vs {other.basis.value}[{other.dim}]"
            )

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)), self.basis)

    def __sub__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)), self.basis)

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords), self.basis)

    def __mul__(self, scalar) -> "Weight":
        factor = to_fraction(scalar)
        return Weight(tuple(factor * a for a in self.coords), self.basis)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "Weight":
        factor = to_fraction(scalar)
        return Weight(tuple(a / factor for a in self.coords), self.basis)

    def dot(self, other: "Weight") -> Fraction:
        """Plain coordinate dot product (the unscaled epsilon form)"""
        self._check(other)
        return sum((a * b for a, b in zip(self.coords, other.coords)), Fraction(0))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def sort_key(self) -> Tuple:
        return (self.basis.value, self.coords)

    def render(self) -> str:
        return "(" + ", ".join(render_fraction(c) for c in self.coords) + ")"

    def to_strings(self) -> Tuple[str, ...]:
        return tuple(render_fraction(c) for c in self.coords)

    def __repr__(self) -> str:
        return f"Weight{self.render()}[{self.basis.value}]"


def weight_sum(weights: Iterable[Weight], dim: int) -> Weight:
    total = Weight.zero(dim)
    for weight in weights:
        total = total + weight
    return total

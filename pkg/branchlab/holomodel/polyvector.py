"""
W-valued polynomials on p+ with exact rational coefficients
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple

from branchlab.rootsys.weight import render_fraction, to_fraction

Monomial = Tuple[int, ...]
Vector = Tuple[Fraction, ...]


def monomials(nvars: int, degree: int) -> List[Monomial]:
    """Exponent vectors of total degree `degree`, in lexicographic order (highest first)"""
    result = []
    for combo in combinations_with_replacement(range(nvars), degree):
        exps = [0] * nvars
        for i in combo:
            exps[i] += 1
        result.append(tuple(exps))
    return sorted(result, reverse=True)


def _add_into(acc: Dict[Monomial, List[Fraction]], mono: Monomial, vector: Sequence[Fraction], factor: Fraction) -> None:
    slot = acc.get(mono)
    if slot is None:
        acc[mono] = [factor * c for c in vector]
    else:
        for i, c in enumerate(vector):
            slot[i] += factor * c


@dataclass(frozen=True)
class PolyVector:
    """
    Finite sum of monomials z^a with coefficient vectors in W.

    Terms are kept sorted by monomial with zero coefficients dropped, so equal
    polynomials compare equal and serialize identically.
    """
    nvars: int
    wdim: int
    terms: Tuple[Tuple[Monomial, Vector], ...] = ()

    def __post_init__(self):
        cleaned = []
        for mono, vector in self.terms:
            if len(mono) != self.nvars or len(vector) != self.wdim:
                raise ValueError(f"Term shape {len(mono)}x{len(vector)} does not match {self.nvars}x{self.wdim}")
            vector = tuple(to_fraction(c) for c in vector)
            if any(vector):
                cleaned.append((tuple(mono), vector))
        cleaned.sort(key=lambda item: item[0])
        for (a, _), (b, _) in zip(cleaned, cleaned[1:]):
            if a == b:
                raise ValueError(f"Duplicate monomial {a}; use PolyVector.from_dict")
        object.__setattr__(self, "terms", tuple(cleaned))

    @classmethod
    def from_dict(cls, nvars: int, wdim: int, data: Mapping[Monomial, Sequence[Fraction]]) -> "PolyVector":
        return cls(nvars, wdim, tuple((m, tuple(v)) for m, v in data.items()))

    @classmethod
    def zero(cls, nvars: int, wdim: int) -> "PolyVector":
        return cls(nvars, wdim)

    @classmethod
    def constant(cls, nvars: int, vector: Sequence) -> "PolyVector":
        return cls(nvars, len(vector), (((0,) * nvars, tuple(vector)),))

    @classmethod
    def basis_vector(cls, nvars: int, wdim: int, mono: Monomial, index: int) -> "PolyVector":
        vector = tuple(Fraction(1) if i == index else Fraction(0) for i in range(wdim))
        return cls(nvars, wdim, ((mono, vector),))

    def as_dict(self) -> Dict[Monomial, Vector]:
        return dict(self.terms)

    def coefficient(self, mono: Monomial, index: int = 0) -> Fraction:
        for m, vector in self.terms:
            if m == mono:
                return vector[index]
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> List[int]:
        return sorted({sum(m) for m, _ in self.terms})

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero vector"""
        return max((sum(m) for m, _ in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous_part(self, degree: int) -> "PolyVector":
        return PolyVector(self.nvars, self.wdim, tuple(t for t in self.terms if sum(t[0]) == degree))

    def _check(self, other: "PolyVector") -> None:
        if (self.nvars, self.wdim) != (other.nvars, other.wdim):
            raise ValueError("PolyVectors live in different models")

    def combine(self, pairs: Iterable[Tuple[Fraction, "PolyVector"]]) -> "PolyVector":
        acc: Dict[Monomial, List[Fraction]] = {}
        for mono, vector in self.terms:
            _add_into(acc, mono, vector, Fraction(1))
        for factor, other in pairs:
            self._check(other)
            factor = to_fraction(factor)
            if factor == 0:
                continue
            for mono, vector in other.terms:
                _add_into(acc, mono, vector, factor)
        return PolyVector.from_dict(self.nvars, self.wdim, acc)

    def __add__(self, other: "PolyVector") -> "PolyVector":
        return self.combine([(Fraction(1), other)])

    def __sub__(self, other: "PolyVector") -> "PolyVector":
        return self.combine([(Fraction(-1), other)])

    def __neg__(self) -> "PolyVector":
        return self * -1

    def __mul__(self, scalar) -> "PolyVector":
        factor = to_fraction(scalar)
        return PolyVector(self.nvars, self.wdim, tuple((m, tuple(c * factor for c in v)) for m, v in self.terms))

    __rmul__ = __mul__

    def __iter__(self) -> Iterator[Tuple[Monomial, Vector]]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def max_abs(self) -> Fraction:
        return max((abs(c) for _, v in self.terms for c in v), default=Fraction(0))

    def render(self) -> str:
        """Deterministic text form: one term per monomial, "z^a: [c0, c1, ...]" """
        if not self.terms:
            return "0"
        parts = []
        for mono, vector in self.terms:
            coeffs = ", ".join(render_fraction(c) for c in vector)
            parts.append(f"z^({','.join(str(e) for e in mono)}): [{coeffs}]")
        return "; ".join(parts)

    def __repr__(self) -> str:
        return f"PolyVector({self.render()})"


def shift(mono: Monomial, index: int, amount: int) -> Monomial:
    exps = list(mono)
    exps[index] += amount
    return tuple(exps)


def scalar_product(a: Mapping[Monomial, Fraction], b: Mapping[Monomial, Fraction]) -> Dict[Monomial, Fraction]:
    """Product of two scalar polynomials"""
    out: Dict[Monomial, Fraction] = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            mono = tuple(x + y for x, y in zip(ma, mb))
            out[mono] = out.get(mono, Fraction(0)) + ca * cb
    return {m: c for m, c in out.items() if c != 0}


def linear_forms_power(forms: Sequence[Mapping[int, Fraction]], exps: Sequence[int], nvars: int) -> Dict[Monomial, Fraction]:
    """prod_j (sum_i forms[j][i] z_i)^exps[j] as a scalar polynomial in nvars variables"""
    result: Dict[Monomial, Fraction] = {(0,) * nvars: Fraction(1)}
    for form, e in zip(forms, exps):
        linear = {}
        for i, c in form.items():
            if c:
                mono = [0] * nvars
                mono[i] = 1
                linear[tuple(mono)] = Fraction(c)
        for _ in range(e):
            result = scalar_product(result, linear)
    return result

"""
Graded subspaces of P(p+, W): L_{W,H} = P(p_h0+, W) and U(h0)W
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

import sympy
from loguru import logger

from branchlab.holomodel.model import HolomorphicModel
from branchlab.holomodel.polyvector import Monomial, PolyVector, monomials
from branchlab.rootsys.weight import to_fraction


def coordinate_index(nvars: int, wdim: int, degree: int) -> List[Tuple[Monomial, int]]:
    return [(mono, i) for mono in monomials(nvars, degree) for i in range(wdim)]


def to_row(p: PolyVector, index: Sequence[Tuple[Monomial, int]]) -> List[Fraction]:
    data = p.as_dict()
    return [data[mono][i] if mono in data else Fraction(0) for mono, i in index]


def from_row(row: Sequence, index: Sequence[Tuple[Monomial, int]], nvars: int, wdim: int) -> PolyVector:
    data: Dict[Monomial, List[Fraction]] = {}
    for value, (mono, i) in zip(row, index):
        value = to_fraction(value)
        if value:
            data.setdefault(mono, [Fraction(0)] * wdim)[i] = value
    return PolyVector.from_dict(nvars, wdim, data)


def echelon(vectors: Sequence[PolyVector], degree: int, nvars: int, wdim: int) -> Tuple[PolyVector, ...]:
    """Reduced row echelon basis of the span of homogeneous vectors"""
    if not vectors:
        return ()
    index = coordinate_index(nvars, wdim, degree)
    rows = [[sympy.Rational(c.numerator, c.denominator) for c in to_row(v, index)] for v in vectors]
    reduced, pivots = sympy.Matrix(rows).rref()
    return tuple(from_row(reduced.row(k), index, nvars, wdim) for k in range(len(pivots)))


@dataclass(frozen=True)
class GradedSubspace:
    """Per-degree spanning sets in reduced echelon form"""
    name: str
    nvars: int
    wdim: int
    pieces: Dict[int, Tuple[PolyVector, ...]] = field(default_factory=dict)

    @property
    def max_degree(self) -> int:
        return max(self.pieces, default=-1)

    def basis(self, degree: int) -> Tuple[PolyVector, ...]:
        return self.pieces.get(degree, ())

    def dim(self, degree: int) -> int:
        return len(self.basis(degree))

    def dims(self) -> List[int]:
        return [self.dim(d) for d in range(self.max_degree + 1)]

    def contains(self, p: PolyVector) -> bool:
        """Membership, degree by degree; degrees beyond max_degree are refused"""
        for degree in p.degrees():
            if degree > self.max_degree:
                raise ValueError(f"Degree {degree} beyond the computed range of {self.name}")
            piece = p.homogeneous_part(degree)
            basis = self.basis(degree)
            if len(echelon(list(basis) + [piece], degree, self.nvars, self.wdim)) != len(basis):
                return False
        return True

    def intersection_dim(self, other: "GradedSubspace", degree: int) -> int:
        ours, theirs = self.basis(degree), other.basis(degree)
        total = len(echelon(list(ours) + list(theirs), degree, self.nvars, self.wdim))
        return len(ours) + len(theirs) - total


def lwh_subspace(model: HolomorphicModel, degree: int) -> GradedSubspace:
    """
    L_{W,H} up to the given degree: polynomials in the p_h0+ coordinates.

    Every element is annihilated by the derivatives along p_h+.
    """
    pieces = {}
    for d in range(degree + 1):
        vectors = [
            model.b_monomial(exps, i)
            for exps in monomials(model.h0_rank, d)
            for i in range(model.wdim)
        ]
        pieces[d] = echelon(vectors, d, model.nvars, model.wdim)
    return GradedSubspace("L_{W,H}", model.nvars, model.wdim, pieces)


def uh0w_subspace(model: HolomorphicModel, degree: int) -> GradedSubspace:
    """U(h0)W up to the given degree: the span of p_h0- words applied to W"""
    pieces = {0: echelon([model.action.constant(i) for i in range(model.wdim)], 0, model.nvars, model.wdim)}
    for d in range(1, degree + 1):
        vectors = [model.act(pair.y, v) for pair in model.dual_pairs for v in pieces[d - 1]]
        pieces[d] = echelon(vectors, d, model.nvars, model.wdim)
        logger.debug(f"U(h0)W degree {d}: dim {len(pieces[d])}")
    return GradedSubspace("U(h0)W", model.nvars, model.wdim, pieces)


def degree_piece_dim(model: HolomorphicModel, degree: int) -> int:
    """dim V^(degree) = number of monomials times dim W"""
    return len(monomials(model.nvars, degree)) * model.wdim


def span(name: str, model: HolomorphicModel, vectors: Iterable[PolyVector]) -> GradedSubspace:
    grouped: Dict[int, List[PolyVector]] = {}
    for v in vectors:
        for d in v.degrees():
            grouped.setdefault(d, []).append(v.homogeneous_part(d))
    top = max(grouped, default=0)
    pieces = {d: echelon(grouped.get(d, []), d, model.nvars, model.wdim) for d in range(top + 1)}
    return GradedSubspace(name, model.nvars, model.wdim, pieces)

"""
The duality maps D: L_{W,H} -> U(h0)W and Q: P(p+, W) -> U(h0)W
"""
from fractions import Fraction
from typing import Dict, List, Optional

import sympy

from branchlab.errors import CutoffExceededError
from branchlab.holomodel.inner import InnerProductModel, inner_product_model
from branchlab.holomodel.model import HolomorphicModel
from branchlab.holomodel.polyvector import PolyVector
from branchlab.holomodel.subspaces import GradedSubspace, lwh_subspace, uh0w_subspace
from branchlab.rootsys.weight import to_fraction


def duality_map_D(model: HolomorphicModel, p: PolyVector) -> PolyVector:
    """
    D = D1 D0 on an element of L_{W,H}.

    D0 identifies P(p_h0+, W) with S(p_h0-) (x) W through the invariant form
    (b_j <-> y_j / kappa_j); D1 lets the symmetric tensors act on W.

    Raises:
        ValueError: p is not a polynomial in the p_h0+ coordinates
    """
    coordinates = model.to_b_coordinates(p)
    rebuilt = model.action.zero()
    images = []
    for (exps, index), c in sorted(coordinates.items()):
        rebuilt = rebuilt + model.b_monomial(exps, index) * c
        scale = Fraction(1)
        word = []
        for pair, e in zip(model.dual_pairs, exps):
            scale /= pair.kappa ** e
            word.extend([pair.y] * e)
        images.append((c * scale, model.action.act_word(word, model.action.constant(index))))
    if rebuilt != p:
        raise ValueError("Input of D is not in L_{W,H}")
    return model.action.zero().combine(images)


def _solve(gram: sympy.Matrix, rhs: List[Fraction]) -> List[Fraction]:
    vector = sympy.Matrix([sympy.Rational(str(v)) for v in rhs])
    return [to_fraction(c) for c in gram.LUsolve(vector)]


class Projector:
    """Orthogonal projection onto U(h0)W, degree by degree up to a cutoff"""

    def __init__(self, model: HolomorphicModel, cutoff: int, inner: Optional[InnerProductModel] = None):
        self.model = model
        self.cutoff = cutoff
        self.inner = inner or inner_product_model(model)
        self.target: GradedSubspace = uh0w_subspace(model, cutoff)
        self._grams: Dict[int, sympy.Matrix] = {}

    def gram(self, degree: int) -> sympy.Matrix:
        if degree not in self._grams:
            self._grams[degree] = self.inner.gram(self.target.basis(degree))
        return self._grams[degree]

    def __call__(self, p: PolyVector) -> PolyVector:
        if p.degree > self.cutoff:
            raise CutoffExceededError(f"Degree {p.degree} exceeds the projector cutoff {self.cutoff}")
        result = self.model.action.zero()
        for degree in p.degrees():
            basis = self.target.basis(degree)
            if not basis:
                continue
            piece = p.homogeneous_part(degree)
            coeffs = _solve(self.gram(degree), [self.inner.inner(b, piece) for b in basis])
            result = result.combine(zip(coeffs, basis))
        return result


def project_Q(model: HolomorphicModel, p: PolyVector, cutoff: int) -> PolyVector:
    """
    Orthogonal projection of p onto U(h0)W within the cutoff.

    Raises:
        CutoffExceededError: cutoff below the degree of p
        UnsupportedModelError: no inner product model for (g, tau)
    """
    return Projector(model, cutoff)(p)


def q_gram_determinants(model: HolomorphicModel, cutoff: int) -> List[Fraction]:
    """Per-degree Gram determinants of Q applied to a basis of L_{W,H}; nonzero iff Q is injective there"""
    projector = Projector(model, cutoff)
    source = lwh_subspace(model, cutoff)
    dets = []
    for degree in range(cutoff + 1):
        images = [projector(b) for b in source.basis(degree)]
        dets.append(to_fraction(projector.inner.gram(images).det()))
    return dets

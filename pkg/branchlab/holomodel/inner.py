"""
Inner products on P(p+, W) for scalar tau: distinct monomials are orthogonal
"""
from abc import ABC, abstractmethod
from fractions import Fraction
from math import factorial
from typing import List, Sequence

import sympy

from branchlab.errors import UnsupportedModelError
from branchlab.holomodel.model import HolomorphicModel
from branchlab.holomodel.polyvector import Monomial, PolyVector
from branchlab.rootsys.cartan import coroot_pairing


def pochhammer(x: Fraction, k: int) -> Fraction:
    """(x)_k = x (x + 1) ... (x + k - 1)"""
    result = Fraction(1)
    for i in range(k):
        result *= x + i
    return result


class InnerProductModel(ABC):
    """Abstract base class for monomial-orthogonal Hilbert structures on P(p+, C)"""

    @abstractmethod
    def monomial_norm(self, mono: Monomial) -> Fraction:
        """
        Squared norm of z^mono

        Args:
            mono: exponent vector

        Returns:
            Positive rational
        """
        pass

    def inner(self, p: PolyVector, q: PolyVector) -> Fraction:
        if p.wdim != 1 or q.wdim != 1:
            raise UnsupportedModelError("Inner products are only modeled for scalar tau")
        qd = q.as_dict()
        total = Fraction(0)
        for mono, vector in p.terms:
            if mono in qd:
                total += self.monomial_norm(mono) * vector[0] * qd[mono][0]
        return total

    def norm_squared(self, p: PolyVector) -> Fraction:
        return self.inner(p, p)

    def gram(self, vectors: Sequence[PolyVector]) -> sympy.Matrix:
        n = len(vectors)
        return sympy.Matrix(n, n, lambda i, j: sympy.Rational(str(self.inner(vectors[i], vectors[j]))))


class DiscProductModel(InnerProductModel):
    """Products of scalar SU(1,1) factors: ||z^a||^2 = prod a_i!/(lambda_i)_{a_i}"""

    def __init__(self, lams: Sequence[Fraction]):
        if any(lam <= 0 for lam in lams):
            raise UnsupportedModelError(f"Disc model needs positive parameters, got {list(lams)}")
        self.lams: List[Fraction] = [Fraction(lam) for lam in lams]

    def monomial_norm(self, mono: Monomial) -> Fraction:
        norm = Fraction(1)
        for a, lam in zip(mono, self.lams):
            norm *= Fraction(factorial(a)) / pochhammer(lam, a)
        return norm


class BallModel(InnerProductModel):
    """Scalar SU(n,1): ||z^a||^2 = a!/(lambda)_{|a|}"""

    def __init__(self, lam: Fraction):
        if lam <= 0:
            raise UnsupportedModelError(f"Ball model needs a positive parameter, got {lam}")
        self.lam = Fraction(lam)

    def monomial_norm(self, mono: Monomial) -> Fraction:
        norm = Fraction(1)
        for a in mono:
            norm *= factorial(a)
        return norm / pochhammer(self.lam, sum(mono))


def inner_product_model(model: HolomorphicModel) -> InnerProductModel:
    """
    Pick the inner product of a holomorphic model.

    Raises:
        UnsupportedModelError: non-scalar tau, or an ambient algebra other than
        a product of A1 factors or a single type A factor
    """
    action = model.action
    if action.wdim != 1:
        raise UnsupportedModelError("Only scalar tau carries an explicit inner product")
    tau = action.module.weights[0]
    lams = [coroot_pairing(tau, -root) for root in action.lead_roots]
    datum = model.pair.ambient
    if all(component == ("A", 1) for component in datum.components):
        return DiscProductModel(lams)
    if len(datum.components) == 1 and datum.components[0][0] == "A" and model.nvars == datum.rank:
        if len(set(lams)) != 1:
            raise UnsupportedModelError(f"tau {tau.render()} is not scalar on the ball")
        return BallModel(lams[0])
    raise UnsupportedModelError(f"No inner product model for {datum.cartan_type}")

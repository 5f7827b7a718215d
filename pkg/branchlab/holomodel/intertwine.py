"""
Holographic maps T: P(p_h+, Z) -> P(p+, W) on a truncated basis, and the
exact H-intertwining check.
"""
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Sequence, Tuple

import sympy
from loguru import logger

from branchlab.errors import CutoffExceededError
from branchlab.holomodel.action import GAction, h_action
from branchlab.holomodel.model import HolomorphicModel
from branchlab.holomodel.polyvector import Monomial, PolyVector
from branchlab.holomodel.subspaces import coordinate_index, to_row
from branchlab.rootsys.chevalley import AlgebraElement
from branchlab.rootsys.weight import Weight, to_fraction
from branchlab.sympair.pair import SymmetricPairDatum, split_p


@dataclass(frozen=True)
class HolographicMap:
    """T on the monomial basis of the scalar H-model up to a degree cutoff"""
    domain: GAction = field(repr=False)
    target: GAction = field(repr=False)
    images: Dict[Monomial, PolyVector] = field(repr=False)
    cutoff: int

    def __call__(self, p: PolyVector) -> PolyVector:
        result = self.target.zero()
        pairs = []
        for mono, vector in p.terms:
            if mono not in self.images:
                raise CutoffExceededError(f"T is not defined on degree {sum(mono)} (cutoff {self.cutoff})")
            pairs.append((vector[0], self.images[mono]))
        return result.combine(pairs)

    def perturbed(self, mono: Monomial, delta: PolyVector) -> "HolographicMap":
        images = dict(self.images)
        images[mono] = images[mono] + delta
        return replace(self, images=images)


@dataclass(frozen=True)
class IntertwineReport:
    """Exact residual of act_G(x) T - T act_H(x) over a spanning set of h"""
    cutoff: int
    elements: int
    inputs: int
    max_residual: Fraction
    worst_element: Optional[str] = None

    @property
    def exact(self) -> bool:
        return self.max_residual == 0


def h_spanning(pair: SymmetricPairDatum) -> List[AlgebraElement]:
    """Spanning set of h: p_h+, p_h-, the root vectors of l and the sigma-fixed Cartan"""
    pieces = split_p(pair)
    elements = list(pieces["p_h_plus"]) + list(pieces["p_h_minus"])
    dim = pair.ambient.ambient_dim
    seen = set()
    for root in sorted(pair.compact_roots, key=lambda r: r.coords):
        image = pair.sigma_star(root)
        c = pair.root_sign(root)
        if root in seen:
            continue
        seen.update({root, image})
        if image == root:
            if c == 1:
                elements.append(AlgebraElement.root_vector(root))
        else:
            elements.append(AlgebraElement.from_roots({root: Fraction(1), image: Fraction(c)}, dim))
    for i in range(dim):
        unit = Weight.unit(dim, i)
        fixed = unit + pair.sigma_star(unit)
        if not fixed.is_zero():
            elements.append(AlgebraElement(fixed))
    return elements


def _scalar_l_weight(model: HolomorphicModel, phi: PolyVector) -> Weight:
    weights = {model.pair.qu_restrict(model.action.weight_of(mono, i))
               for mono, vector in phi.terms for i, c in enumerate(vector) if c}
    if len(weights) != 1:
        raise ValueError("Phi is not an L-weight vector")
    return weights.pop()


def holographic_map_from_phi(model: HolomorphicModel, phi: PolyVector, cutoff: int) -> HolographicMap:
    """
    The H-map generated by Phi: T(act_H(y_1..y_k) 1) = act_G(y_1..y_k) Phi for y_i in p_h-.

    Raises:
        ValueError: Phi is not an L-weight vector, or the p_h- words do not span the H-model
    """
    pair = model.pair
    domain = h_action(pair, _scalar_l_weight(model, phi))
    raising = split_p(pair)["p_h_minus"]
    words: Dict[Tuple[int, ...], Tuple[PolyVector, PolyVector]] = {(): (domain.constant(), phi)}
    images: Dict[Monomial, PolyVector] = {(0,) * domain.nvars: phi}
    by_degree = {0: [()]}
    for degree in range(1, cutoff + 1):
        by_degree[degree] = []
        for word in combinations_with_replacement(range(len(raising)), degree):
            prefix = word[:-1]
            source, image = words[prefix]
            y = raising[word[-1]]
            words[word] = (domain.act(y, source), model.act(y, image))
            by_degree[degree].append(word)
        index = coordinate_index(domain.nvars, 1, degree)
        columns = [to_row(words[w][0], index) for w in by_degree[degree]]
        matrix = sympy.Matrix(len(index), len(columns), lambda i, j: sympy.Rational(str(columns[j][i])))
        for k, (mono, _) in enumerate(index):
            unit = sympy.Matrix([1 if i == k else 0 for i in range(len(index))])
            try:
                solution, params = matrix.gauss_jordan_solve(unit)
            except ValueError:
                raise ValueError(f"p_h- words do not reach the monomial {mono} of the H-model")
            solution = solution.subs({p: 0 for p in params})
            pairs = [(to_fraction(solution[j]), words[w][1]) for j, w in enumerate(by_degree[degree])]
            images[mono] = model.action.zero().combine(pairs)
    logger.debug(f"Holographic map on {pair.id} built up to degree {cutoff}")
    return HolographicMap(domain, model.action, images, cutoff)


def inclusion_map(model: HolomorphicModel, cutoff: int) -> HolographicMap:
    """The map generated by the constant Phi = W (the lowest L-type sits in degree 0)"""
    return holographic_map_from_phi(model, model.action.constant(), cutoff)


def intertwine_check(
    pair: SymmetricPairDatum,
    T: HolographicMap,
    cutoff: Optional[int] = None,
    elements: Optional[Sequence[AlgebraElement]] = None,
) -> IntertwineReport:
    """
    max |act_G(x) T(b) - T(act_H(x) b)| over x spanning h and basis inputs b of degree < cutoff.

    Zero for a correct T; any wrong coefficient makes it nonzero.
    """
    cutoff = T.cutoff if cutoff is None else min(cutoff, T.cutoff)
    elements = list(elements) if elements is not None else h_spanning(pair)
    worst = Fraction(0)
    worst_element = None
    inputs = 0
    for degree in range(cutoff):
        for b in T.domain.basis(degree):
            inputs += 1
            image = T(b)
            for x in elements:
                lhs = T.target.act(x, image)
                rhs = T(T.domain.act(x, b))
                residual = (lhs - rhs).max_abs()
                if residual > worst:
                    worst, worst_element = residual, x.render()
    if worst:
        logger.warning(f"Intertwining defect {worst} on {pair.id} at {worst_element}")
    return IntertwineReport(cutoff, len(elements), inputs, worst, worst_element)

"""
The g-action on W-valued polynomials on p+ (holomorphic discrete series, K-finite vectors).

For v in p+ and p in P(p+, W):
    x in k:   (x.p)(v) = tau(x) p(v) - (d_[x,v] p)(v)
    x in p+:  (x.p)(v) = -(d_x p)(v)
    x in p-:  (x.p)(v) = tau([x,v]) p(v) - 1/2 (d_[[x,v],v] p)(v)
where d_u is the derivative along u. The polynomial variables are the
coordinates of v on a basis u_1..u_n of (a subspace of) p+.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from branchlab.compactrep.characters import HighestWeight
from branchlab.errors import UnsupportedModelError
from branchlab.holomodel.polyvector import Monomial, PolyVector, monomials, shift
from branchlab.holomodel.wmodule import Matrix, WModule, module_from_highest_weight
from branchlab.rootsys.chevalley import AlgebraElement, ChevalleyConstants
from branchlab.rootsys.weight import Weight

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class _Term:
    """coeff * z^multiply * tau-matrix * d/dz_derive, each factor optional"""
    coeff: Fraction
    multiply: Tuple[int, ...]
    derive: Optional[int]
    matrix: Optional[Matrix]


class GAction:
    """
    Exact action of g on P(p+, W).

    Args:
        constants: structure constants of the ambient algebra
        noncompact_positives: positive noncompact roots (p- = their root vectors)
        variables: basis u_i of the p+ subspace carrying the coordinates
        lead_roots: root r_i with coefficient 1 in u_i and absent from the other u_j
        module: (tau, W) on the compact part
        weights: L-weight (or K-weight) of each coordinate z_i
    """

    def __init__(
        self,
        constants: ChevalleyConstants,
        noncompact_positives: Sequence[Weight],
        variables: Sequence[AlgebraElement],
        lead_roots: Sequence[Weight],
        module: WModule,
        weights: Sequence[Weight],
    ):
        self.constants = constants
        self.noncompact = frozenset(noncompact_positives)
        self.variables = tuple(variables)
        self.lead_roots = tuple(lead_roots)
        self.module = module
        self.weights = tuple(weights)
        self._operators: Dict[AlgebraElement, List[_Term]] = {}
        for u, r in zip(self.variables, self.lead_roots):
            if u.coefficient(r) != 1:
                raise ValueError(f"Variable {u.render()} does not carry lead root {r.render()}")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def wdim(self) -> int:
        return self.module.dim

    @property
    def dim(self) -> int:
        return self.constants.datum.ambient_dim

    # Basic constructors for vectors of this model

    def zero(self) -> PolyVector:
        return PolyVector.zero(self.nvars, self.wdim)

    def constant(self, index: int = 0) -> PolyVector:
        return PolyVector.basis_vector(self.nvars, self.wdim, (0,) * self.nvars, index)

    def basis(self, degree: int) -> List[PolyVector]:
        return [
            PolyVector.basis_vector(self.nvars, self.wdim, mono, i)
            for mono in monomials(self.nvars, degree)
            for i in range(self.wdim)
        ]

    def weight_of(self, mono: Monomial, index: int = 0) -> Weight:
        total = self.module.weights[index]
        for e, w in zip(mono, self.weights):
            if e:
                total = total + w * e
        return total

    # Decomposition of algebra elements

    def coordinates(self, x: AlgebraElement) -> List[Fraction]:
        """Coordinates of x in p+ on the variable basis"""
        coords = [x.coefficient(r) for r in self.lead_roots]
        rebuilt = AlgebraElement.zero(self.dim)
        for c, u in zip(coords, self.variables):
            rebuilt = rebuilt + u * c
        if rebuilt != x:
            raise UnsupportedModelError(f"{x.render()} is not in the span of the model variables")
        return coords

    def split(self, x: AlgebraElement) -> Tuple[AlgebraElement, AlgebraElement, AlgebraElement]:
        """x = x_k + x_p+ + x_p-"""
        k_terms, plus_terms, minus_terms = [], [], []
        for root, c in x.root_part:
            if root in self.noncompact:
                minus_terms.append((root, c))
            elif -root in self.noncompact:
                plus_terms.append((root, c))
            else:
                k_terms.append((root, c))
        zero = Weight.zero(self.dim)
        return (
            AlgebraElement(x.cartan, tuple(k_terms)),
            AlgebraElement(zero, tuple(plus_terms)),
            AlgebraElement(zero, tuple(minus_terms)),
        )

    def _unit(self, *indices: int) -> Tuple[int, ...]:
        exps = [0] * self.nvars
        for i in indices:
            exps[i] += 1
        return tuple(exps)

    def _compile(self, x: AlgebraElement) -> List[_Term]:
        bracket = self.constants.bracket
        k_part, plus_part, minus_part = self.split(x)
        none = (0,) * self.nvars
        terms: List[_Term] = []
        if not k_part.is_zero():
            terms.append(_Term(Fraction(1), none, None, self.module.matrix(k_part)))
            for i, u in enumerate(self.variables):
                for j, c in enumerate(self.coordinates(bracket(k_part, u))):
                    if c:
                        terms.append(_Term(-c, self._unit(i), j, None))
        if not plus_part.is_zero():
            for j, c in enumerate(self.coordinates(plus_part)):
                if c:
                    terms.append(_Term(-c, none, j, None))
        if not minus_part.is_zero():
            for i, u in enumerate(self.variables):
                k_i = bracket(minus_part, u)
                if k_i.is_zero():
                    continue
                terms.append(_Term(Fraction(1), self._unit(i), None, self.module.matrix(k_i)))
                for l, w in enumerate(self.variables):
                    for j, c in enumerate(self.coordinates(bracket(k_i, w))):
                        if c:
                            terms.append(_Term(-HALF * c, self._unit(i, l), j, None))
        return terms

    def operator(self, x: AlgebraElement) -> List[_Term]:
        if x not in self._operators:
            self._operators[x] = self._compile(x)
        return self._operators[x]

    def act(self, x: AlgebraElement, p: PolyVector) -> PolyVector:
        """x acting on p; raises degree by one on p-, lowers it on p+"""
        if (p.nvars, p.wdim) != (self.nvars, self.wdim):
            raise ValueError("PolyVector does not belong to this model")
        acc: Dict[Monomial, List[Fraction]] = {}
        for term in self.operator(x):
            for mono, vector in p.terms:
                coeff = term.coeff
                if term.derive is not None:
                    e = mono[term.derive]
                    if e == 0:
                        continue
                    coeff = coeff * e
                    mono = shift(mono, term.derive, -1)
                target = tuple(a + b for a, b in zip(mono, term.multiply))
                if term.matrix is not None:
                    values = [sum((a * b for a, b in zip(row, vector)), Fraction(0)) for row in term.matrix]
                else:
                    values = vector
                slot = acc.setdefault(target, [Fraction(0)] * self.wdim)
                for i, v in enumerate(values):
                    slot[i] += coeff * v
        return PolyVector.from_dict(self.nvars, self.wdim, acc)

    def act_word(self, word: Sequence[AlgebraElement], p: PolyVector) -> PolyVector:
        """act(x_1) act(x_2) ... act(x_k) p"""
        for x in reversed(word):
            p = self.act(x, p)
        return p

    def commutator_defect(self, x: AlgebraElement, y: AlgebraElement, p: PolyVector) -> PolyVector:
        """[act(x), act(y)] p - act([x, y]) p"""
        xy = self.act(x, self.act(y, p))
        yx = self.act(y, self.act(x, p))
        return xy - yx - self.act(self.constants.bracket(x, y), p)


def act(action: GAction, x: AlgebraElement, p: PolyVector) -> PolyVector:
    return action.act(x, p)


def _holomorphic_check(pair) -> None:
    if not pair.flags["holomorphic"]:
        raise UnsupportedModelError(
            f"System {pair.selected} of {pair.id} is not holomorphic; no polynomial model on p+"
        )


def g_action(pair, tau) -> GAction:
    """
    Polynomial model of the holomorphic discrete series of G with lowest K-type tau.

    Args:
        pair: symmetric pair whose selected system is holomorphic
        tau: HighestWeight of pair.k_group, or a WModule built by the caller

    Raises:
        UnsupportedModelError: non-holomorphic system or tau outside the supported list
    """
    _holomorphic_check(pair)
    module = tau if isinstance(tau, WModule) else module_from_highest_weight(
        tau if isinstance(tau, HighestWeight) else HighestWeight(tau, pair.k_group)
    )
    positives = sorted(pair.system.noncompact_positives, key=lambda r: r.coords, reverse=True)
    variables = [AlgebraElement.root_vector(-g) for g in positives]
    action = GAction(pair.constants, positives, variables, [-g for g in positives], module, positives)
    logger.debug(f"G-model on {pair.id}: {action.nvars} variables, dim W = {module.dim}")
    return action


def h_action(pair, sigma) -> GAction:
    """
    Polynomial model of the holomorphic discrete series of H with lowest L-type sigma.

    The variables are coordinates on p_h+ in the spanning vectors of split_p;
    sigma is a Weight (scalar L-type), a HighestWeight of pair.l_group or a WModule.
    """
    from branchlab.sympair.pair import split_p

    _holomorphic_check(pair)
    if isinstance(sigma, WModule):
        module = sigma
    elif isinstance(sigma, HighestWeight):
        module = module_from_highest_weight(sigma)
    else:
        module = module_from_highest_weight(HighestWeight(sigma, pair.l_group))
    variables = split_p(pair)["p_h_plus"]
    lead_roots = [_lead_root(u) for u in variables]
    weights = [pair.qu_restrict(-r) for r in lead_roots]
    return GAction(pair.constants, pair.system.noncompact_positives, variables, lead_roots, module, weights)


def _lead_root(u: AlgebraElement) -> Weight:
    for root, c in sorted(u.root_part, key=lambda item: item[0].coords, reverse=True):
        if c == 1:
            return root
    raise ValueError(f"{u.render()} has no unit coefficient")

"""
Holomorphic model of a pair: the G-action on P(p+, W) together with the
coordinates of p_h0+ and the Killing duality between p_h0- and p_h0+.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from branchlab.errors import UnsupportedModelError
from branchlab.holomodel.action import GAction, g_action
from branchlab.holomodel.polyvector import Monomial, PolyVector, linear_forms_power
from branchlab.rootsys.chevalley import AlgebraElement
from branchlab.sympair.pair import SymmetricPairDatum, split_p


@dataclass(frozen=True)
class DualPair:
    """y in p_h0-, the matching u in p_h0+, and the coordinate b = B(y, .)/kappa with b(u) = 1"""
    y: AlgebraElement
    u: AlgebraElement
    form: Dict[int, Fraction]
    kappa: Fraction


class HolomorphicModel:
    """P(p+, W) for a holomorphic pair, with the data the duality maps need"""

    def __init__(self, pair: SymmetricPairDatum, tau):
        if not pair.holomorphic_pair:
            raise UnsupportedModelError(f"Pair {pair.id} is not cataloged as a holomorphic pair")
        self.pair = pair
        self.action: GAction = g_action(pair, tau)
        self.pieces = split_p(pair)
        self.dual_pairs: List[DualPair] = [
            self._dual_pair(y, u) for y, u in zip(self.pieces["p_h0_minus"], self.pieces["p_h0_plus"])
        ]

    def _dual_pair(self, y: AlgebraElement, u: AlgebraElement) -> DualPair:
        # B(e_r, e_-r) = 2/(r.r) for the form with B(h, h') = h . h'
        index = {r: i for i, r in enumerate(self.action.lead_roots)}
        form: Dict[int, Fraction] = {}
        kappa = Fraction(0)
        for root, a in y.root_part:
            weight = Fraction(2) / root.dot(root)
            form[index[-root]] = a * weight
            kappa += a * u.coefficient(-root) * weight
        if kappa == 0:
            raise ArithmeticError(f"Degenerate duality between {y.render()} and {u.render()}")
        return DualPair(y, u, {i: c / kappa for i, c in form.items()}, kappa)

    @property
    def nvars(self) -> int:
        return self.action.nvars

    @property
    def wdim(self) -> int:
        return self.action.wdim

    @property
    def h0_rank(self) -> int:
        return len(self.dual_pairs)

    def act(self, x: AlgebraElement, p: PolyVector) -> PolyVector:
        return self.action.act(x, p)

    def b_monomial(self, exps: Tuple[int, ...], index: int = 0) -> PolyVector:
        """prod_j b_j^exps[j] (x) w_index, expanded in the z-coordinates"""
        poly = linear_forms_power([d.form for d in self.dual_pairs], exps, self.nvars)
        unit = [Fraction(0)] * self.wdim
        data = {}
        for mono, c in poly.items():
            vector = list(unit)
            vector[index] = c
            data[mono] = vector
        return PolyVector.from_dict(self.nvars, self.wdim, data)

    def to_b_coordinates(self, p: PolyVector) -> Dict[Tuple[Monomial, int], Fraction]:
        """
        Coefficients of p on the b-monomials, by restricting p to p_h0+.

        Only meaningful when p depends on the p_h0+ component alone.
        """
        # z_i restricted to sum_j beta_j u_j is sum_j u_j[lead_i] beta_j
        forms = []
        for root in self.action.lead_roots:
            forms.append({j: d.u.coefficient(root) for j, d in enumerate(self.dual_pairs)})
        result: Dict[Tuple[Monomial, int], Fraction] = {}
        for mono, vector in p.terms:
            poly = linear_forms_power(forms, mono, self.h0_rank)
            for beta, c in poly.items():
                for index, value in enumerate(vector):
                    if value:
                        key = (beta, index)
                        result[key] = result.get(key, Fraction(0)) + c * value
        return {k: v for k, v in result.items() if v != 0}


def holomorphic_model(pair: SymmetricPairDatum, tau) -> HolomorphicModel:
    """
    Build the polynomial model of the holomorphic discrete series with lowest K-type tau.

    Raises:
        UnsupportedModelError: pair not holomorphic, or tau outside the supported list
    """
    return HolomorphicModel(pair, tau)

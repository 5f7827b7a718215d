"""
Characters of compact connected groups over exact rationals.

A CompactGroup is described by its positive roots inside the ambient weight
space; any central torus is the orthogonal complement of their span.
"""
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations_with_replacement
from typing import TYPE_CHECKING, Dict, Iterable, List, Mapping, Sequence, Tuple

from loguru import logger

from branchlab.rootsys.cartan import coroot_pairing, dominant_conjugate, reflect, simple_roots_of
from branchlab.rootsys.weight import Weight

if TYPE_CHECKING:
    from branchlab.sympair.pair import SymmetricPairDatum


@dataclass(frozen=True)
class CompactGroup:
    """Compact group given by a name and its positive roots"""
    name: str
    positives: Tuple[Weight, ...]
    dim: int

    @cached_property
    def simple_roots(self) -> Tuple[Weight, ...]:
        return tuple(sorted(simple_roots_of(self.positives), key=lambda r: tuple(-c for c in r.coords)))

    @cached_property
    def rho(self) -> Weight:
        return sum(self.positives, Weight.zero(self.dim)) * Fraction(1, 2)

    @cached_property
    def roots(self) -> Tuple[Weight, ...]:
        return self.positives + tuple(-r for r in self.positives)

    def is_dominant(self, mu: Weight) -> bool:
        return all(coroot_pairing(mu, alpha) >= 0 for alpha in self.simple_roots)

    def is_integral(self, mu: Weight) -> bool:
        return all(coroot_pairing(mu, alpha).denominator == 1 for alpha in self.simple_roots)

    def dominant_conjugate(self, mu: Weight) -> Weight:
        return dominant_conjugate(mu, self.simple_roots)

    def labels(self, mu: Weight) -> Tuple[Fraction, ...]:
        """Dynkin labels of mu with respect to the simple roots"""
        return tuple(coroot_pairing(mu, alpha) for alpha in self.simple_roots)


@dataclass(frozen=True)
class HighestWeight:
    """Dominant integral weight of a compact group"""
    weight: Weight
    group: CompactGroup

    def __post_init__(self):
        if not self.group.is_integral(self.weight):
            raise ValueError(f"{self.weight.render()} is not integral for {self.group.name}")
        if not self.group.is_dominant(self.weight):
            raise ValueError(f"{self.weight.render()} is not dominant for {self.group.name}")

    def render(self) -> str:
        return self.weight.render()


@dataclass(frozen=True)
class WeightMultiset:
    """Finite weight multiset with positive multiplicities"""
    items: Tuple[Tuple[Weight, int], ...]

    def __post_init__(self):
        merged: Counter = Counter()
        for weight, mult in self.items:
            merged[weight] += mult
        if any(mult < 0 for mult in merged.values()):
            raise ValueError("Weight multiset with negative multiplicity")
        items = tuple(sorted(((w, m) for w, m in merged.items() if m > 0), key=lambda item: item[0].coords))
        object.__setattr__(self, "items", items)

    @classmethod
    def of(cls, counts: Mapping[Weight, int]) -> "WeightMultiset":
        return cls(tuple(counts.items()))

    def as_counter(self) -> Counter:
        return Counter(dict(self.items))

    def multiplicity(self, weight: Weight) -> int:
        return dict(self.items).get(weight, 0)

    def total(self) -> int:
        return sum(mult for _, mult in self.items)

    def support(self) -> List[Weight]:
        return [w for w, _ in self.items]

    def __len__(self) -> int:
        return len(self.items)


@dataclass(frozen=True)
class IrrepDecomposition:
    """Multiplicities of irreducible constituents"""
    parts: Tuple[Tuple[HighestWeight, int], ...]

    def multiplicity(self, weight: Weight) -> int:
        for hw, mult in self.parts:
            if hw.weight == weight:
                return mult
        return 0

    def total_dim(self) -> int:
        return sum(mult * irrep_dim(hw) for hw, mult in self.parts)

    def as_dict(self) -> Dict[Weight, int]:
        return {hw.weight: mult for hw, mult in self.parts}

    def highest_weights(self) -> List[Weight]:
        return [hw.weight for hw, _ in self.parts]


def irrep_dim(hw: HighestWeight) -> int:
    """Weyl dimension formula"""
    group = hw.group
    shifted = hw.weight + group.rho
    numerator = Fraction(1)
    for alpha in group.positives:
        numerator *= shifted.dot(alpha) / group.rho.dot(alpha)
    if numerator.denominator != 1:
        raise ArithmeticError(f"Non-integral dimension for {hw.render()}: {numerator}")
    return int(numerator)


def _dominant_weights_below(hw: HighestWeight) -> List[Weight]:
    """Dominant weights of the irreducible module, by closing the highest weight under root strings"""
    group = hw.group
    seen = {hw.weight}
    stack = [hw.weight]
    while stack:
        mu = stack.pop()
        for alpha in group.positives:
            k = coroot_pairing(mu, alpha)
            step = -alpha if k > 0 else alpha
            for j in range(1, int(abs(k)) + 1):
                nu = mu + step * j
                if nu not in seen:
                    seen.add(nu)
                    stack.append(nu)
    return [mu for mu in seen if group.is_dominant(mu)]


def _orbit(mu: Weight, simple_roots: Sequence[Weight]) -> List[Weight]:
    orbit = {mu}
    stack = [mu]
    while stack:
        current = stack.pop()
        for alpha in simple_roots:
            image = reflect(current, alpha)
            if image not in orbit:
                orbit.add(image)
                stack.append(image)
    return list(orbit)


@lru_cache(maxsize=None)
def weight_multiplicities(hw: HighestWeight) -> WeightMultiset:
    """
    Full character of an irreducible module via Freudenthal's recursion.

    Args:
        hw: dominant integral highest weight

    Returns:
        WeightMultiset whose total equals irrep_dim(hw)
    """
    group = hw.group
    lam = hw.weight
    if not group.positives:
        return WeightMultiset(((lam, 1),))
    rho = group.rho
    dominant = _dominant_weights_below(hw)
    dominant.sort(key=lambda mu: -mu.dot(rho))
    dominant_set = set(dominant)
    norm_top = (lam + rho).dot(lam + rho)
    mult: Dict[Weight, int] = {}

    def lookup(nu: Weight) -> int:
        conj = group.dominant_conjugate(nu)
        return mult.get(conj, 0) if conj in dominant_set else 0

    for mu in dominant:
        if mu == lam:
            mult[mu] = 1
            continue
        total = Fraction(0)
        for alpha in group.positives:
            k = 1
            while True:
                nu = mu + alpha * k
                m = lookup(nu)
                if m == 0 and group.dominant_conjugate(nu) not in dominant_set:
                    break
                total += m * nu.dot(alpha)
                k += 1
        denom = norm_top - (mu + rho).dot(mu + rho)
        value = 2 * total / denom
        if value.denominator != 1:
            raise ArithmeticError(f"Freudenthal produced {value} at {mu.render()}")
        mult[mu] = int(value)

    counts: Counter = Counter()
    for mu, m in mult.items():
        if m:
            for nu in _orbit(mu, group.simple_roots):
                counts[nu] = m
    return WeightMultiset.of(counts)


def character(hw: HighestWeight) -> Counter:
    return weight_multiplicities(hw).as_counter()


def decompose(char: Mapping[Weight, int], group: CompactGroup) -> IrrepDecomposition:
    """
    Decompose a virtual-free character by repeated removal of a highest term.

    Raises:
        ArithmeticError: if the character is not a sum of irreducible characters
    """
    remaining = Counter({w: m for w, m in char.items() if m})
    parts: List[Tuple[HighestWeight, int]] = []
    rho = group.rho
    while remaining:
        candidates = [w for w, m in remaining.items() if m and group.is_dominant(w)]
        if not candidates:
            raise ArithmeticError(f"Character over {group.name} has no dominant weight left")
        top = max(candidates, key=lambda w: (w.dot(rho), w.coords))
        m = remaining[top]
        if m < 0:
            raise ArithmeticError(f"Negative leading multiplicity {m} at {top.render()} over {group.name}")
        hw = HighestWeight(top, group)
        parts.append((hw, m))
        for w, k in weight_multiplicities(hw).items:
            remaining[w] -= m * k
            if remaining[w] == 0:
                del remaining[w]
    parts.sort(key=lambda item: item[0].weight.coords)
    logger.debug(f"Decomposed character over {group.name} into {len(parts)} irreducibles")
    return IrrepDecomposition(tuple(parts))


def tensor_character(a: Mapping[Weight, int], b: Mapping[Weight, int]) -> Counter:
    product: Counter = Counter()
    for wa, ma in a.items():
        for wb, mb in b.items():
            product[wa + wb] += ma * mb
    return product


def tensor_decompose(a: HighestWeight, b: HighestWeight) -> IrrepDecomposition:
    """Decompose a ⊗ b over their common group"""
    if a.group != b.group:
        raise ValueError(f"Cannot tensor modules of {a.group.name} and {b.group.name}")
    return decompose(tensor_character(character(a), character(b)), a.group)


def symmetric_power_character(weights: Sequence[Weight], degree: int, dim: int) -> Counter:
    """Character of S^degree of the module whose weights (with repetition) are given"""
    counts: Counter = Counter()
    if degree == 0:
        counts[Weight.zero(dim)] = 1
        return counts
    for combo in combinations_with_replacement(range(len(weights)), degree):
        total = Weight.zero(dim)
        for index in combo:
            total = total + weights[index]
        counts[total] += 1
    return counts


def restrict_character(char: Mapping[Weight, int], projection) -> Counter:
    restricted: Counter = Counter()
    for weight, mult in char.items():
        restricted[projection(weight)] += mult
    return restricted


def restrict_decompose(hw: HighestWeight, pair: "SymmetricPairDatum") -> IrrepDecomposition:
    """
    Decompose the restriction of a K-type of the pair to L.

    Args:
        hw: highest weight dominant for the compact group K of the pair
        pair: symmetric pair supplying q_u and L
    """
    if hw.group != pair.k_group:
        raise ValueError(f"{hw.render()} is not a highest weight of {pair.k_group.name}")
    return decompose(restrict_character(character(hw), pair.qu_restrict), pair.l_group)


def trivial_group(dim: int, name: str = "torus") -> CompactGroup:
    return CompactGroup(name, (), dim)


def group_from_roots(name: str, roots: Iterable[Weight], chamber: Weight) -> CompactGroup:
    """Compact group whose positive roots are the given roots on the positive side of chamber"""
    positives = tuple(sorted((r for r in roots if r.dot(chamber) > 0), key=lambda r: r.coords))
    return CompactGroup(name, positives, chamber.dim)

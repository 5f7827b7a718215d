"""
Vector partition functions over a finite set of roots
"""
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Optional, Sequence, Tuple

from branchlab.rootsys.weight import Weight


class PartitionFunction:
    """
    Number of ways to write a weight as a nonnegative integer combination of
    a fixed list of roots.

    The roots must lie in an open half-space; the direction functional of that
    half-space bounds the recursion. Counts are memoized per instance.
    """

    def __init__(self, roots: Sequence[Weight], direction: Optional[Weight] = None):
        if any(r.is_zero() for r in roots):
            raise ValueError("Partition function roots must be nonzero")
        self.roots: Tuple[Weight, ...] = tuple(sorted(set(roots), key=lambda r: r.coords))
        if direction is None and self.roots:
            direction = sum(self.roots, Weight.zero(self.roots[0].dim))
        self.direction = direction
        for root in self.roots:
            if root.dot(direction) <= 0:
                raise ValueError(f"Roots do not lie in an open half-space: {root.render()} pairs to {root.dot(direction)}")
        self._count = lru_cache(maxsize=None)(self._count_from)
        self._min_parts = lru_cache(maxsize=None)(self._min_parts_from)

    def __call__(self, mu: Weight) -> int:
        if not self.roots:
            return 1 if mu.is_zero() else 0
        return self._count(mu, 0)

    def _count_from(self, mu: Weight, index: int) -> int:
        if index == len(self.roots):
            return 1 if mu.is_zero() else 0
        if mu.dot(self.direction) < 0:
            return 0
        root = self.roots[index]
        total = 0
        current = mu
        while current.dot(self.direction) >= 0:
            total += self._count(current, index + 1)
            current = current - root
        return total

    def min_parts(self, mu: Weight) -> Optional[int]:
        """Least number of roots summing to mu, or None when mu is unreachable"""
        if not self.roots:
            return 0 if mu.is_zero() else None
        return self._min_parts(mu, 0)

    def _min_parts_from(self, mu: Weight, index: int) -> Optional[int]:
        if index == len(self.roots):
            return 0 if mu.is_zero() else None
        if mu.dot(self.direction) < 0:
            return None
        root = self.roots[index]
        best = None
        current = mu
        k = 0
        while current.dot(self.direction) >= 0:
            rest = self._min_parts(current, index + 1)
            if rest is not None and (best is None or rest + k < best):
                best = rest + k
            current = current - root
            k += 1
        return best

    def degree_bound(self, mu: Weight) -> Fraction:
        """Upper bound on the number of parts, from the direction functional"""
        smallest = min(r.dot(self.direction) for r in self.roots)
        return mu.dot(self.direction) / smallest


def kostant_partition(mu: Weight, roots: Sequence[Weight], direction: Optional[Weight] = None) -> int:
    """
    Count nonnegative integer combinations of roots equal to mu.

    Args:
        mu: target weight
        roots: nonzero roots lying in an open half-space
        direction: functional positive on every root (defaults to their sum)

    Returns:
        The count; 0 when mu is unreachable
    """
    return PartitionFunction(roots, direction)(mu)


def brute_force_partition(mu: Weight, roots: Sequence[Weight], max_parts: int) -> int:
    """Enumeration oracle: count coefficient vectors with entries up to max_parts"""
    roots = list(dict.fromkeys(roots))
    count = 0
    for coeffs in product(range(max_parts + 1), repeat=len(roots)):
        if sum(coeffs) > max_parts:
            continue
        total = Weight.zero(mu.dim)
        for c, root in zip(coeffs, roots):
            if c:
                total = total + root * c
        if total == mu:
            count += 1
    return count

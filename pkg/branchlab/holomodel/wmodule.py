"""
Explicit finite-dimensional modules (tau, W) of the compact part
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Dict, Iterable, List, Sequence, Tuple

from branchlab.compactrep.characters import HighestWeight
from branchlab.errors import UnsupportedModelError
from branchlab.rootsys.cartan import coroot_pairing
from branchlab.rootsys.chevalley import AlgebraElement
from branchlab.rootsys.weight import Weight

Matrix = Tuple[Tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class WModule:
    """
    Weight basis of W with matrices for the compact root vectors.

    The Cartan part acts diagonally through the weights; a root vector absent
    from root_matrices acts by zero, which is only allowed for scalar modules.
    """
    weights: Tuple[Weight, ...]
    root_matrices: Dict[Weight, Matrix] = field(default_factory=dict)
    scalar: bool = False

    @property
    def dim(self) -> int:
        return len(self.weights)

    @classmethod
    def character(cls, weight: Weight, compact_roots: Iterable[Weight] = ()) -> "WModule":
        """One-dimensional module; weight must vanish on every compact coroot"""
        for root in compact_roots:
            if coroot_pairing(weight, root) != 0:
                raise UnsupportedModelError(
                    f"{weight.render()} is not a character: pairs to {coroot_pairing(weight, root)} with {root.render()}"
                )
        return cls((weight,), {}, True)

    def act_vector(self, x: AlgebraElement, vector: Sequence[Fraction]) -> Tuple[Fraction, ...]:
        """tau(x) applied to a coordinate vector"""
        out = [x.cartan.dot(w) * c for w, c in zip(self.weights, vector)]
        for root, coeff in x.root_part:
            matrix = self.root_matrices.get(root)
            if matrix is None:
                if self.scalar:
                    continue
                raise UnsupportedModelError(f"No matrix for root vector {root.render()} on this module")
            for i, row in enumerate(matrix):
                out[i] += coeff * sum((a * b for a, b in zip(row, vector)), Fraction(0))
        return tuple(out)

    def matrix(self, x: AlgebraElement) -> Matrix:
        columns = []
        for j in range(self.dim):
            unit = tuple(Fraction(1) if i == j else Fraction(0) for i in range(self.dim))
            columns.append(self.act_vector(x, unit))
        return tuple(tuple(columns[j][i] for j in range(self.dim)) for i in range(self.dim))


def _strongly_orthogonal(roots: Sequence[Weight]) -> bool:
    root_set = set(roots) | {-r for r in roots}
    for i, r in enumerate(roots):
        for s in roots[i + 1:]:
            if r.dot(s) != 0 or r + s in root_set or r - s in root_set:
                return False
    return True


def module_from_highest_weight(hw: HighestWeight) -> WModule:
    """
    Irreducible module of the compact group of hw.

    Scalar when hw vanishes on the compact coroots; otherwise the compact
    positive roots must be strongly orthogonal (a product of A1 factors) and W
    is the tensor product of symmetric powers S^{a_i} with
    e v_j = j(a - j + 1) v_{j-1}, f v_j = v_{j+1}, h v_j = (a - 2j) v_j.

    Raises:
        UnsupportedModelError: compact roots outside a product of A1 factors
    """
    positives = list(hw.group.positives)
    labels = [coroot_pairing(hw.weight, r) for r in positives]
    if all(a == 0 for a in labels):
        return WModule.character(hw.weight, positives)
    roots = positives
    if not _strongly_orthogonal(roots):
        raise UnsupportedModelError(f"{hw.group.name} is not a product of A1 factors; only scalar tau is supported")
    sizes = [int(a) for a in labels]
    basis: List[Tuple[int, ...]] = list(product(*(range(a + 1) for a in sizes)))
    index = {b: i for i, b in enumerate(basis)}
    weights = tuple(
        hw.weight - sum((r * j for r, j in zip(roots, b)), Weight.zero(hw.weight.dim)) for b in basis
    )
    matrices: Dict[Weight, Matrix] = {}
    n = len(basis)
    for k, (root, a) in enumerate(zip(roots, sizes)):
        raise_rows = [[Fraction(0)] * n for _ in range(n)]
        lower_rows = [[Fraction(0)] * n for _ in range(n)]
        for b, col in index.items():
            j = b[k]
            if j > 0:
                target = b[:k] + (j - 1,) + b[k + 1:]
                raise_rows[index[target]][col] = Fraction(j * (a - j + 1))
            if j < a:
                target = b[:k] + (j + 1,) + b[k + 1:]
                lower_rows[index[target]][col] = Fraction(1)
        matrices[root] = tuple(tuple(row) for row in raise_rows)
        matrices[-root] = tuple(tuple(row) for row in lower_rows)
    return WModule(weights, matrices, False)

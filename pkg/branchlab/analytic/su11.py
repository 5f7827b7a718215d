"""
SU(1,1) elements, scalar cocycles and the refined Cartan factorization of SU(1,1) x SU(1,1)
"""
from dataclasses import dataclass
from math import factorial
from typing import Tuple

import numpy as np
from loguru import logger

from branchlab.holomodel.inner import pochhammer

UNIMODULAR_TOLERANCE = 1e-12
FACTOR_TOLERANCE = 1e-10


@dataclass(frozen=True)
class Su11Element:
    """[[alpha, beta], [conj(beta), conj(alpha)]] with |alpha|^2 - |beta|^2 = 1"""
    alpha: complex
    beta: complex

    def __post_init__(self):
        det = abs(self.alpha) ** 2 - abs(self.beta) ** 2
        if abs(det - 1) > UNIMODULAR_TOLERANCE:
            raise ValueError(f"Not in SU(1,1): |alpha|^2 - |beta|^2 = {det!r}")

    @classmethod
    def identity(cls) -> "Su11Element":
        return cls(1 + 0j, 0j)

    @classmethod
    def from_matrix(cls, matrix: np.ndarray) -> "Su11Element":
        return cls(complex(matrix[0, 0]), complex(matrix[0, 1]))

    @classmethod
    def boost(cls, a: complex) -> "Su11Element":
        """exp([[0, a], [conj(a), 0]]) = cosh|a| I + sinh|a|/|a| [[0, a], [conj(a), 0]]"""
        r = abs(a)
        if r == 0:
            return cls.identity()
        return cls(complex(np.cosh(r)), complex(np.sinh(r) / r * a))

    @classmethod
    def torus(cls, phi: float) -> "Su11Element":
        """diag(e^{i phi}, e^{-i phi})"""
        return cls(complex(np.exp(1j * phi)), 0j)

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.alpha, self.beta], [np.conj(self.beta), np.conj(self.alpha)]], dtype=complex)

    def __matmul__(self, other: "Su11Element") -> "Su11Element":
        return Su11Element.from_matrix(self.matrix @ other.matrix)

    def inverse(self) -> "Su11Element":
        return Su11Element(complex(np.conj(self.alpha)), -self.beta)

    def act(self, z: complex) -> complex:
        """Moebius action g.z = (alpha z + beta) / (conj(beta) z + conj(alpha))"""
        _check_disc(z)
        return (self.alpha * z + self.beta) / (np.conj(self.beta) * z + np.conj(self.alpha))

    def origin_image(self) -> complex:
        return self.beta / np.conj(self.alpha)

    def distance(self, other: "Su11Element") -> float:
        return float(np.max(np.abs(self.matrix - other.matrix)))


def _check_disc(z: complex):
    if abs(z) >= 1:
        raise ValueError(f"Point {z} is outside the unit disc")


def cocycle(lam: int, g: Su11Element, z: complex) -> complex:
    """
    Scalar cocycle c(g, z) = (conj(beta) z + conj(alpha))^(-lam).

    Satisfies c(ab, z) = c(a, b.z) c(b, z).

    Raises:
        ValueError: |z| >= 1
    """
    _check_disc(z)
    return complex((np.conj(g.beta) * z + np.conj(g.alpha)) ** (-lam))


def disc_kernel(lam: int, z: complex, w: complex) -> complex:
    """Reproducing kernel (1 - z conj(w))^(-lam) of the weighted Bergman space, K(0, 0) = 1"""
    _check_disc(z)
    _check_disc(w)
    return complex((1 - z * np.conj(w)) ** (-lam))


def group_kernel(lam: int, x: Su11Element, h: Su11Element) -> complex:
    """Kernel of the group model: c(x, 0) K(x.o, h.o) conj(c(h, 0))"""
    return (cocycle(lam, x, 0j) * disc_kernel(lam, x.origin_image(), h.origin_image())
            * np.conj(cocycle(lam, h, 0j)))


def torus_factor(lam: int, phi: float) -> complex:
    """F(g diag(e^{i phi}, e^{-i phi})) = e^{i lam phi} F(g) on the group model of weight lam"""
    return complex(np.exp(1j * lam * phi))


def evaluate_vs(lam: int, s: int, g: Su11Element) -> complex:
    """v_s(g) = (lam)_s conj(alpha)^(-lam - s) beta^s"""
    scale = float(pochhammer(lam, s))
    return complex(scale * np.conj(g.alpha) ** (-lam - s) * g.beta ** s)


def vs_norm_squared(lam: int, s: int) -> float:
    """||v_s||^2 = (lam)_s s! (v_s corresponds to (lam)_s z^s)"""
    return float(pochhammer(lam, s) * factorial(s))


def disc_norm_squared(lam: int, coefficients, radial: int = 64, angular: int = 128) -> float:
    """
    Squared norm of a polynomial on the disc with the measure
    (lam - 1)/pi (1 - |z|^2)^(lam - 2) dA, by Gauss-Legendre in r and the
    trapezoidal rule in the angle (exact for polynomials of moderate degree).

    Args:
        lam: integer >= 2
        coefficients: coefficients of 1, z, z^2, ...
    """
    if lam < 2:
        raise ValueError(f"Disc measure needs lam >= 2, got {lam}")
    nodes, weights = np.polynomial.legendre.leggauss(radial)
    r = (nodes + 1) / 2
    wr = weights / 2
    theta = 2 * np.pi * np.arange(angular) / angular
    z = r[:, None] * np.exp(1j * theta)[None, :]
    values = np.polynomial.polynomial.polyval(z, np.asarray(coefficients, dtype=complex))
    density = (lam - 1) / np.pi * (1 - r ** 2) ** (lam - 2) * r
    angular_mean = np.mean(np.abs(values) ** 2, axis=1) * 2 * np.pi
    return float(np.sum(wr * density * angular_mean))


GroupPair = Tuple[Su11Element, Su11Element]


def pair_product(x: GroupPair, y: GroupPair) -> GroupPair:
    return x[0] @ y[0], x[1] @ y[1]


def x1(a: complex) -> GroupPair:
    """exp of (X_a, X_a): the exp(h cap p) factor"""
    g = Su11Element.boost(a)
    return g, g


def x2(b: complex) -> GroupPair:
    """exp of (X_b, -X_b): the exp(h0 cap p) factor"""
    return Su11Element.boost(b), Su11Element.boost(-b)


def k_element(phi1: float, phi2: float) -> GroupPair:
    return Su11Element.torus(phi1), Su11Element.torus(phi2)


@dataclass(frozen=True)
class RefinedFactorization:
    """x = x1(a) x2(b) k with k = (diag(e^{i phi1}, .), diag(e^{i phi2}, .))"""
    a: complex
    b: complex
    phi1: float
    phi2: float
    residual: float

    def compose(self) -> GroupPair:
        return pair_product(pair_product(x1(self.a), x2(self.b)), k_element(self.phi1, self.phi2))


def _boost_parameter(point: complex) -> complex:
    """a with exp(X_a).0 = point: tanh|a| a/|a| = point"""
    r = abs(point)
    if r == 0:
        return 0j
    return complex(np.arctanh(r) * point / r)


def _midpoint(z1: complex, z2: complex) -> complex:
    """Hyperbolic midpoint of two disc points"""
    zeta = (z2 - z1) / (1 - np.conj(z1) * z2)
    r = abs(zeta)
    if r == 0:
        return z1
    m0 = np.tanh(np.arctanh(r) / 2) * zeta / r
    return complex((m0 + z1) / (1 + np.conj(z1) * m0))


def refined_cartan_factor(x: GroupPair) -> RefinedFactorization:
    """
    Solve x = x1(a) x2(b) k in SU(1,1) x SU(1,1).

    exp(X_a) sends the pair (w, -w) to (g1.0, g2.0), so exp(X_a).0 is the
    hyperbolic midpoint of g1.0 and g2.0 and w = exp(-X_a).(g1.0) = exp(X_b).0.
    The torus part is what remains.
    """
    g1, g2 = x
    a = _boost_parameter(_midpoint(g1.origin_image(), g2.origin_image()))
    w = Su11Element.boost(-a).act(g1.origin_image())
    b = _boost_parameter(w)
    first, second = pair_product(x1(a), x2(b))
    t1 = (first.inverse() @ g1).alpha
    t2 = (second.inverse() @ g2).alpha
    factorization = RefinedFactorization(a, b, float(np.angle(t1)), float(np.angle(t2)), 0.0)
    rebuilt = factorization.compose()
    residual = max(rebuilt[0].distance(g1), rebuilt[1].distance(g2))
    if residual > FACTOR_TOLERANCE:
        logger.warning(f"Refined Cartan factorization residual {residual:.3e} exceeds {FACTOR_TOLERANCE}")
    return RefinedFactorization(a, b, factorization.phi1, factorization.phi2, residual)


def random_disc_point(rng: np.random.Generator, radius: float) -> complex:
    return complex(radius * np.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform()))


def random_pair(rng: np.random.Generator, radius: float) -> GroupPair:
    """x1(a) x2(b) k with |a|, |b| <= radius"""
    a, b = random_disc_point(rng, radius), random_disc_point(rng, radius)
    phi1, phi2 = rng.uniform(-np.pi, np.pi, size=2)
    return pair_product(pair_product(x1(a), x2(b)), k_element(float(phi1), float(phi2)))


def random_element(rng: np.random.Generator, radius: float) -> Su11Element:
    return Su11Element.boost(random_disc_point(rng, radius)) @ Su11Element.torus(float(rng.uniform(-np.pi, np.pi)))

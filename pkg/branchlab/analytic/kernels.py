"""
Truncated reproducing-kernel series for the diagonal SU(1,1) in SU(1,1) x SU(1,1)
"""
from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import List, Tuple

import numpy as np

from branchlab.analytic.su11 import (
    GroupPair,
    Su11Element,
    cocycle,
    disc_kernel,
    evaluate_vs,
    group_kernel,
    refined_cartan_factor,
    torus_factor,
    vs_norm_squared,
    x2,
)
from branchlab.holomodel.phi import phi_coefficients, vs_scale

DiscPair = Tuple[complex, complex]


def tail_estimate(mu: int, truncation: int, r: float) -> float:
    """Bound for sum_{k >= N} (mu)_k/k! r^k: C(N + mu - 1, mu - 1) r^N / (1 - r)^mu"""
    if r >= 1:
        return float("inf")
    return comb(truncation + mu - 1, mu - 1) * r ** truncation / (1 - r) ** mu


def raise_operator(coefficients: np.ndarray, lam: int, lam2: int) -> np.ndarray:
    """
    Diagonal raising operator on polynomials in (z1, z2):
    z1^a z2^b -> (lam + a) z1^(a+1) z2^b + (lam2 + b) z1^a z2^(b+1)
    """
    rows, cols = coefficients.shape
    a = np.arange(rows)[:, None]
    b = np.arange(cols)[None, :]
    result = np.zeros((rows + 1, cols + 1), dtype=complex)
    result[1:, :-1] += (lam + a) * coefficients
    result[:-1, 1:] += (lam2 + b) * coefficients
    return result


@dataclass(frozen=True)
class TruncatedKernel:
    """
    Kernels attached to the holographic operator of degree n from V_sigma
    (weight mu = lam + lam2 + 2n) into V_tau (weights lam, lam2), truncated
    at N terms.
    """
    lam: int
    lam2: int
    n: int
    truncation: int

    def __post_init__(self):
        if self.lam < 2 or self.lam2 < 2 or self.n < 0 or self.truncation < 1:
            raise ValueError(f"Kernel needs lam, lam2 >= 2, n >= 0, N >= 1, got "
                             f"({self.lam}, {self.lam2}, {self.n}, {self.truncation})")

    @cached_property
    def coefficients(self) -> List[Tuple[int, float]]:
        return [(s, float(c)) for s, c in phi_coefficients(self.lam, self.lam2, self.n).items()]

    @property
    def mu(self) -> int:
        return self.lam + self.lam2 + 2 * self.n

    # Group model

    def chi(self, phi1: float, phi2: float) -> complex:
        """Right-translation factor of V_tau under k = (diag(e^{i phi1}, .), diag(e^{i phi2}, .))"""
        return torus_factor(self.lam, phi1) * torus_factor(self.lam2, phi2)

    def phi_vector(self, x: GroupPair) -> complex:
        """The lowest L-type vector sum_s c_s v_s (x) v'_{n-s}, evaluated at x"""
        g1, g2 = x
        return sum(c * evaluate_vs(self.lam, s, g1) * evaluate_vs(self.lam2, self.n - s, g2)
                   for s, c in self.coefficients)

    def sigma_series(self, x: Su11Element, h: Su11Element) -> complex:
        """sum_{k < N} u_k(x) conj(u_k(h)) over the orthonormal basis u_k = v_k / ||v_k|| of V_sigma"""
        total = 0j
        for k in range(self.truncation):
            total += evaluate_vs(self.mu, k, x) * np.conj(evaluate_vs(self.mu, k, h)) / vs_norm_squared(self.mu, k)
        return total

    def sigma_closed(self, x: Su11Element, h: Su11Element) -> complex:
        return group_kernel(self.mu, x, h)

    def sigma_tail(self, x: Su11Element, h: Su11Element) -> float:
        return tail_estimate(self.mu, self.truncation, abs(x.origin_image()) * abs(h.origin_image()))

    def tphi_series(self, h: Su11Element, x: GroupPair) -> complex:
        """
        Kernel of T_Phi: sum_k T_Phi(u_k)(x) conj(u_k(h)) where
        T_Phi(f)(x1 x2 k) = chi(k) f(x1) Phi(x2).
        """
        factor = refined_cartan_factor(x)
        return (self.chi(factor.phi1, factor.phi2) * self.phi_vector(x2(factor.b))
                * self.sigma_series(Su11Element.boost(factor.a), h))

    # Bounded-domain model

    def phi_disc(self, z: DiscPair) -> complex:
        """Phi in the polynomial model: sum_s c_s (lam)_s (lam2)_{n-s} z1^s z2^(n-s)"""
        z1, z2 = z
        return sum(c * float(vs_scale(self.lam, s) * vs_scale(self.lam2, self.n - s)) * z1 ** s * z2 ** (self.n - s)
                   for s, c in self.coefficients)

    @cached_property
    def raised_phi(self) -> List[np.ndarray]:
        """E^k Phi / k! for k < N as coefficient arrays in (z1, z2)"""
        start = np.zeros((self.n + 1, self.n + 1), dtype=complex)
        for s, c in self.coefficients:
            start[s, self.n - s] = c * float(vs_scale(self.lam, s) * vs_scale(self.lam2, self.n - s))
        terms = [start]
        for k in range(1, self.truncation):
            terms.append(raise_operator(terms[-1], self.lam, self.lam2) / k)
        return terms

    def tau_kernel(self, z: DiscPair, w: DiscPair) -> complex:
        return disc_kernel(self.lam, z[0], w[0]) * disc_kernel(self.lam2, z[1], w[1])

    def holographic_series(self, w: complex, z: DiscPair) -> complex:
        """K_T(w, z) = sum_k T(e_k)(z) conj(e_k(w)) = sum_k conj(w)^k (E^k Phi / k!)(z)"""
        total = 0j
        wbar = np.conj(w)
        for k, coefficients in enumerate(self.raised_phi):
            total += wbar ** k * np.polynomial.polynomial.polyval2d(z[0], z[1], coefficients)
        return complex(total)

    def holographic_closed(self, w: complex, z: DiscPair) -> complex:
        """K_tau(z, (w, w)) Phi(P2((exp(-conj w) exp z)_+)) with (exp(-conj w) exp z)_+ = z/(1 - conj(w) z)"""
        u1, u2 = (zi / (1 - np.conj(w) * zi) for zi in z)
        d = (u1 - u2) / 2
        return self.tau_kernel(z, (w, w)) * self.phi_disc((d, -d))

    def holographic_tail(self, w: complex, z: DiscPair) -> float:
        return tail_estimate(self.mu, self.truncation, abs(w) * max(abs(z[0]), abs(z[1])))

    def holomorphic_group_kernel(self, h: Su11Element, x: GroupPair) -> complex:
        """Group-model kernel of the holomorphic holographic operator: c_tau(x, 0) K_T(h.o, x.o) conj(c_sigma(h, 0))"""
        g1, g2 = x
        c_tau = cocycle(self.lam, g1, 0j) * cocycle(self.lam2, g2, 0j)
        value = self.holographic_closed(h.origin_image(), (g1.origin_image(), g2.origin_image()))
        return c_tau * value * np.conj(cocycle(self.mu, h, 0j))

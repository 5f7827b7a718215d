"""
Numerical checks of kernel identities, reported as ResidualReportModel
"""
from typing import Callable, List, Optional

import numpy as np
from loguru import logger

from branchlab.analytic.kernels import TruncatedKernel
from branchlab.analytic.su11 import (
    Su11Element,
    cocycle,
    disc_kernel,
    disc_norm_squared,
    evaluate_vs,
    group_kernel,
    k_element,
    pair_product,
    random_disc_point,
    random_element,
    refined_cartan_factor,
    vs_norm_squared,
    x1,
    x2,
)
from branchlab.config import settings
from branchlab.holomodel.inner import pochhammer
from branchlab.models import ResidualReportModel


def relative_residual(lhs: complex, rhs: complex) -> float:
    """|lhs - rhs| relative to max(|lhs|, |rhs|, 1): relative for large values, absolute near zero"""
    return float(abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1.0))


class CheckRun:
    """Shared bookkeeping of one sampled check"""

    def __init__(self, check: str, lam: int, lam2: int, n: int, truncation: Optional[int],
                 samples: Optional[int], seed: Optional[int], tolerance: Optional[float]):
        self.check = check
        self.lam, self.lam2, self.n = lam, lam2, n
        self.truncation = settings.kernel_truncation if truncation is None else truncation
        self.samples = settings.kernel_samples if samples is None else samples
        self.seed = settings.kernel_seed if seed is None else seed
        self.tolerance = settings.kernel_tolerance if tolerance is None else tolerance
        self.radius = settings.sample_radius
        self.rng = np.random.default_rng(self.seed)
        self.residuals: List[float] = []
        self.tail = 0.0
        self.informational: Optional[float] = None

    def record(self, lhs: complex, rhs: complex, tail: float = 0.0):
        self.residuals.append(relative_residual(lhs, rhs))
        self.tail = max(self.tail, tail)

    def inform(self, lhs: complex, rhs: complex):
        value = relative_residual(lhs, rhs)
        self.informational = value if self.informational is None else max(self.informational, value)

    def report(self) -> ResidualReportModel:
        max_residual = max(self.residuals, default=0.0)
        passed = max_residual < self.tolerance
        if self.tail > self.tolerance:
            logger.warning(f"{self.check}: tail estimate {self.tail:.3e} exceeds tolerance {self.tolerance:.1e}; "
                           f"raise the truncation above {self.truncation}")
        log = logger.info if passed else logger.warning
        log(f"{self.check} (lam={self.lam}, lam2={self.lam2}, n={self.n}, N={self.truncation}): "
            f"max residual {max_residual:.3e}")
        return ResidualReportModel(
            check=self.check,
            lam=self.lam,
            lam2=self.lam2,
            n=self.n,
            truncation=self.truncation,
            seed=self.seed,
            samples=len(self.residuals),
            residuals=self.residuals,
            max_residual=max_residual,
            tail_estimate=self.tail,
            tolerance=self.tolerance,
            passed=passed,
            informational=self.informational,
        )


def check_separation_formula(lam: int, lam2: int, n: int, samples: Optional[int] = None,
                             truncation: Optional[int] = None, seed: Optional[int] = None,
                             tolerance: Optional[float] = None) -> ResidualReportModel:
    """
    K_T(h, x1 x2 k) = chi(k) K_T(e, x2) K_sigma(h, x1) for the kernel of T_Phi.

    The left side is the truncated series over an orthonormal basis of V_sigma,
    evaluated after factoring x; the right side uses the closed kernels at the
    sampled factors. The deviation from the holomorphic holographic kernel is
    carried as information.
    """
    run = CheckRun("separation", lam, lam2, n, truncation, samples, seed, tolerance)
    kernel = TruncatedKernel(lam, lam2, n, run.truncation)
    identity = Su11Element.identity()
    for _ in range(run.samples):
        a, b = random_disc_point(run.rng, run.radius), random_disc_point(run.rng, run.radius)
        phi1, phi2 = (float(t) for t in run.rng.uniform(-np.pi, np.pi, size=2))
        h = random_element(run.rng, run.radius)
        x = pair_product(pair_product(x1(a), x2(b)), k_element(phi1, phi2))
        lhs = kernel.tphi_series(h, x)
        at_x2 = kernel.phi_vector(x2(b)) * kernel.sigma_closed(identity, identity)
        rhs = kernel.chi(phi1, phi2) * at_x2 * kernel.sigma_closed(x1(a)[0], h)
        run.record(lhs, rhs, kernel.sigma_tail(x1(a)[0], h))
        run.inform(lhs, kernel.holomorphic_group_kernel(h, x))
    return run.report()


def check_sbo_split(lam: int, lam2: int, n: int, samples: Optional[int] = None,
                    truncation: Optional[int] = None, seed: Optional[int] = None,
                    tolerance: Optional[float] = None) -> ResidualReportModel:
    """
    K_S(x1 x2 k, h) = K_S(x2, e) K_sigma(x1, h) conj(chi(k)) for S = T_Phi^*.

    The left side sums the adjoint coefficients conj(T_Phi(u_k)(x)) u_k(h).
    """
    run = CheckRun("sbo-split", lam, lam2, n, truncation, samples, seed, tolerance)
    kernel = TruncatedKernel(lam, lam2, n, run.truncation)
    identity = Su11Element.identity()
    for _ in range(run.samples):
        a, b = random_disc_point(run.rng, run.radius), random_disc_point(run.rng, run.radius)
        phi1, phi2 = (float(t) for t in run.rng.uniform(-np.pi, np.pi, size=2))
        h = random_element(run.rng, run.radius)
        x = pair_product(pair_product(x1(a), x2(b)), k_element(phi1, phi2))
        lhs = complex(np.conj(kernel.tphi_series(h, x)))
        at_x2 = np.conj(kernel.phi_vector(x2(b)) * kernel.sigma_closed(identity, identity))
        sigma = np.conj(kernel.sigma_closed(x1(a)[0], h))
        rhs = at_x2 * sigma * np.conj(kernel.chi(phi1, phi2))
        run.record(lhs, rhs, kernel.sigma_tail(x1(a)[0], h))
        run.inform(lhs, np.conj(kernel.holomorphic_group_kernel(h, x)))
    return run.report()


def check_nakahama(lam: int, lam2: int, n: int, samples: Optional[int] = None,
                   truncation: Optional[int] = None, seed: Optional[int] = None,
                   tolerance: Optional[float] = None) -> ResidualReportModel:
    """
    K_T(w, z) = K_tau(z, (w, w)) K_T(o, P2((exp(-conj w) exp z)_+)) on the bounded domain.

    The left side is the orthonormal-basis series of the holographic operator
    generated by Phi; disc points are images of group elements of the sample radius.
    """
    run = CheckRun("nakahama", lam, lam2, n, truncation, samples, seed, tolerance)
    kernel = TruncatedKernel(lam, lam2, n, run.truncation)
    disc_radius = float(np.tanh(run.radius))
    for _ in range(run.samples):
        w = random_disc_point(run.rng, disc_radius)
        z = (random_disc_point(run.rng, disc_radius), random_disc_point(run.rng, disc_radius))
        run.record(kernel.holographic_series(w, z), kernel.holographic_closed(w, z), kernel.holographic_tail(w, z))
    return run.report()


def _pointwise(check: str, lam: int, samples: Optional[int], seed: Optional[int], tolerance: Optional[float],
               sample: Callable[[np.random.Generator, float], tuple]) -> ResidualReportModel:
    run = CheckRun(check, lam, lam, 0, 0, samples, seed, tolerance)
    for _ in range(run.samples):
        run.record(*sample(run.rng, run.radius))
    return run.report()


def check_cocycle_identity(lam: int, samples: Optional[int] = None, seed: Optional[int] = None,
                           tolerance: Optional[float] = None) -> ResidualReportModel:
    """c(ab, z) = c(a, b.z) c(b, z)"""
    def sample(rng, radius):
        a, b = random_element(rng, radius), random_element(rng, radius)
        z = random_disc_point(rng, float(np.tanh(radius)))
        return cocycle(lam, a @ b, z), cocycle(lam, a, b.act(z)) * cocycle(lam, b, z)
    return _pointwise("cocycle", lam, samples, seed, tolerance, sample)


def check_equivariance(lam: int, samples: Optional[int] = None, seed: Optional[int] = None,
                       tolerance: Optional[float] = None) -> ResidualReportModel:
    """K(g.z, g.w) c(g, z) conj(c(g, w)) = K(z, w)"""
    def sample(rng, radius):
        g = random_element(rng, radius)
        z, w = (random_disc_point(rng, float(np.tanh(radius))) for _ in range(2))
        moved = disc_kernel(lam, g.act(z), g.act(w)) * cocycle(lam, g, z) * np.conj(cocycle(lam, g, w))
        return moved, disc_kernel(lam, z, w)
    return _pointwise("equivariance", lam, samples, seed, tolerance, sample)


def check_hermitian_symmetry(lam: int, samples: Optional[int] = None, seed: Optional[int] = None,
                             tolerance: Optional[float] = None) -> ResidualReportModel:
    """K(x, h) = conj(K(h, x)) on the group model"""
    def sample(rng, radius):
        x, h = random_element(rng, radius), random_element(rng, radius)
        return group_kernel(lam, x, h), np.conj(group_kernel(lam, h, x))
    return _pointwise("hermitian", lam, samples, seed, tolerance, sample)


def check_transfer(lam: int, s: int = 3, samples: Optional[int] = None, seed: Optional[int] = None,
                   tolerance: Optional[float] = None) -> ResidualReportModel:
    """v_s(g) = c(g, 0) (lam)_s (g.o)^s, the transfer of (lam)_s z^s"""
    def sample(rng, radius):
        g = random_element(rng, radius)
        transferred = cocycle(lam, g, 0j) * float(pochhammer(lam, s)) * g.origin_image() ** s
        return evaluate_vs(lam, s, g), transferred
    return _pointwise("transfer", lam, samples, seed, tolerance, sample)


def check_diagonal_normalization(lam: int, samples: Optional[int] = None, seed: Optional[int] = None,
                                 tolerance: Optional[float] = None) -> ResidualReportModel:
    """K(x.o, x.o) |c(x, o)|^2 = K(o, o) = 1"""
    def sample(rng, radius):
        x = random_element(rng, radius)
        point = x.origin_image()
        return disc_kernel(lam, point, point) * abs(cocycle(lam, x, 0j)) ** 2, 1.0
    return _pointwise("diagonal", lam, samples, seed, tolerance, sample)


def check_vs_norms(lam: int, degrees: int = 6, tolerance: Optional[float] = None) -> ResidualReportModel:
    """||v_s||^2 = (lam)_s s! against disc quadrature of (lam)_s z^s"""
    run = CheckRun("vs-norms", lam, lam, 0, 0, 0, None, tolerance)
    for s in range(degrees + 1):
        coefficients = [0.0] * s + [float(pochhammer(lam, s))]
        run.record(disc_norm_squared(lam, coefficients), vs_norm_squared(lam, s))
    return run.report()


def check_refined_factorization(samples: Optional[int] = None, seed: Optional[int] = None,
                                tolerance: Optional[float] = None) -> ResidualReportModel:
    """x1(a) x2(b) k rebuilt from the factorization of a sampled element"""
    run = CheckRun("refined-cartan", 2, 2, 0, 0, samples, seed, tolerance)
    for _ in range(run.samples):
        a, b = random_disc_point(run.rng, run.radius), random_disc_point(run.rng, run.radius)
        phi1, phi2 = (float(t) for t in run.rng.uniform(-np.pi, np.pi, size=2))
        factor = refined_cartan_factor(pair_product(pair_product(x1(a), x2(b)), k_element(phi1, phi2)))
        run.record(factor.a, a)
        run.record(factor.b, b)
        run.residuals.append(factor.residual)
    return run.report()

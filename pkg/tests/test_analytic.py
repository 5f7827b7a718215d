"""
Tests for the floating-point SU(1,1) kernel laboratory
"""
import numpy as np
import pytest

from branchlab.analytic import (
    Su11Element,
    check_cocycle_identity,
    check_diagonal_normalization,
    check_equivariance,
    check_hermitian_symmetry,
    check_nakahama,
    check_refined_factorization,
    check_sbo_split,
    check_separation_formula,
    check_transfer,
    check_vs_norms,
    cocycle,
    disc_kernel,
    evaluate_vs,
    refined_cartan_factor,
    relative_residual,
    vs_norm_squared,
    x1,
    x2,
)

SAMPLES = 4


class TestSu11Element:
    """Tests for SU(1,1) elements"""

    def test_not_unimodular(self):
        """Test that |alpha|^2 - |beta|^2 != 1 is refused"""
        with pytest.raises(ValueError, match="Not in SU"):
            Su11Element(2 + 0j, 0j)

    def test_boost_inverse(self):
        """Test exp(X_a) exp(X_-a) = e"""
        a = 0.3 - 0.2j
        product = Su11Element.boost(a) @ Su11Element.boost(-a)
        assert product.distance(Su11Element.identity()) < 1e-12

    def test_boost_moves_origin(self):
        """Test exp(X_a).0 = tanh|a| a/|a|"""
        a = 0.4 + 0.1j
        expected = np.tanh(abs(a)) * a / abs(a)
        assert abs(Su11Element.boost(a).act(0j) - expected) < 1e-12

    def test_outside_disc(self):
        """Test that points with |z| >= 1 are refused"""
        with pytest.raises(ValueError, match="outside the unit disc"):
            cocycle(2, Su11Element.identity(), 1.5 + 0j)


class TestKernels:
    """Tests for closed-form kernels and norms"""

    def test_kernel_at_origin(self):
        """Test K(0, 0) = 1"""
        assert disc_kernel(3, 0j, 0j) == 1

    def test_vs_at_identity(self):
        """Test v_0(e) = 1 and v_s(e) = 0 for s > 0"""
        e = Su11Element.identity()
        assert evaluate_vs(3, 0, e) == pytest.approx(1.0)
        assert abs(evaluate_vs(3, 2, e)) < 1e-15

    def test_vs_norm(self):
        """Test ||v_s||^2 = (lam)_s s!"""
        assert vs_norm_squared(2, 3) == pytest.approx(144.0)
        assert vs_norm_squared(3, 0) == pytest.approx(1.0)

    def test_relative_residual(self):
        """Test the residual is absolute near zero and relative for large values"""
        assert relative_residual(1 + 0j, 1 + 0j) == 0.0
        assert relative_residual(0j, 1e-3 + 0j) == pytest.approx(1e-3)
        assert relative_residual(1000 + 0j, 1001 + 0j) == pytest.approx(1e-3, rel=1e-2)

    def test_refined_factorization(self):
        """Test x = x1(a) x2(b) k is recovered"""
        a, b = 0.2 + 0.1j, -0.15 + 0.05j
        g1, g2 = x1(a)
        h1, h2 = x2(b)
        x = (g1 @ h1 @ Su11Element.torus(0.7), g2 @ h2 @ Su11Element.torus(-1.1))
        factor = refined_cartan_factor(x)
        assert factor.residual < 1e-10
        assert abs(factor.a - a) < 1e-10
        assert abs(factor.b - b) < 1e-10


class TestChecks:
    """Tests that every residual check passes at the configured tolerance"""

    @pytest.mark.parametrize("check", [check_separation_formula, check_sbo_split, check_nakahama])
    @pytest.mark.parametrize("n", [0, 1])
    def test_holographic_checks(self, check, n):
        """Test kernel identities of T_Phi"""
        report = check(2, 2, n, samples=SAMPLES)
        assert report.passed, report.max_residual
        assert report.samples >= SAMPLES

    @pytest.mark.parametrize("check", [
        check_cocycle_identity,
        check_equivariance,
        check_hermitian_symmetry,
        check_transfer,
        check_diagonal_normalization,
    ])
    @pytest.mark.parametrize("lam", [2, 3])
    def test_pointwise_checks(self, check, lam):
        """Test pointwise identities of the scalar model"""
        report = check(lam, samples=SAMPLES)
        assert report.passed, report.max_residual

    def test_vs_norms(self):
        """Test disc quadrature against (lam)_s s!"""
        assert check_vs_norms(2).passed

    def test_refined_factorization_check(self):
        """Test the sampled factorization check"""
        assert check_refined_factorization(samples=SAMPLES).passed

    def test_reproducible_seed(self):
        """Test that a fixed seed gives identical residuals"""
        first = check_separation_formula(2, 3, 1, samples=3, seed=7)
        second = check_separation_formula(2, 3, 1, samples=3, seed=7)
        assert first.residuals == second.residuals

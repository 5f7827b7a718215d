"""
Unit tests for the exact polynomial model and the duality maps
"""
from fractions import Fraction
from itertools import product

import pytest

from branchlab.cli.params import ParameterRequest, resolve_parameter
from branchlab.errors import UnsupportedModelError
from branchlab.holomodel import (
    PolyVector,
    diagonal_model,
    duality_map_D,
    holographic_map_from_phi,
    holographic_phi,
    holomorphic_model,
    inclusion_map,
    intertwine_check,
    lwh_subspace,
    phi_coefficients,
    pochhammer,
    project_Q,
    q_gram_determinants,
    uh0w_subspace,
)
from branchlab.rootsys import AlgebraElement, Weight


@pytest.fixture(scope="module")
def model():
    return diagonal_model(2, 3)


class TestPolynomialModel:
    """Tests for the g-action on P(p+, W)"""

    def test_shape(self, model):
        """Test two variables, scalar W and one p_h0 direction"""
        assert model.nvars == 2
        assert model.wdim == 1
        assert model.h0_rank == 1

    def test_representation(self, model):
        """Test [act(x), act(y)] = act([x, y]) through degree 2"""
        action = model.action
        rd = model.pair.ambient
        elements = [AlgebraElement.root_vector(r) for r in rd.roots]
        elements += [AlgebraElement(Weight.unit(rd.ambient_dim, i)) for i in range(rd.ambient_dim)]
        for degree in range(3):
            for p in action.basis(degree):
                for x, y in product(elements, repeat=2):
                    assert action.commutator_defect(x, y, p).is_zero()

    def test_non_holomorphic_pair(self, e6f4):
        """Test that the polynomial model is refused off holomorphic pairs"""
        tau = resolve_parameter(e6f4, ParameterRequest()).lowest_ktype
        with pytest.raises(UnsupportedModelError):
            holomorphic_model(e6f4, tau)


class TestSubspaces:
    """Tests for L_{W,H} and U(h0)W"""

    def test_diagonal_dimensions(self, model):
        """Test one dimension per degree on the diagonal pair"""
        assert lwh_subspace(model, 4).dims() == [1, 1, 1, 1, 1]
        assert uh0w_subspace(model, 4).dims() == [1, 1, 1, 1, 1]

    def test_dimensions_agree_on_sun1(self, sun1_n2):
        """Test dim L_{W,H} = dim U(h0)W degree by degree"""
        tau = resolve_parameter(sun1_n2, ParameterRequest()).lowest_ktype
        ball = holomorphic_model(sun1_n2, tau)
        assert lwh_subspace(ball, 3).dims() == uh0w_subspace(ball, 3).dims()

    def test_beyond_range(self, model):
        """Test that membership past the computed degree is refused"""
        lwh = lwh_subspace(model, 1)
        with pytest.raises(ValueError, match="beyond"):
            lwh.contains(model.b_monomial((2,)))


class TestDuality:
    """Tests for D and the projection Q"""

    def test_d_lands_in_uh0w(self, model):
        """Test that D maps b-monomials into U(h0)W"""
        uh0w = uh0w_subspace(model, 3)
        for k in range(4):
            image = duality_map_D(model, model.b_monomial((k,)))
            assert not image.is_zero()
            assert uh0w.contains(image)

    def test_d_rejects_outside_lwh(self, model):
        """Test that D refuses polynomials with a p_h+ component"""
        p = model.action.basis(1)[0]
        with pytest.raises(ValueError):
            duality_map_D(model, p)

    def test_q_is_injective(self, model):
        """Test nonzero Gram determinants of Q on L_{W,H}"""
        assert all(d != 0 for d in q_gram_determinants(model, 3))


class TestHolographicPhi:
    """Tests for Phi on the diagonal pair"""

    def test_coefficients(self):
        """Test (-1)^s C(n, s) / ((lam)_s (lam2)_{n-s})"""
        assert phi_coefficients(2, 3, 1) == {0: Fraction(1, 3), 1: Fraction(-1, 2)}

    def test_pochhammer(self):
        """Test rising factorials"""
        assert pochhammer(Fraction(2), 3) == 24
        assert pochhammer(Fraction(5), 0) == 1

    def test_phi_in_lwh(self, model):
        """Test that Phi depends on the p_h0+ coordinate only"""
        lwh = lwh_subspace(model, 2)
        for n in range(3):
            assert lwh.contains(holographic_phi(2, 3, n, model))

    @pytest.mark.parametrize("n", [0, 1, 2])
    def test_phi_intertwines(self, model, n):
        """Test that T_Phi is an exact h-map"""
        phi = holographic_phi(2, 3, n, model)
        report = intertwine_check(model.pair, holographic_map_from_phi(model, phi, 4))
        assert report.exact
        assert report.inputs > 0

    def test_perturbed_map_fails(self, model):
        """Test that a wrong image is detected"""
        phi = holographic_phi(2, 3, 1, model)
        T = holographic_map_from_phi(model, phi, 3)
        bad = T.perturbed((1,), model.action.constant())
        assert not intertwine_check(model.pair, bad).exact

    def test_inclusion_map(self, model):
        """Test that the degree-zero Phi gives an h-map as well"""
        assert intertwine_check(model.pair, inclusion_map(model, 3)).exact

    def test_small_lambda_rejected(self):
        """Test the lam, lam2 >= 2 requirement"""
        with pytest.raises(ValueError):
            holographic_phi(1, 3, 1)


class TestPolyVector:
    """Tests for the polynomial container"""

    def test_render_is_sorted(self):
        """Test the deterministic text form"""
        p = PolyVector(2, 1, (((1, 0), (Fraction(1, 2),)), ((0, 0), (3,))))
        assert p.render() == "z^(0,0): [3]; z^(1,0): [1/2]"

    def test_zero_terms_dropped(self):
        """Test that cancelled terms vanish"""
        p = PolyVector.basis_vector(2, 1, (1, 1), 0)
        assert (p - p).is_zero()
        assert (p - p).render() == "0"


class TestProjection:
    """Tests for Q"""

    def test_fixes_uh0w(self, model):
        """Test that Q is the identity on U(h0)W"""
        image = duality_map_D(model, model.b_monomial((2,)))
        assert project_Q(model, image, 3) == image

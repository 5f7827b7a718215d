"""
Unit tests for the exact root-system core.
"""
from fractions import Fraction

import numpy as np
import pytest

from branchlab.rootsys import (
    AlgebraElement,
    Basis,
    Weight,
    build_root_datum,
    chevalley_constants,
    coroot_pairing,
    render_fraction,
    rho_vectors,
    system_flags,
    to_fraction,
    weyl_act,
)


class TestWeight:
    """Tests for exact weights and rational rendering."""

    def test_to_fraction_accepts_strings(self):
        """Test that "p/q" strings become exact fractions."""
        assert to_fraction("3/2") == Fraction(3, 2)
        assert to_fraction(4) == Fraction(4)

    def test_to_fraction_rejects_floats(self):
        """Test that floats never enter the exact layer."""
        with pytest.raises(ValueError, match="Not a rational scalar"):
            to_fraction(0.5)

    def test_render_fraction(self):
        """Test "p/q" and integer renderings."""
        assert render_fraction(Fraction(-7, 2)) == "-7/2"
        assert render_fraction(Fraction(6, 3)) == "2"

    def test_incompatible_bases_rejected(self):
        """Test that weights in different bases do not add."""
        a = Weight.of([1, 0])
        b = Weight.of([1, 0], Basis.SIMPLE)
        with pytest.raises(ValueError, match="Incompatible weights"):
            a + b

    def test_basis_round_trip(self):
        """Test epsilon -> simple -> fundamental conversions are exact."""
        rd = build_root_datum("C3")
        mu = rd.from_fundamental([1, 2, 3])
        assert rd.to_epsilon(rd.to_simple(mu)) == mu
        assert rd.to_fundamental(mu).coords == (1, 2, 3)


class TestBuildRootDatum:
    """Tests for root data of the supported Cartan types."""

    def test_a1(self):
        """Test the rank-one case."""
        rd = build_root_datum("A", 1)
        assert len(rd.roots) == 2
        assert rd.cartan_matrix == ((2,),)

    def test_e6(self):
        """Test E6 root count and the node adjacent to alpha2."""
        rd = build_root_datum("E6")
        assert len(rd.roots) == 72
        assert rd.cartan_matrix[1][3] == -1
        assert rd.cartan_matrix[1][2] == 0

    @pytest.mark.parametrize("label,count", [("D4", 24), ("F4", 48), ("C3", 18), ("A1xA1", 4), ("A5", 30)])
    def test_root_counts(self, label, count):
        """Test root counts per type."""
        assert len(build_root_datum(label).roots) == count

    def test_roots_closed_under_negation_and_reflection(self):
        """Test that simple reflections permute the roots."""
        rd = build_root_datum("B3")
        roots = set(rd.roots)
        assert all(-r in roots for r in roots)
        for i in range(1, rd.rank + 1):
            assert {rd.reflect_simple(i, r) for r in roots} == roots

    def test_integral_pairings(self):
        """Test that <alpha, beta^vee> is an integer for every pair of roots."""
        rd = build_root_datum("F4")
        assert all(coroot_pairing(a, b).denominator == 1 for a in rd.roots for b in rd.roots)

    @pytest.mark.parametrize("label", ["G2", "E7", "X3"])
    def test_unsupported_type(self, label):
        """Test that unsupported types are rejected."""
        with pytest.raises(ValueError, match="Unsupported Cartan type"):
            build_root_datum(label)

    def test_rho_is_sum_of_fundamental_weights(self):
        """Test rho against the fundamental weights."""
        rd = build_root_datum("D4")
        rho = sum(rd.standard_positives, Weight.zero(rd.ambient_dim)) / 2
        assert rd.to_fundamental(rho).coords == (1, 1, 1, 1)


class TestWeylAct:
    """Tests for words of simple reflections."""

    def test_empty_word(self):
        """Test that the empty word is the identity."""
        rd = build_root_datum("A2")
        mu = rd.simple_roots[0]
        assert weyl_act(rd, [], mu) == mu

    def test_a1_reflection(self):
        """Test s1(alpha) = -alpha."""
        rd = build_root_datum("A1")
        alpha = rd.simple_roots[0]
        assert weyl_act(rd, [1], alpha) == -alpha

    def test_words_apply_left_to_right(self):
        """Test s1 s2 (alpha1) = -alpha1 - alpha2 and (1, 2, 1) sends alpha1 to -alpha2."""
        rd = build_root_datum("A2")
        a1, a2 = rd.simple_roots
        assert weyl_act(rd, [1, 2], a1) == -(a1 + a2)
        assert weyl_act(rd, [1, 2, 1], a1) == -a2

    def test_index_out_of_range(self):
        """Test that reflection indices outside the rank are rejected."""
        rd = build_root_datum("A2")
        with pytest.raises(ValueError, match="outside"):
            weyl_act(rd, [3], rd.simple_roots[0])


class TestChevalleyConstants:
    """Tests for structure constants and brackets."""

    def test_sl2_relations(self):
        """Test [e_alpha, e_-alpha] = h_alpha."""
        rd = build_root_datum("A1")
        constants = chevalley_constants(rd)
        alpha = rd.simple_roots[0]
        assert constants.root_bracket(alpha, -alpha) == AlgebraElement(alpha)

    def test_antisymmetry(self):
        """Test N_{r,s} = -N_{s,r} on A2."""
        rd = build_root_datum("A2")
        constants = chevalley_constants(rd)
        a1, a2 = rd.simple_roots
        assert constants.N(a1, a2) in (1, -1)
        assert all(constants.N(r, s) == -constants.N(s, r) for r in rd.roots for s in rd.roots)

    def test_root_strings(self):
        """Test |N_{r,s}| = p + 1 and N_{r,s} != 0 exactly when r + s is a root."""
        rd = build_root_datum("C3")
        constants = chevalley_constants(rd)
        roots = set(rd.roots)
        for r in rd.roots:
            for s in rd.roots:
                if r + s in roots:
                    p = 0
                    while s - r * (p + 1) in roots:
                        p += 1
                    assert abs(constants.N(r, s)) == p + 1
                else:
                    assert constants.N(r, s) == 0

    @pytest.mark.parametrize("label", ["A2", "B2", "C3"])
    def test_jacobi(self, label):
        """Test the Jacobi identity on every triple of basis elements."""
        rd = build_root_datum(label)
        constants = chevalley_constants(rd)
        basis = [AlgebraElement.root_vector(r) for r in rd.roots] + [AlgebraElement(a) for a in rd.simple_roots]
        for x in basis:
            for y in basis:
                for z in basis:
                    assert constants.jacobi(x, y, z).is_zero()

    @pytest.mark.slow
    def test_jacobi_e6_sampled(self):
        """Test the Jacobi identity on 10,000 seeded random triples of the E6 basis."""
        constants = chevalley_constants(build_root_datum("E6"))
        rd = constants.datum
        basis = [AlgebraElement.root_vector(r) for r in rd.roots] + [AlgebraElement(a) for a in rd.simple_roots]
        assert len(basis) == 78
        picks = np.random.default_rng(20240611).integers(0, len(basis), size=(10_000, 3))
        failing = [(i, j, k) for i, j, k in picks if not constants.jacobi(basis[i], basis[j], basis[k]).is_zero()]
        assert not failing


class TestSystems:
    """Tests for rho vectors and system flags of cataloged systems."""

    def test_e6_rho_vectors(self, e6f4):
        """Test rho_n = 5 alpha_max and rho = rho_c + rho_n for the quaternionic system."""
        rho, rho_c, rho_n = rho_vectors(e6f4.ambient, e6f4.system)
        assert len(e6f4.system.noncompact_positives) == 20
        assert rho_n == e6f4.ambient.highest_root * 5
        assert rho == rho_c + rho_n

    def test_e6_flags(self, e6f4):
        """Test the quaternionic system is Borel-de Siebenthal and not holomorphic."""
        flags = system_flags(e6f4.ambient, e6f4.system)
        assert flags["borel_de_siebenthal"] is True
        assert flags["holomorphic"] is False

    def test_su11_holomorphic(self, su11_self):
        """Test that su(1,1) is holomorphic."""
        assert system_flags(su11_self.ambient, su11_self.system)["holomorphic"] is True

    def test_spin_systems_not_bds(self, spin_m2):
        """Test that the systems Psi_+ and Psi_- are not Borel-de Siebenthal."""
        for name in ("plus", "minus"):
            selected = spin_m2.for_system(name)
            assert system_flags(selected.ambient, selected.system)["borel_de_siebenthal"] is False

    def test_rescaled_form_keeps_pairings(self):
        """Test that coroot pairings do not depend on the form scale."""
        rd = build_root_datum("B2")
        scaled = rd.rescaled(3)
        assert scaled.cartan_matrix == rd.cartan_matrix
        assert scaled.inner(rd.simple_roots[0], rd.simple_roots[0]) == 3 * rd.inner(rd.simple_roots[0], rd.simple_roots[0])

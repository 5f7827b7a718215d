"""
Unit tests for compact group characters, partition functions and Blattner counts
"""
from fractions import Fraction

import pytest

from branchlab.cli.params import ParameterRequest, resolve_parameter
from branchlab.compactrep import (
    CompactGroup,
    HighestWeight,
    blattner_multiplicity,
    brute_force_partition,
    character,
    decompose,
    irrep_dim,
    kostant_partition,
    restrict_decompose,
    tensor_decompose,
    weight_multiplicities,
)
from branchlab.errors import CutoffExceededError
from branchlab.rootsys import Weight, build_root_datum


@pytest.fixture
def a2():
    return build_root_datum("A2")


@pytest.fixture
def su3(a2):
    return CompactGroup("SU(3)", a2.standard_positives, a2.ambient_dim)


def hw(rd, group, labels):
    return HighestWeight(rd.from_fundamental(labels), group)


class TestCharacters:
    """Tests for Weyl dimensions, Freudenthal characters and decompositions"""

    @pytest.mark.parametrize("labels,dim", [([0, 0], 1), ([1, 0], 3), ([2, 0], 6), ([1, 1], 8), ([3, 0], 10)])
    def test_weyl_dimension(self, a2, su3, labels, dim):
        """Test the Weyl dimension formula on SU(3)"""
        assert irrep_dim(hw(a2, su3, labels)) == dim

    def test_character_size_matches_dimension(self, a2, su3):
        """Test that the Freudenthal character has irrep_dim weights"""
        adjoint = hw(a2, su3, [1, 1])
        char = character(adjoint)
        assert sum(char.values()) == 8
        assert char[Weight.zero(a2.ambient_dim)] == 2

    def test_weight_multiplicities(self, a2, su3):
        """Test that the multiset total equals the Weyl dimension"""
        sym3 = hw(a2, su3, [3, 0])
        weights = weight_multiplicities(sym3)
        assert weights.total() == irrep_dim(sym3) == 10
        assert weights.multiplicity(sym3.weight) == 1

    def test_tensor_decomposition(self, a2, su3):
        """Test 3 (x) 3 = 6 + 3bar"""
        fundamental = hw(a2, su3, [1, 0])
        product = tensor_decompose(fundamental, fundamental)
        assert product.multiplicity(a2.from_fundamental([2, 0])) == 1
        assert product.multiplicity(a2.from_fundamental([0, 1])) == 1
        assert product.total_dim() == 9

    def test_decompose_own_character(self, a2, su3):
        """Test that an irreducible character decomposes to itself"""
        adjoint = hw(a2, su3, [1, 1])
        parts = decompose(character(adjoint), su3)
        assert parts.as_dict() == {adjoint.weight: 1}

    def test_non_dominant_rejected(self, a2, su3):
        """Test highest weight validation"""
        with pytest.raises(ValueError, match="not dominant"):
            hw(a2, su3, [-1, 0])

    def test_non_integral_rejected(self, a2, su3):
        """Test that half-integral labels are refused"""
        with pytest.raises(ValueError, match="not integral"):
            hw(a2, su3, [Fraction(1, 2), 0])

    def test_restriction_keeps_dimension(self, e6f4):
        """Test res_L of the quaternionic lowest K-type"""
        ds = resolve_parameter(e6f4, ParameterRequest(values={"n": 1}))
        tau = ds.lowest_ktype
        assert irrep_dim(tau) == 20
        assert restrict_decompose(tau, e6f4).total_dim() == 20


class TestPartition:
    """Tests for the Kostant partition function"""

    def test_a2_small_values(self, a2):
        """Test counts over the positive roots of A2"""
        roots = a2.standard_positives
        a1, a2_ = a2.simple_roots
        assert kostant_partition(Weight.zero(a2.ambient_dim), roots) == 1
        assert kostant_partition(a1 + a2_, roots) == 2
        assert kostant_partition(-a1, roots) == 0

    @pytest.mark.parametrize("coeffs", [(1, 1), (2, 1), (2, 2), (3, 1)])
    def test_matches_enumeration(self, a2, coeffs):
        """Test the memoized count against brute-force enumeration"""
        roots = a2.standard_positives
        mu = a2.from_simple(coeffs)
        assert kostant_partition(mu, roots) == brute_force_partition(mu, roots, sum(coeffs))

    def test_b2_matches_enumeration(self):
        """Test a non-simply-laced root system"""
        rd = build_root_datum("B2")
        mu = rd.from_simple((2, 3))
        assert kostant_partition(mu, rd.standard_positives) == brute_force_partition(mu, rd.standard_positives, 5)

    def test_half_space_required(self, a2):
        """Test that roots and their negatives are refused"""
        alpha = a2.simple_roots[0]
        with pytest.raises(ValueError, match="half-space"):
            kostant_partition(alpha, [alpha, -alpha])


class TestBlattner:
    """Tests for L-type multiplicities of holomorphic discrete series of SU(1,1)"""

    def test_multiplicity_one_along_the_ray(self, su11_self):
        """Test that tau + k beta occurs once and tau - beta not at all"""
        ds = resolve_parameter(su11_self, ParameterRequest())
        tau = ds.lowest_ktype
        beta = ds.system.noncompact_positives[0]
        group = tau.group
        for k in range(4):
            assert blattner_multiplicity(ds, HighestWeight(tau.weight + beta * k, group), cutoff=4) == 1
        assert blattner_multiplicity(ds, HighestWeight(tau.weight - beta, group), cutoff=4) == 0

    def test_beyond_cutoff(self, su11_self):
        """Test that L-types past the cutoff are refused"""
        ds = resolve_parameter(su11_self, ParameterRequest())
        tau = ds.lowest_ktype
        beta = ds.system.noncompact_positives[0]
        with pytest.raises(CutoffExceededError):
            blattner_multiplicity(ds, HighestWeight(tau.weight + beta * 3, tau.group), cutoff=2)

"""
Unit tests for discrete series parameters, U(h0)W spectra and branching tables
"""
import pytest

from branchlab.branchdual import (
    as_ktype,
    branch,
    classify_sbo,
    ds_from_hc,
    ds_from_lowest_ktype,
    first_order_report,
    get_engine,
    minimal_gradient_order,
    p_minus_weights,
    source_roots,
    uh0w_ltypes,
    uh0w_spectrum,
)
from branchlab.cli.params import ParameterRequest, resolve_parameter
from branchlab.cli.suites import e6f4_expected
from branchlab.compactrep import HighestWeight
from branchlab.errors import BranchlabError, CutoffExceededError, InadmissibleError, UnsupportedModelError
from branchlab.models import BranchingTableModel
from branchlab.rootsys import Weight
from branchlab.sympair import build_pair


class TestDiscreteSeriesParam:
    """Tests for HC parameter <-> lowest K-type"""

    def test_round_trip(self, e6f4):
        """Test ds_from_lowest_ktype inverts ds_from_hc"""
        ds = resolve_parameter(e6f4, ParameterRequest(values={"n": 1}))
        again = ds_from_lowest_ktype(e6f4.k_group, ds.lowest_ktype.weight, ds.system)
        assert again.hc_param == ds.hc_param

    def test_e6_lowest_ktype(self, e6f4):
        """Test that the quaternionic family has lowest K-type (n + 18) alpha_max / 2"""
        ds = resolve_parameter(e6f4, ParameterRequest(values={"n": 2}))
        assert ds.lowest_ktype.weight == e6f4.ambient.highest_root * 10

    def test_singular_parameter(self, e6f4):
        """Test that a singular HC parameter is refused"""
        with pytest.raises(ValueError, match="singular"):
            ds_from_hc(e6f4.k_group, Weight.zero(e6f4.ambient.ambient_dim), e6f4.system)


class TestBranch:
    """Tests for branching tables"""

    def test_diagonal_spectrum(self, sl2diag, diag_ds):
        """Test that the diagonal restriction gives lambda + lambda' + 2n, each once"""
        table = branch(sl2diag, diag_ds, cutoff=3)
        assert [table.labels(w)[0] for w in table.ltypes()] == ["5", "7", "9", "11"]
        assert all(e.multiplicity == 1 for e in table.entries)
        assert [e.discovery_degree for e in table.entries] == [0, 1, 2, 3]
        assert table.complete_below_cutoff

    def test_diagonal_steps_by_h0_weight(self, sl2diag, diag_ds):
        """Test Z_n = q_u(tau) + n beta"""
        table = branch(sl2diag, diag_ds, cutoff=4)
        beta = sl2diag.h0_noncompact_positive_weights[0]
        base = sl2diag.qu_restrict(diag_ds.lowest_ktype.weight)
        assert table.multiplicities() == {base + beta * n: 1 for n in range(5)}

    def test_default_cutoff_from_catalog(self, sl2diag, diag_ds):
        """Test that the cutoff defaults to the catalog value"""
        table = branch(sl2diag, diag_ds)
        assert table.cutoff == sl2diag.entry.default_cutoff

    def test_negative_cutoff(self, sl2diag, diag_ds):
        """Test that a negative cutoff is bad input, not an incomplete table"""
        with pytest.raises(BranchlabError, match="Cutoff -1") as info:
            branch(sl2diag, diag_ds, cutoff=-1)
        assert not isinstance(info.value, CutoffExceededError)
        assert info.value.exit_code == 1

    def test_self_restriction(self, su11_self):
        """Test that restricting to G itself gives the representation once"""
        ds = resolve_parameter(su11_self, ParameterRequest(values={"lam": 3}))
        table = branch(su11_self, ds, cutoff=3)
        assert len(table.entries) == 1
        assert table.entries[0].multiplicity == 1

    def test_inadmissible_system(self, spin_m2):
        """Test that the holomorphic system of so(4,2) does not restrict admissibly"""
        ds = resolve_parameter(spin_m2, ParameterRequest(hc="1,-2,4", system="hol"))
        with pytest.raises(InadmissibleError) as info:
            branch(spin_m2, ds, cutoff=2)
        assert info.value.exit_code == 2

    @pytest.mark.slow
    @pytest.mark.parametrize("m", [2, 3])
    def test_spin_samples_multiplicity_free(self, m):
        """Test the cataloged samples of so(2m,2) restricted to so(2m,1)"""
        pair = build_pair("spin2m2", m=m)
        for sample in pair.entry.samples:
            ds = resolve_parameter(pair, ParameterRequest(hc=",".join(sample.labels), system=sample.system))
            table = branch(pair, ds, cutoff=2)
            assert table.entries
            assert {e.multiplicity for e in table.entries} == {1}

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [1, 2])
    def test_e6f4_table(self, e6f4, n):
        """Test Z_{n,m} = (n + 18 + m) alpha_max / 2 + m w1, m = 0..4, each once"""
        ds = resolve_parameter(e6f4, ParameterRequest(values={"n": n}))
        table = branch(e6f4, ds, cutoff=4)
        assert table.multiplicities() == e6f4_expected(e6f4, n, 4)
        assert len(table.entries) == 5
        assert table.complete_below_cutoff

    def test_model_serialization(self, sl2diag, diag_ds):
        """Test that the pydantic table model survives JSON"""
        model = branch(sl2diag, diag_ds, cutoff=2).to_model(source_roots(sl2diag))
        again = BranchingTableModel.model_validate_json(model.model_dump_json())
        assert again == model
        assert again.input_ktype.labels == ["2", "3"]
        assert [e.lowest_ltype.labels for e in again.entries] == [["5"], ["7"], ["9"]]


class TestRescaling:
    """Tests that tables do not depend on the scale of the invariant form"""

    @pytest.mark.parametrize("pair_name,scale", [("sl2diag", 3), ("sun1_n2", 5)])
    def test_branch_is_scale_invariant(self, request, pair_name, scale):
        """Test identical entries, H-parameters and degrees after rescaling"""
        pair = request.getfixturevalue(pair_name)
        scaled = pair.rescaled(scale)
        assert scaled != pair
        ds = resolve_parameter(pair, ParameterRequest())
        assert resolve_parameter(scaled, ParameterRequest()).hc_param == ds.hc_param
        base = branch(pair, ds, cutoff=3)
        other = branch(scaled, ds, cutoff=3)
        assert other.multiplicities() == base.multiplicities()
        assert [e.h_param.hc_param for e in other.entries] == [e.h_param.hc_param for e in base.entries]
        assert [e.discovery_degree for e in other.entries] == [e.discovery_degree for e in base.entries]
        assert other.complete_below_cutoff == base.complete_below_cutoff

    def test_rescaled_pair_is_distinct(self, sl2diag):
        """Test that the form scale is part of the pair identity"""
        assert sl2diag.rescaled(2) != sl2diag
        assert sl2diag.rescaled(1) == sl2diag
        assert len({sl2diag, sl2diag.rescaled(2)}) == 2


class TestEngines:
    """Tests for the multiplicity engines"""

    def test_unknown_engine(self):
        """Test engine lookup"""
        with pytest.raises(ValueError, match="Unknown engine"):
            get_engine("lattice")

    @pytest.mark.parametrize("pair_name", ["sl2diag", "su11_self", "sun1_n2"])
    def test_oracle_agrees_with_blattner(self, request, pair_name):
        """Test the symmetric-algebra oracle against the Blattner engine"""
        pair = request.getfixturevalue(pair_name)
        tau = resolve_parameter(pair, ParameterRequest()).lowest_ktype
        blattner = {w: c.multiplicity for w, c in uh0w_spectrum(pair, tau, 4, "blattner").items()}
        oracle = {w: c.multiplicity for w, c in uh0w_spectrum(pair, tau, 4, "oracle").items()}
        assert blattner == oracle

    def test_uh0w_ltypes(self, sl2diag, diag_ds):
        """Test the multiset view of the U(h0)W spectrum"""
        ltypes = uh0w_ltypes(sl2diag, diag_ds.lowest_ktype, 3)
        assert ltypes.total() == 4
        assert len(ltypes.support()) == 4

    def test_oracle_needs_holomorphic_pair(self, e6f4):
        """Test that the oracle refuses non-holomorphic pairs"""
        tau = resolve_parameter(e6f4, ParameterRequest()).lowest_ktype
        with pytest.raises(UnsupportedModelError):
            uh0w_spectrum(e6f4, tau, 1, "oracle")


class TestClassification:
    """Tests for the first-order report and minimal gradient orders"""

    def test_p_minus_weights(self, sl2diag):
        """Test one weight each for p_h^- and p_h0^- and two for p^-"""
        weights = p_minus_weights(sl2diag)
        assert len(weights["p"]) == 2
        assert len(weights["p_h"]) == 1
        assert len(weights["p_h0"]) == 1

    def test_first_order_report(self, sl2diag, diag_ds):
        """Test dimensions and the normal derivative flag on the diagonal pair"""
        report = first_order_report(sl2diag, diag_ds.lowest_ktype)
        assert report.bracket_condition is False
        assert report.dim_v1 == 2
        assert report.dim_lwh_v1 == 1
        assert len(report.rows) == 1
        row = report.rows[0]
        assert (row.in_p, row.in_p_h, row.in_p_h0) == (2, 1, 1)
        assert row.normal_derivative

    def test_gradient_order(self, sl2diag, diag_ds):
        """Test that q_u(tau) + n beta first occurs in S^n(p_h0) (x) W"""
        tau = as_ktype(sl2diag, diag_ds.lowest_ktype)
        beta = sl2diag.h0_noncompact_positive_weights[0]
        base = sl2diag.qu_restrict(tau.weight)
        for n in range(3):
            target = HighestWeight(base + beta * n, sl2diag.l_group)
            assert minimal_gradient_order(sl2diag, tau, target, max_n=3) == n

    def test_gradient_order_not_found(self, sl2diag, diag_ds):
        """Test that out-of-reach L-types report None"""
        tau = as_ktype(sl2diag, diag_ds.lowest_ktype)
        beta = sl2diag.h0_noncompact_positive_weights[0]
        target = HighestWeight(sl2diag.qu_restrict(tau.weight) + beta * 3, sl2diag.l_group)
        assert minimal_gradient_order(sl2diag, tau, target, max_n=2) is None

    def test_classify_sbo(self, sl2diag, diag_ds):
        """Test the combined report"""
        report = classify_sbo(sl2diag, diag_ds.lowest_ktype, max_n=2)
        assert report.bracket_condition is False
        assert [o.order for o in report.gradient_orders] == [1]

"""
Tests for the branchlab command line
"""
import csv
import io
import json
import sys
from dataclasses import replace
from fractions import Fraction

import pytest

from branchlab.branchdual import branch as compute_branch
from branchlab.branchdual.table import Diagnostic
from branchlab.cli.main import main
from branchlab.cli.params import ParameterRequest, parse_labels, resolve_pair, resolve_parameter
from branchlab.cli.render import render_float, to_json
from branchlab.cli.suites import SuiteOptions, run_suite
from branchlab.errors import BranchlabError
from branchlab.models import (
    BranchingTableModel,
    CheckResultModel,
    ClassificationModel,
    Status,
    SuiteResultModel,
)

pytestmark = pytest.mark.usefixtures("no_log_file")


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


class TestCatalogCommand:
    """Tests for `branchlab catalog`"""

    def test_table(self, capsys):
        """Test the default listing"""
        code, out = run(capsys, "catalog")
        assert code == 0
        assert "e6f4" in out
        assert "sl2diag" in out

    def test_json(self, capsys):
        """Test the JSON listing"""
        code, out = run(capsys, "catalog", "--format", "json")
        rows = json.loads(out)
        assert code == 0
        assert {r["id"] for r in rows} >= {"e6f4", "su11_self", "spin2m2_m3"}
        e6f4 = next(r for r in rows if r["id"] == "e6f4")
        assert e6f4["admissible_systems"] == ["bds"]


class TestBranchCommand:
    """Tests for `branchlab branch`"""

    def test_diagonal_csv(self, capsys):
        """Test the su(1,1) diagonal rows lambda + lambda' + 2n"""
        code, out = run(capsys, "branch", "--pair", "su11su11_diag", "--lambda", "2", "--lambda2", "3",
                        "--cutoff", "3", "--format", "csv")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [r["lowest_ltype"] for r in rows] == ["(5)", "(7)", "(9)", "(11)"]
        assert [r["degree"] for r in rows] == ["0", "1", "2", "3"]
        assert {r["multiplicity"] for r in rows} == {"1"}

    def test_json_reloads(self, capsys):
        """Test that JSON output validates against the table model"""
        code, out = run(capsys, "branch", "--pair", "sl2diag", "--cutoff", "2", "--format", "json")
        assert code == 0
        table = BranchingTableModel.model_validate_json(out)
        assert table.pair == "su11su11_diag"
        assert table.engine == "blattner"
        assert len(table.entries) == 3

    def test_table_header(self, capsys):
        """Test the human-readable rendering"""
        code, out = run(capsys, "branch", "--pair", "su11_self", "--lambda", "3", "--cutoff", "1")
        assert code == 0
        assert "pair: su11_self" in out
        assert "complete below cutoff: true" in out

    def test_oracle_engine(self, capsys):
        """Test the oracle engine on a holomorphic pair"""
        code, out = run(capsys, "branch", "--pair", "sl2diag", "--cutoff", "2", "--engine", "oracle",
                        "--format", "json")
        assert code == 0
        assert BranchingTableModel.model_validate_json(out).engine == "oracle"

    def test_unknown_pair(self, capsys):
        """Test exit code 1 for an unknown pair"""
        code, _ = run(capsys, "branch", "--pair", "g2split")
        assert code == 1

    def test_series_without_member(self, capsys):
        """Test exit code 1 when --m is missing"""
        code, _ = run(capsys, "branch", "--pair", "spin2m2", "--hc", "2,1,1")
        assert code == 1

    def test_inadmissible(self, capsys):
        """Test exit code 2 for the holomorphic system of so(4,2)"""
        code, _ = run(capsys, "branch", "--pair", "spin2m2", "--m", "2", "--hc", "1,-2,4", "--system", "hol")
        assert code == 2

    def test_singular_parameter(self, capsys):
        """Test exit code 1 for a singular parameter"""
        code, _ = run(capsys, "branch", "--pair", "spin2m2", "--m", "2", "--hc", "0,0,0")
        assert code == 1

    def test_wrong_label_count(self, capsys):
        """Test exit code 1 when the labels do not match the rank"""
        code, _ = run(capsys, "branch", "--pair", "e6f4", "--hc", "1,1")
        assert code == 1

    def test_negative_cutoff(self, capsys):
        """Test exit code 1 for a negative cutoff"""
        code, _ = run(capsys, "branch", "--pair", "sl2diag", "--cutoff", "-1")
        assert code == 1

    @pytest.fixture
    def incomplete_branch(self, monkeypatch):
        """Move the first entry of every computed table to the diagnostics channel"""
        def branch_with_diagnostic(pair, ds, cutoff=None, engine="blattner"):
            table = compute_branch(pair, ds, cutoff=cutoff, engine=engine)
            first = table.entries[0]
            diagnostic = Diagnostic(first.lowest_ltype, first.multiplicity, first.discovery_degree,
                                    "singular H-parameter")
            return replace(table, entries=table.entries[1:], diagnostics=(diagnostic,), complete_below_cutoff=False)

        monkeypatch.setattr(sys.modules["branchlab.cli.main"], "branch", branch_with_diagnostic)

    def test_strict_incomplete(self, capsys, incomplete_branch):
        """Test exit code 3 for an incomplete table under --strict"""
        code, out = run(capsys, "branch", "--pair", "sl2diag", "--cutoff", "2", "--strict")
        assert code == 3
        assert "complete below cutoff: false" in out
        assert "diagnostics:" in out

    def test_incomplete_without_strict(self, capsys, incomplete_branch):
        """Test that an incomplete table still exits 0 without --strict"""
        code, out = run(capsys, "branch", "--pair", "sl2diag", "--cutoff", "2")
        assert code == 0
        assert "singular H-parameter" in out

    def test_strict_complete(self, capsys):
        """Test that --strict accepts a complete table"""
        code, _ = run(capsys, "branch", "--pair", "sl2diag", "--cutoff", "2", "--strict")
        assert code == 0


class TestClassifyCommand:
    """Tests for `branchlab classify-sbo`"""

    def test_diagonal(self, capsys):
        """Test the report on the diagonal pair"""
        code, out = run(capsys, "classify-sbo", "--pair", "sl2diag", "--lambda", "2", "--lambda2", "3",
                        "--format", "json")
        assert code == 0
        report = ClassificationModel.model_validate_json(out)
        assert report.bracket_condition is False
        assert report.first_order.dim_v1 == 2
        assert [o.order for o in report.gradient_orders] == [1]

    def test_non_holomorphic(self, capsys):
        """Test that classification needs a holomorphic pair"""
        code, _ = run(capsys, "classify-sbo", "--pair", "e6f4")
        assert code == 1


class TestVerifyCommand:
    """Tests for `branchlab verify`"""

    def test_bracket(self, capsys):
        """Test the bracket suite"""
        code, out = run(capsys, "verify", "bracket")
        assert code == 0
        assert "bracket: PASS" in out

    def test_json(self, capsys):
        """Test suite results as JSON"""
        code, out = run(capsys, "verify", "oracle", "--quick", "--format", "json")
        result = SuiteResultModel.model_validate_json(out)
        assert code == 0
        assert result.quick
        assert result.status == Status.PASS

    def test_duality_quick(self, capsys):
        """Test that non-scalar tau gets the dimension check without Gram determinants"""
        code, out = run(capsys, "verify", "duality", "--quick", "--format", "json")
        result = SuiteResultModel.model_validate_json(out)
        names = [c.name for c in result.checks]
        assert code == 0
        assert result.status == Status.PASS
        assert "dims sun1_un11_n2/sym" in names
        assert "gram sun1_un11_n2/sym" not in names
        assert "gram sun1_un11_n2/scalar" in names

    def test_structure_samples_e6(self):
        """Test the seeded E6 Jacobi check of the structure suite"""
        result = run_suite("structure", SuiteOptions(quick=True))
        e6 = next(c for c in result.checks if c.name == "jacobi E6 (sampled)")
        assert e6.status == Status.PASS
        assert result.status == Status.PASS

    def test_unknown_suite(self):
        """Test that argparse refuses unknown suites"""
        with pytest.raises(SystemExit):
            main(["verify", "nope"])

    def test_run_suite_unknown(self):
        """Test the library entry point"""
        with pytest.raises(BranchlabError, match="Unknown suite"):
            run_suite("nope")

    @pytest.mark.slow
    def test_all_quick(self):
        """Test every suite in quick mode"""
        result = run_suite("all", SuiteOptions(quick=True, samples=3))
        failed = [c.name for c in result.checks if c.status == Status.FAIL]
        assert not failed
        assert all(":" in c.name for c in result.checks)


class TestParams:
    """Tests for parameter resolution"""

    def test_parse_labels(self):
        """Test comma-separated rational labels"""
        assert parse_labels("1, 1/2,3") == [1, Fraction(1, 2), 3]

    def test_empty_labels(self):
        """Test that an empty list is refused"""
        with pytest.raises(BranchlabError):
            parse_labels(" , ")

    def test_hc_and_ktype_exclusive(self, sl2diag):
        """Test that --hc and --ktype cannot be combined"""
        with pytest.raises(BranchlabError, match="not both"):
            resolve_parameter(sl2diag, ParameterRequest(hc="3,3", ktype="2,2"))

    def test_missing_variable(self, tmp_path):
        """Test that a family variable without default names its flag"""
        from branchlab.sympair.catalog import BUILTIN_CATALOG, load_catalog
        from branchlab.sympair.pair import build_pair

        document = json.loads(BUILTIN_CATALOG.read_text(encoding="utf-8"))
        entry = next(p for p in document["pairs"] if p["id"] == "su11_self")
        entry["id"] = "su11_nodefault"
        entry["parameters"][0]["defaults"] = {}
        path = tmp_path / "extra.json"
        path.write_text(json.dumps({"version": 1, "pairs": [entry]}), encoding="utf-8")
        pair = build_pair("su11_nodefault", catalog=load_catalog(extra_paths=[path]))
        with pytest.raises(BranchlabError, match="--lambda"):
            resolve_parameter(pair, ParameterRequest())

    def test_series_member(self):
        """Test that --m selects the spin series member"""
        pair = resolve_pair("spin2m2", ParameterRequest(values={"m": 3}))
        assert pair.id == "spin2m2_m3"


class TestRender:
    """Tests for report rendering"""

    def test_float_digits(self):
        """Test 12 significant digits"""
        assert render_float(1 / 3) == "0.333333333333"

    def test_json_rounds_floats(self):
        """Test that JSON floats are cut to the configured digits"""
        model = CheckResultModel(name="x", status=Status.PASS, max_residual=1 / 3)
        assert json.loads(to_json(model))["max_residual"] == 0.333333333333

    def test_suite_pass_with_failure_rejected(self):
        """Test the suite model consistency check"""
        with pytest.raises(ValueError):
            SuiteResultModel(suite="x", quick=False, status=Status.PASS,
                             checks=[CheckResultModel(name="c", status=Status.FAIL)])

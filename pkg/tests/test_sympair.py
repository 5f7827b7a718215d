"""
Unit tests for the pair catalog and symmetric pair data
"""
import json
from fractions import Fraction

import pytest
from pydantic import ValidationError

from branchlab.errors import CatalogError, UnknownPairError, UnsupportedModelError
from branchlab.sympair import (
    SigmaEntry,
    bracket_condition,
    build_pair,
    evaluate_labels,
    is_admissible,
    load_catalog,
    read_catalog_file,
    split_p,
)
from branchlab.sympair.catalog import BUILTIN_CATALOG


def _builtin_entry(pair_id):
    document = json.loads(BUILTIN_CATALOG.read_text(encoding="utf-8"))
    return next(p for p in document["pairs"] if p["id"] == pair_id)


def _write_catalog(path, pairs, version=1):
    path.write_text(json.dumps({"version": version, "pairs": pairs}), encoding="utf-8")
    return path


class TestCatalog:
    """Tests for loading and resolving catalog entries"""

    def test_builtin_ids(self):
        """Test that the built-in catalog lists the expected pairs"""
        ids = load_catalog(extra_paths=[]).ids()
        for pair_id in ("e6f4", "spin2m2_m2", "spin2m2_m3", "su11su11_diag", "su11_self", "sun1_un11_n2"):
            assert pair_id in ids

    def test_resolve_alias(self):
        """Test alias lookup"""
        catalog = load_catalog(extra_paths=[])
        assert catalog.resolve("sl2diag").id == "su11su11_diag"

    def test_resolve_series_member(self):
        """Test series names with a family parameter"""
        catalog = load_catalog(extra_paths=[])
        assert catalog.resolve("spin2m2", {"m": 3}).id == "spin2m2_m3"

    def test_series_needs_parameter(self):
        """Test that a series name without its parameter is refused"""
        catalog = load_catalog(extra_paths=[])
        with pytest.raises(UnknownPairError, match="needs --m"):
            catalog.resolve("spin2m2")

    def test_series_member_missing(self):
        """Test an out-of-range series member"""
        catalog = load_catalog(extra_paths=[])
        with pytest.raises(UnknownPairError, match="no member"):
            catalog.resolve("spin2m2", {"m": 9})

    def test_unknown_pair(self):
        """Test that unknown identifiers raise UnknownPairError"""
        with pytest.raises(UnknownPairError, match="Unknown pair"):
            build_pair("so82")

    def test_first_family_is_default(self):
        """Test PairEntry.family_entry without a name"""
        catalog = load_catalog(extra_paths=[])
        assert catalog.resolve("e6f4").family_entry().name == "quaternionic"
        assert catalog.resolve("sun1_un11_n2").family_entry("sym").variables == ["a", "lam"]

    def test_missing_family(self):
        """Test that spin pairs declare no parameter family"""
        catalog = load_catalog(extra_paths=[])
        with pytest.raises(CatalogError, match="no parameter family"):
            catalog.resolve("spin2m2", {"m": 2}).family_entry()

    def test_extra_catalog_file(self, tmp_path):
        """Test that extra files add pairs"""
        entry = _builtin_entry("su11_self")
        entry["id"] = "su11_copy"
        catalog = load_catalog(extra_paths=[_write_catalog(tmp_path / "extra.json", [entry])])
        pair = build_pair("su11_copy", catalog=catalog)
        assert pair.holomorphic_pair
        assert pair.flags["holomorphic"] is True

    def test_duplicate_id(self, tmp_path):
        """Test that an extra file cannot redefine a built-in pair"""
        path = _write_catalog(tmp_path / "dup.json", [_builtin_entry("su11_self")])
        with pytest.raises(CatalogError, match="Duplicate pair id"):
            load_catalog(extra_paths=[path])

    def test_missing_file(self, tmp_path):
        """Test a missing catalog file"""
        with pytest.raises(CatalogError, match="not found"):
            read_catalog_file(tmp_path / "absent.json")

    def test_invalid_json(self, tmp_path):
        """Test a malformed catalog file"""
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(CatalogError, match="not valid JSON"):
            read_catalog_file(path)

    def test_wrong_version(self, tmp_path):
        """Test the schema version check"""
        path = _write_catalog(tmp_path / "v2.json", [], version=2)
        with pytest.raises(CatalogError, match="failed validation"):
            read_catalog_file(path)

    def test_sigma_must_be_involution(self):
        """Test that a 3-cycle is not accepted as sigma"""
        with pytest.raises(ValidationError):
            SigmaEntry(permutation=[2, 3, 1], signs=[1, 1, 1])


class TestEvaluateLabels:
    """Tests for label expressions"""

    def test_substitution(self):
        """Test family variables inside label expressions"""
        assert evaluate_labels(["1", "n/2", "lam+1"], {"n": 3, "lam": 2}) == [1, Fraction(3, 2), 3]

    def test_symbolic_rejected(self):
        """Test that unbound variables are refused"""
        with pytest.raises(CatalogError, match="does not evaluate"):
            evaluate_labels(["n/2"], {})

    def test_unparsable_rejected(self):
        """Test that garbage expressions are refused"""
        with pytest.raises(CatalogError):
            evaluate_labels(["1/"], {})


class TestSymmetricPair:
    """Tests for involution data, q_u and root partitions"""

    def test_build_pair_is_cached(self):
        """Test that built-in pairs are built once"""
        assert build_pair("e6f4") is build_pair("e6f4")

    def test_diagonal_h0_weight(self, sl2diag):
        """Test that p_h0^- of the diagonal pair has the single weight (alpha1 + alpha2)/2"""
        a1, a2 = sl2diag.ambient.simple_roots
        assert sl2diag.h0_noncompact_positive_weights == [(a1 + a2) / 2]
        assert sl2diag.qu_restrict(a1) == (a1 + a2) / 2

    def test_diagonal_l_is_a_torus(self, sl2diag):
        """Test that l has no roots for the diagonal pair"""
        assert sl2diag.l_roots == []
        assert sl2diag.l_group.positives == ()

    def test_e6_partitions(self, e6f4):
        """Test root counts of l, p_h and p_h0 for (e6(2), f4(4))"""
        assert len(e6f4.ambient.roots) == 72
        assert not e6f4.holomorphic_pair
        assert e6f4.h0_noncompact

    def test_sigma_is_involution(self, e6f4):
        """Test sigma* squared is the identity on roots"""
        assert all(e6f4.sigma_root(e6f4.sigma_root(r)) == r for r in e6f4.ambient.roots)

    def test_qu_is_idempotent(self, e6f4):
        """Test q_u(q_u(mu)) = q_u(mu)"""
        for root in e6f4.ambient.simple_roots:
            once = e6f4.qu_restrict(root)
            assert e6f4.qu_restrict(once) == once

    def test_unknown_system(self, spin_m2):
        """Test for_system with an undeclared name"""
        with pytest.raises(CatalogError, match="no cataloged system"):
            spin_m2.for_system("nope")

    def test_admissibility(self, spin_m2):
        """Test catalog admissibility of the spin systems"""
        assert is_admissible(spin_m2, spin_m2.systems["plus"]) is True
        assert is_admissible(spin_m2, spin_m2.systems["minus"]) is True
        assert is_admissible(spin_m2, spin_m2.systems["hol"]) is False

    def test_split_p_dimensions(self, sun1_n2):
        """Test that p_h and p_h0 together span p"""
        pieces = split_p(sun1_n2)
        total = sum(len(v) for v in pieces.values())
        assert total == 2 * len(sun1_n2.system.noncompact_positives)
        assert len(pieces["p_h0_plus"]) == len(pieces["p_h0_minus"])

    def test_split_p_needs_holomorphic_pair(self, e6f4):
        """Test that non-holomorphic pairs have no signed splitting"""
        with pytest.raises(UnsupportedModelError):
            split_p(e6f4)


class TestBracketCondition:
    """Tests for [[p_h0^+, p_h^-], p_h0^+] = 0"""

    @pytest.mark.parametrize("pair_id,expected", [
        ("su11su11_diag", False),
        ("su11_self", True),
        ("sun1_un11_n2", True),
        ("sun1_un11_n3", True),
    ])
    def test_expected_values(self, pair_id, expected):
        """Test the bracket condition on the holomorphic pairs of the catalog"""
        assert bracket_condition(build_pair(pair_id)) is expected

    def test_non_holomorphic(self, e6f4):
        """Test that the condition is undefined without a holomorphic splitting"""
        with pytest.raises(UnsupportedModelError):
            bracket_condition(e6f4)

"""
Branching laws of discrete series through the duality with U(h0)W
"""
from branchlab.branchdual.duality import as_ktype, branch, get_engine, source_roots, uh0w_ltypes, uh0w_spectrum
from branchlab.branchdual.engines import ENGINES, BlattnerEngine, LTypeCount, MultiplicityEngine, SymmetricAlgebraEngine
from branchlab.branchdual.gradient import minimal_gradient_order, p_h0_weights
from branchlab.branchdual.params import DiscreteSeriesParam, ds_from_hc, ds_from_lowest_ktype
from branchlab.branchdual.report import classify_sbo, first_order_report, p_minus_weights
from branchlab.branchdual.table import BranchEntry, BranchingTable, Diagnostic, weight_labels, weight_model

__all__ = [
    "BlattnerEngine",
    "BranchEntry",
    "BranchingTable",
    "Diagnostic",
    "DiscreteSeriesParam",
    "ENGINES",
    "LTypeCount",
    "MultiplicityEngine",
    "SymmetricAlgebraEngine",
    "as_ktype",
    "branch",
    "classify_sbo",
    "ds_from_hc",
    "ds_from_lowest_ktype",
    "first_order_report",
    "get_engine",
    "minimal_gradient_order",
    "p_h0_weights",
    "p_minus_weights",
    "source_roots",
    "uh0w_ltypes",
    "uh0w_spectrum",
    "weight_labels",
    "weight_model",
]

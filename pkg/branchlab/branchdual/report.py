"""
First-order comparison and symmetry breaking classification reports
"""
from collections import Counter
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from branchlab.branchdual.duality import as_ktype
from branchlab.branchdual.gradient import minimal_gradient_order
from branchlab.branchdual.table import weight_model
from branchlab.compactrep.characters import (
    HighestWeight,
    IrrepDecomposition,
    character,
    decompose,
    restrict_character,
    tensor_character,
)
from branchlab.errors import UnsupportedModelError
from branchlab.holomodel import degree_piece_dim, holomorphic_model, lwh_subspace, uh0w_subspace
from branchlab.models import ClassificationModel, FirstOrderReportModel, FirstOrderRowModel, GradientOrderModel
from branchlab.rootsys.weight import Weight
from branchlab.sympair.pair import SymmetricPairDatum, bracket_condition


def p_minus_weights(pair: SymmetricPairDatum) -> Dict[str, List[Weight]]:
    """L-weights of p^-, p_h^- and p_h0^- (one per spanning vector)"""
    p_h_minus = []
    for root, image in pair.noncompact_orbits():
        if image is not None or pair.root_sign(root) == 1:
            p_h_minus.append(pair.qu_restrict(root))
    return {
        "p": [pair.qu_restrict(root) for root in pair.system.noncompact_positives],
        "p_h": p_h_minus,
        "p_h0": list(pair.h0_noncompact_positive_weights),
    }


def _decompose_tensor(pair: SymmetricPairDatum, weights: Sequence[Weight], w_char: Counter) -> IrrepDecomposition:
    return decompose(tensor_character(Counter(weights), w_char), pair.l_group)


def _model_dimensions(pair: SymmetricPairDatum, tau: HighestWeight) -> Dict[str, Optional[int]]:
    try:
        model = holomorphic_model(pair, tau)
    except UnsupportedModelError as e:
        logger.debug(f"No polynomial model for {tau.render()} on {pair.id}: {e}")
        return {}
    lwh = lwh_subspace(model, 1)
    uh0w = uh0w_subspace(model, 1)
    return {
        "dim_v1": degree_piece_dim(model, 1),
        "dim_lwh_v1": lwh.dim(1),
        "dim_uh0w_lwh_v1": lwh.intersection_dim(uh0w, 1),
    }


def _first_order_pieces(pair: SymmetricPairDatum, tau: HighestWeight) -> Tuple[Dict[str, IrrepDecomposition], List[Weight]]:
    w_char = restrict_character(character(tau), pair.qu_restrict)
    pieces = {name: _decompose_tensor(pair, weights, w_char) for name, weights in p_minus_weights(pair).items()}
    ltypes = sorted({w for d in pieces.values() for w in d.highest_weights()}, key=lambda w: w.sort_key())
    return pieces, ltypes


def first_order_report(pair: SymmetricPairDatum, tau) -> FirstOrderReportModel:
    """
    L-decompositions of p^- (x) W, p_h^- (x) W and p_h0^- (x) W.

    An L-type is flagged as reachable by a normal derivative when it occurs in
    p_h0^- (x) W. When the polynomial model supports tau the report also
    carries the dimensions of V^(1), L_{W,H} in V^(1) and U(h0)W in L_{W,H} in V^(1).

    Raises:
        UnsupportedModelError: pair without a holomorphic splitting of p
    """
    tau = as_ktype(pair, tau)
    condition = bracket_condition(pair)
    pieces, ltypes = _first_order_pieces(pair, tau)
    simple = pair.l_group.simple_roots
    rows = [
        FirstOrderRowModel(
            ltype=weight_model(w, simple),
            in_p=pieces["p"].multiplicity(w),
            in_p_h=pieces["p_h"].multiplicity(w),
            in_p_h0=pieces["p_h0"].multiplicity(w),
            normal_derivative=pieces["p_h0"].multiplicity(w) > 0,
        )
        for w in ltypes
    ]
    dims = _model_dimensions(pair, tau)
    note = "" if dims else "polynomial model unavailable for this K-type; dimensions omitted"
    logger.info(f"First-order report for {pair.id}: {len(rows)} L-types, bracket condition {condition}")
    return FirstOrderReportModel(
        pair=pair.id,
        tau=weight_model(tau.weight, pair.k_group.simple_roots),
        rows=rows,
        bracket_condition=condition,
        note=note,
        **dims,
    )


def classify_sbo(pair: SymmetricPairDatum, tau, max_n: int = 2) -> ClassificationModel:
    """Bracket condition, first-order report and the minimal gradient order of each first-order L-type"""
    tau = as_ktype(pair, tau)
    report = first_order_report(pair, tau)
    simple = pair.l_group.simple_roots
    orders = []
    _, ltypes = _first_order_pieces(pair, tau)
    for weight in ltypes:
        order = minimal_gradient_order(pair, tau, HighestWeight(weight, pair.l_group), max_n)
        orders.append(GradientOrderModel(ltype=weight_model(weight, simple), order=order, max_n=max_n))
    return ClassificationModel(
        pair=pair.id,
        tau=report.tau,
        bracket_condition=report.bracket_condition,
        first_order=report,
        gradient_orders=orders,
    )

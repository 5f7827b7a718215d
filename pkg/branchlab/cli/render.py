"""
Emitters for branching tables, catalog listings, classification reports and suite results
"""
import csv
import io
import json
from typing import Any, List, Sequence

from pydantic import BaseModel

from branchlab.config import settings
from branchlab.models import (
    BranchingTableModel,
    CatalogRowModel,
    ClassificationModel,
    OutputFormat,
    SuiteResultModel,
    WeightModel,
)


def render_float(value: float) -> str:
    return f"{value:.{settings.float_digits}g}"


def _round_floats(value: Any) -> Any:
    if isinstance(value, float):
        return float(render_float(value))
    if isinstance(value, list):
        return [_round_floats(v) for v in value]
    if isinstance(value, dict):
        return {k: _round_floats(v) for k, v in value.items()}
    return value


def to_json(model: BaseModel) -> str:
    """JSON with sorted keys; floats cut to the configured significant digits"""
    return json.dumps(_round_floats(model.model_dump(mode="json")), indent=2, sort_keys=True)


def labels(weight: WeightModel) -> str:
    return "(" + ", ".join(weight.labels or weight.coords) + ")"


def _align(header: Sequence[str], rows: List[Sequence[str]]) -> List[str]:
    widths = [max(len(str(c)) for c in column) for column in zip(header, *rows)]
    lines = ["  ".join(str(c).ljust(w) for c, w in zip(header, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    lines.extend("  ".join(str(c).ljust(w) for c, w in zip(row, widths)).rstrip() for row in rows)
    return lines


def _csv(header: Sequence[str], rows: List[Sequence[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue().rstrip("\n")


def render_table(table: BranchingTableModel, fmt: OutputFormat) -> str:
    if fmt == OutputFormat.JSON:
        return to_json(table)
    header = ["degree", "lowest_ltype", "h_param", "multiplicity"]
    rows = [[str(e.discovery_degree), labels(e.lowest_ltype), labels(e.h_param), str(e.multiplicity)]
            for e in table.entries]
    if fmt == OutputFormat.CSV:
        return _csv(header, rows)
    lines = [
        f"pair: {table.pair}  system: {table.system}  engine: {table.engine}",
        f"input HC parameter: {labels(table.input_hc)}  lowest K-type: {labels(table.input_ktype)}",
        f"cutoff: {table.cutoff}  complete below cutoff: {str(table.complete_below_cutoff).lower()}",
        "",
    ]
    lines.extend(_align(header, rows))
    if table.diagnostics:
        lines.append("")
        lines.append("diagnostics:")
        lines.extend(f"  {labels(d.ltype)} x{d.multiplicity} at degree {d.discovery_degree}: {d.reason}"
                     for d in table.diagnostics)
    return "\n".join(lines)


def render_catalog(rows: List[CatalogRowModel], fmt: OutputFormat) -> str:
    if fmt == OutputFormat.JSON:
        return json.dumps([r.model_dump(mode="json") for r in rows], indent=2, sort_keys=True)
    header = ["id", "aliases", "title", "h0", "type", "holomorphic", "admissible", "provenance"]
    body = [
        [r.id, " ".join(r.aliases), r.title, r.h0, r.ambient_type, str(r.holomorphic_pair).lower(),
         " ".join(r.admissible_systems), r.provenance]
        for r in rows
    ]
    if fmt == OutputFormat.CSV:
        return _csv(header, body)
    return "\n".join(_align(header, body))


def render_classification(report: ClassificationModel, fmt: OutputFormat) -> str:
    if fmt == OutputFormat.JSON:
        return to_json(report)
    first = report.first_order
    header = ["ltype", "p", "p_h", "p_h0", "normal_derivative", "gradient_order"]
    orders = {labels(o.ltype): o for o in report.gradient_orders}
    rows = []
    for row in first.rows:
        key = labels(row.ltype)
        order = orders.get(key)
        shown = "-" if order is None else (f">{order.max_n}" if order.order is None else str(order.order))
        rows.append([key, str(row.in_p), str(row.in_p_h), str(row.in_p_h0), str(row.normal_derivative).lower(), shown])
    if fmt == OutputFormat.CSV:
        return _csv(header, rows)
    lines = [
        f"pair: {report.pair}  tau: {labels(report.tau)}",
        f"bracket condition [[p_h0+, p_h-], p_h0+] = 0: {str(report.bracket_condition).lower()}",
    ]
    if first.dim_v1 is not None:
        lines.append(f"dim V(1): {first.dim_v1}  dim L_WH(1): {first.dim_lwh_v1}  "
                     f"dim U(h0)W in L_WH(1): {first.dim_uh0w_lwh_v1}")
    if first.note:
        lines.append(f"note: {first.note}")
    lines.append("")
    lines.extend(_align(header, rows))
    return "\n".join(lines)


def render_suite(result: SuiteResultModel, fmt: OutputFormat) -> str:
    if fmt == OutputFormat.JSON:
        return to_json(result)
    header = ["check", "status", "max_residual", "detail"]
    rows = [[c.name, c.status.value, "" if c.max_residual is None else render_float(c.max_residual), c.detail]
            for c in result.checks]
    if fmt == OutputFormat.CSV:
        return _csv(header, rows)
    lines = _align(header, rows)
    mode = " (quick)" if result.quick else ""
    lines.append("")
    lines.append(f"{result.suite}{mode}: {result.status.value}")
    return "\n".join(lines)

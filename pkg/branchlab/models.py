"""
Data models and schemas for branchlab reports
"""
from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field, model_validator


class OutputFormat(str, Enum):
    """Supported renderings of a report"""
    TABLE = "table"
    JSON = "json"
    CSV = "csv"


class Status(str, Enum):
    """Verification outcome"""
    PASS = "PASS"
    FAIL = "FAIL"


class WeightModel(BaseModel):
    """Exact weight: epsilon coordinates and Dynkin labels, rendered as "p/q" strings"""
    coords: List[str] = Field(..., description="Orthogonal coordinates")
    labels: List[str] = Field(default_factory=list, description="Dynkin labels w.r.t. the relevant simple roots")


class BranchEntryModel(BaseModel):
    """One H-discrete series in a branching table"""
    lowest_ltype: WeightModel = Field(..., description="Lowest L-type highest weight (the key of the entry)")
    h_param: WeightModel = Field(..., description="Harish-Chandra parameter of the H-discrete series")
    multiplicity: int = Field(..., ge=1)
    discovery_degree: int = Field(..., ge=0, description="Least h0-degree where the L-type occurs")


class DiagnosticModel(BaseModel):
    """L-type of U(h0)W that is not the lowest L-type of an H-discrete series"""
    ltype: WeightModel
    multiplicity: int = Field(..., ge=1)
    discovery_degree: int = Field(..., ge=0)
    reason: str


class BranchingTableModel(BaseModel):
    """Serialized BranchingTable"""
    pair: str = Field(..., description="Catalog identifier")
    system: str = Field(..., description="Cataloged positive system of the input")
    engine: str = Field(..., description="Multiplicity engine used")
    input_hc: WeightModel
    input_ktype: WeightModel
    cutoff: int = Field(..., ge=0)
    complete_below_cutoff: bool
    entries: List[BranchEntryModel] = Field(default_factory=list)
    diagnostics: List[DiagnosticModel] = Field(default_factory=list)

    @model_validator(mode='after')
    def validate_entries(self):
        keys = [tuple(e.lowest_ltype.coords) for e in self.entries]
        if len(set(keys)) != len(keys):
            raise ValueError("Duplicate lowest L-type in branching table")
        degrees = [e.discovery_degree for e in self.entries]
        if degrees != sorted(degrees):
            raise ValueError("Branching table entries must be sorted by discovery degree")
        if any(d > self.cutoff for d in degrees):
            raise ValueError("Entry beyond the table cutoff")
        return self


class FirstOrderRowModel(BaseModel):
    """Multiplicities of one L-type in p^- (x) W, p_h^- (x) W and p_h0^- (x) W"""
    ltype: WeightModel
    in_p: int = Field(..., ge=0)
    in_p_h: int = Field(..., ge=0)
    in_p_h0: int = Field(..., ge=0)
    normal_derivative: bool = Field(..., description="Reachable by a first-order normal derivative")


class FirstOrderReportModel(BaseModel):
    """Degree-one comparison for a holomorphic pair"""
    pair: str
    tau: WeightModel
    rows: List[FirstOrderRowModel] = Field(default_factory=list)
    bracket_condition: bool
    dim_v1: Optional[int] = Field(None, description="dim of the degree-one piece V^(1)")
    dim_lwh_v1: Optional[int] = Field(None, description="dim of L_{W,H} in V^(1)")
    dim_uh0w_lwh_v1: Optional[int] = Field(None, description="dim of U(h0)W in L_{W,H} in V^(1)")
    note: str = ""


class GradientOrderModel(BaseModel):
    """Minimal gradient order of one L-type"""
    ltype: WeightModel
    order: Optional[int] = Field(None, description="Least n, or null when not found up to max_n")
    max_n: int


class ClassificationModel(BaseModel):
    """classify-sbo report"""
    pair: str
    tau: WeightModel
    bracket_condition: bool
    first_order: FirstOrderReportModel
    gradient_orders: List[GradientOrderModel] = Field(default_factory=list)


class ResidualReportModel(BaseModel):
    """Residuals of a numerical kernel identity"""
    check: str
    lam: int
    lam2: int
    n: int
    truncation: int
    seed: int
    samples: int
    residuals: List[float] = Field(default_factory=list)
    max_residual: float
    tail_estimate: float
    tolerance: float
    passed: bool
    informational: Optional[float] = Field(None, description="Deviation from the holomorphic holographic kernel")


class CheckResultModel(BaseModel):
    """One check inside a verification suite"""
    name: str
    status: Status
    detail: str = ""
    max_residual: Optional[float] = None


class SuiteResultModel(BaseModel):
    """Outcome of a verification suite"""
    suite: str
    quick: bool
    status: Status
    checks: List[CheckResultModel] = Field(default_factory=list)

    @model_validator(mode='after')
    def validate_status(self):
        failed = any(c.status == Status.FAIL for c in self.checks)
        if failed and self.status == Status.PASS:
            raise ValueError("Suite marked PASS with failing checks")
        return self


class CatalogRowModel(BaseModel):
    """One line of the catalog listing"""
    id: str
    aliases: List[str] = Field(default_factory=list)
    title: str
    h0: str
    ambient_type: str
    holomorphic_pair: bool
    systems: List[str]
    admissible_systems: List[str]
    provenance: str

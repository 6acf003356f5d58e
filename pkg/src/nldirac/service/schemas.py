"""Pydantic request/response models of the simulation service."""

import math
from typing import List, Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

FIG1_TIMES = [0.0, 0.5, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0]

ModeName = Literal[
    "general-quartic",
    "thirring",
    "gross-neveu",
    "spin-symmetric",
    "pseudo-spin-symmetric",
    "pseudo-scalar",
]


class GridSchema(BaseModel):
    x_min: float = -40.0
    x_max: float = 40.0
    n_points: int = Field(default=1024, ge=8)

    @model_validator(mode="after")
    def _ordered(self):
        if not (math.isfinite(self.x_min) and math.isfinite(self.x_max)):
            raise ValueError("grid endpoints must be finite")
        if self.x_max <= self.x_min:
            raise ValueError("x_max must exceed x_min")
        return self


class CouplingSchema(BaseModel):
    """Named coupling mode plus its parameters."""

    mode: ModeName = "spin-symmetric"
    m: float = 1.0
    alpha: float = 0.5
    alpha_s: float = 0.0
    alpha_v: float = 0.0
    alpha_w: float = 0.0
    alpha_sw: float = 0.0

    @field_validator("m", "alpha", "alpha_s", "alpha_v", "alpha_w", "alpha_sw")
    @classmethod
    def _finite(cls, value):
        if not math.isfinite(value):
            raise ValueError("coupling parameters must be finite")
        return value


class InitialStateSchema(BaseModel):
    a_plus: float = 1.0
    a_minus: float = -1.0
    mu: float = Field(default=1.0, gt=0.0)


class RunRequest(BaseModel):
    coupling: CouplingSchema = CouplingSchema()
    grid: GridSchema = GridSchema()
    initial: InitialStateSchema = InitialStateSchema()
    scheme: Literal["rk4", "strang"] = "rk4"
    dt: float = Field(default=1e-3, gt=0.0)
    t_final: float = Field(default=6.0, ge=0.0)
    snapshot_times: List[float] = Field(default_factory=lambda: list(FIG1_TIMES))
    diagnostics_stride: int = Field(default=50, ge=1)
    include_fields: bool = True


class SnapshotSchema(BaseModel):
    t: float
    re_plus: List[float]
    im_plus: List[float]
    re_minus: List[float]
    im_minus: List[float]


class DiagnosticsPointSchema(BaseModel):
    t: float
    charge: float
    energy: float
    momentum: float
    max_amp: float


class ConservationSummary(BaseModel):
    charge_drift_rel: float
    energy_drift_rel: float
    momentum_max_abs: float


class RunMetadata(BaseModel):
    version: str
    units: str
    scheme: str
    dt: float
    steps: int
    warnings: List[str]


class RunResponse(BaseModel):
    x: List[float]
    grid: GridSchema
    snapshots: List[SnapshotSchema]
    diagnostics: List[DiagnosticsPointSchema]
    summary: ConservationSummary
    metadata: RunMetadata


class StationaryRequest(BaseModel):
    coupling: CouplingSchema = CouplingSchema()
    omega: float = 0.8
    tolerance: float = Field(default=1e-8, gt=0.0)
    grid: Optional[GridSchema] = None
    verify: bool = True
    verify_t_final: float = Field(default=5.0, gt=0.0)


class StationarityReport(BaseModel):
    max_modulus_drift: float
    max_phase_error: float
    t_final: float


class StationaryResponse(BaseModel):
    omega: float
    a0: float
    kappa: float
    residual: float
    grid: GridSchema
    x: List[float]
    profile_plus: List[float]
    profile_minus: List[float]
    report: Optional[StationarityReport] = None


class ExponentRow(BaseModel):
    field_kind: Literal["scalar", "spinor"]
    dimension: int
    conformal_degree: str
    exponent: str  # exact rational, or "divergent"


class ExponentsResponse(BaseModel):
    rows: List[ExponentRow]
    quartic_terms: List[dict]


class CheckRequest(BaseModel):
    names: Optional[List[str]] = None


class CheckResultSchema(BaseModel):
    name: str
    passed: bool
    detail: str
    elapsed_s: float


class CheckResponse(BaseModel):
    passed: bool
    results: List[CheckResultSchema]


class ErrorDetail(BaseModel):
    type: str
    message: str
    last_good_time: Optional[float] = None

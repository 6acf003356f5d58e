"""FastAPI service wrapping the simulation core.

Endpoints:
    GET  /health      liveness probe
    POST /run         evolve an initial state, return snapshots + diagnostics
    POST /stationary  shoot for a solitary-wave profile
    GET  /exponents   conformal-degree / nonlinearity-exponent table
    POST /check       run the built-in invariant suite

Domain errors map to structured HTTP errors: invalid configuration is
400, an unsupported or solution-less request 409, numerical blow-up 422.
"""

import numpy as np
from fastapi import FastAPI, HTTPException

from .. import __version__, checks
from ..conformal import DIVERGENT, exponent_table, quartic_terms_1p1
from ..dynamics import CouplingMode, ModePreset, preset_to_coupling
from ..errors import (
    InvalidParameterError,
    NldiracError,
    NoSolutionFoundError,
    NumericalBlowupError,
    UnsupportedModeError,
)
from ..evolution import EvolveSpec, Scheme, evolve
from ..fields import initial_state
from ..grids import Grid
from ..snapshots import UNITS_NOTE
from ..stationary import shoot, verify_stationarity
from . import schemas


def coupling_from_schema(schema: schemas.CouplingSchema):
    mode = CouplingMode(schema.mode)
    preset = ModePreset(
        mode,
        m=schema.m,
        alpha=schema.alpha,
        alpha_s=schema.alpha_s,
        alpha_v=schema.alpha_v,
        alpha_w=schema.alpha_w,
        alpha_sw=schema.alpha_sw,
    )
    return preset_to_coupling(preset)


def grid_from_schema(schema: schemas.GridSchema) -> Grid:
    return Grid(schema.x_min, schema.x_max, schema.n_points)


def _http_error(status: int, err_type: str, message: str, **extra):
    detail = {"type": err_type, "message": message}
    detail.update(extra)
    return HTTPException(status_code=status, detail=detail)


def execute_run(request: schemas.RunRequest) -> schemas.RunResponse:
    """Run one evolution; shared by the HTTP handler and the CLI client."""
    try:
        coupling = coupling_from_schema(request.coupling)
        grid = grid_from_schema(request.grid)
        field = initial_state(
            grid, request.initial.a_plus, request.initial.a_minus, request.initial.mu
        )
        spec = EvolveSpec(
            dt=request.dt,
            t_final=request.t_final,
            snapshot_times=tuple(request.snapshot_times),
            scheme=Scheme(request.scheme),
            diagnostics_stride=request.diagnostics_stride,
        )
    except (InvalidParameterError, UnsupportedModeError, ValueError) as exc:
        raise _http_error(400, "invalid-config", str(exc)) from exc

    try:
        trajectory = evolve(field, coupling, spec)
    except NumericalBlowupError as exc:
        raise _http_error(
            422,
            "numerical-blowup",
            str(exc),
            last_good_time=exc.last_good_time,
        ) from exc

    charges = trajectory.diagnostics_series("charge")
    energies = trajectory.diagnostics_series("energy")
    momenta = trajectory.diagnostics_series("momentum")
    summary = schemas.ConservationSummary(
        charge_drift_rel=float(
            np.abs(charges - charges[0]).max() / max(abs(charges[0]), 1e-300)
        ),
        energy_drift_rel=float(
            np.abs(energies - energies[0]).max() / max(abs(energies[0]), 1e-300)
        ),
        momentum_max_abs=float(np.abs(momenta).max()),
    )
    snapshots = []
    if request.include_fields:
        for t, snap in trajectory.snapshots:
            snapshots.append(
                schemas.SnapshotSchema(
                    t=t,
                    re_plus=snap.plus.real.tolist(),
                    im_plus=snap.plus.imag.tolist(),
                    re_minus=snap.minus.real.tolist(),
                    im_minus=snap.minus.imag.tolist(),
                )
            )
    return schemas.RunResponse(
        x=grid.x.tolist(),
        grid=request.grid,
        snapshots=snapshots,
        diagnostics=[
            schemas.DiagnosticsPointSchema(
                t=r.t,
                charge=r.charge,
                energy=r.energy,
                momentum=r.momentum,
                max_amp=r.max_amp,
            )
            for r in trajectory.diagnostics
        ],
        summary=summary,
        metadata=schemas.RunMetadata(
            version=__version__,
            units=UNITS_NOTE,
            scheme=spec.scheme.value,
            dt=spec.dt,
            steps=trajectory.metadata.get("steps", 0),
            warnings=list(trajectory.metadata.get("warnings", [])),
        ),
    )


def execute_stationary(request: schemas.StationaryRequest) -> schemas.StationaryResponse:
    try:
        coupling = coupling_from_schema(request.coupling)
        grid = grid_from_schema(request.grid) if request.grid is not None else None
    except (InvalidParameterError, ValueError) as exc:
        raise _http_error(400, "invalid-config", str(exc)) from exc
    try:
        profile = shoot(coupling, request.omega, request.tolerance, grid=grid)
    except (UnsupportedModeError, InvalidParameterError) as exc:
        raise _http_error(400, "invalid-config", str(exc)) from exc
    except NoSolutionFoundError as exc:
        raise _http_error(409, "no-solution-found", str(exc)) from exc

    report = None
    if request.verify:
        stats = verify_stationarity(profile, coupling, t_final=request.verify_t_final)
        report = schemas.StationarityReport(
            max_modulus_drift=stats["max_modulus_drift"],
            max_phase_error=stats["max_phase_error"],
            t_final=stats["t_final"],
        )
    return schemas.StationaryResponse(
        omega=profile.omega,
        a0=profile.a0,
        kappa=profile.kappa,
        residual=profile.residual,
        grid=schemas.GridSchema(
            x_min=profile.grid.x_min,
            x_max=profile.grid.x_max,
            n_points=profile.grid.n_points,
        ),
        x=profile.grid.x.tolist(),
        profile_plus=profile.a.tolist(),
        profile_minus=profile.b.tolist(),
        report=report,
    )


def execute_exponents(max_dimension: int = 6) -> schemas.ExponentsResponse:
    rows = []
    for kind, n, degree, exponent in exponent_table(max_dimension):
        rows.append(
            schemas.ExponentRow(
                field_kind=kind.value,
                dimension=n,
                conformal_degree=str(degree),
                exponent="divergent" if exponent is DIVERGENT else str(exponent),
            )
        )
    terms = [
        {"label": term.label, "factors": list(term.factors), "coupling": term.coupling}
        for term in quartic_terms_1p1()
    ]
    return schemas.ExponentsResponse(rows=rows, quartic_terms=terms)


def execute_check(request: schemas.CheckRequest) -> schemas.CheckResponse:
    results = checks.run_checks(request.names)
    return schemas.CheckResponse(
        passed=all(r.passed for r in results),
        results=[
            schemas.CheckResultSchema(
                name=r.name, passed=r.passed, detail=r.detail, elapsed_s=r.elapsed_s
            )
            for r in results
        ],
    )


def create_app() -> FastAPI:
    app = FastAPI(
        title="nldirac",
        version=__version__,
        description="Quartic nonlinear Dirac equation simulation service (1+1 D)",
    )

    @app.get("/health")
    def health():
        return {"status": "ok", "version": __version__}

    @app.post("/run", response_model=schemas.RunResponse)
    def run(request: schemas.RunRequest):
        return execute_run(request)

    @app.post("/stationary", response_model=schemas.StationaryResponse)
    def stationary(request: schemas.StationaryRequest):
        return execute_stationary(request)

    @app.get("/exponents", response_model=schemas.ExponentsResponse)
    def exponents(max_dimension: int = 6):
        if not 2 <= max_dimension <= 64:
            raise _http_error(400, "invalid-config", "max_dimension must be in [2, 64]")
        return execute_exponents(max_dimension)

    @app.post("/check", response_model=schemas.CheckResponse)
    def check(request: schemas.CheckRequest = None):
        return execute_check(request or schemas.CheckRequest())

    return app


app = create_app()

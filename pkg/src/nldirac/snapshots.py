"""Snapshot and diagnostics files.

Snapshots are CSV with the fixed header
`x,re_plus,im_plus,re_minus,im_minus,S,V,W`, one row per grid point, 17
significant digits by default (override with NLDIRAC_SNAPSHOT_DIGITS).
A `<name>.meta.json` sidecar carries everything needed to rerun: time,
grid, coupling, scheme, dt, units convention, toolkit version.
"""

import json
import os

import numpy as np

from .dynamics import CouplingConfig
from .errors import SnapshotFormatError
from .fields import SpinorField, bilinears
from .grids import Grid

SNAPSHOT_HEADER = "x,re_plus,im_plus,re_minus,im_minus,S,V,W"
UNITS_NOTE = "psi_plus/psi_minus in sqrt(m); x in 1/m; t in 1/m"
DIGITS_ENV = "NLDIRAC_SNAPSHOT_DIGITS"


def _digits() -> int:
    raw = os.environ.get(DIGITS_ENV)
    if raw is None:
        return 17
    try:
        digits = int(raw)
    except ValueError:
        raise SnapshotFormatError(f"{DIGITS_ENV} must be an integer, got {raw!r}")
    return min(max(digits, 3), 17)


def _sidecar_path(path: str) -> str:
    return str(path) + ".meta.json"


def write_snapshot(
    field: SpinorField,
    t: float,
    path,
    coupling: CouplingConfig = None,
    scheme: str = None,
    dt: float = None,
    extra_metadata: dict = None,
) -> None:
    """Write one field snapshot plus its metadata sidecar."""
    from . import __version__

    b = bilinears(field)
    digits = _digits()
    fmt = f"%.{digits}g"
    columns = (
        field.grid.x,
        field.plus.real,
        field.plus.imag,
        field.minus.real,
        field.minus.imag,
        b.s,
        b.v,
        b.w,
    )
    rows = np.column_stack(columns)
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(SNAPSHOT_HEADER + "\n")
        for row in rows:
            handle.write(",".join(fmt % value for value in row) + "\n")

    metadata = {
        "t": t,
        "grid": {
            "x_min": field.grid.x_min,
            "x_max": field.grid.x_max,
            "n_points": field.grid.n_points,
        },
        "units": UNITS_NOTE,
        "version": __version__,
    }
    if coupling is not None:
        metadata["coupling"] = {
            "m": coupling.m,
            "alpha_s": coupling.alpha_s,
            "alpha_v": coupling.alpha_v,
            "alpha_w": coupling.alpha_w,
            "alpha_sw": coupling.alpha_sw,
        }
    if scheme is not None:
        metadata["scheme"] = scheme
    if dt is not None:
        metadata["dt"] = dt
    if extra_metadata:
        metadata.update(extra_metadata)
    with open(_sidecar_path(path), "w", encoding="utf-8") as handle:
        json.dump(metadata, handle, indent=2, sort_keys=True)
        handle.write("\n")


def read_snapshot(path):
    """Read a snapshot back; returns (field, t). Inverse of write_snapshot."""
    sidecar = _sidecar_path(path)
    if not os.path.exists(sidecar):
        raise SnapshotFormatError(f"missing metadata sidecar {sidecar}")
    with open(sidecar, "r", encoding="utf-8") as handle:
        metadata = json.load(handle)
    try:
        grid = Grid(
            metadata["grid"]["x_min"],
            metadata["grid"]["x_max"],
            int(metadata["grid"]["n_points"]),
        )
        t = float(metadata["t"])
    except (KeyError, TypeError, ValueError) as exc:
        raise SnapshotFormatError(f"malformed metadata in {sidecar}: {exc}") from None

    with open(path, "r", encoding="utf-8") as handle:
        header = handle.readline().rstrip("\n")
        if header != SNAPSHOT_HEADER:
            raise SnapshotFormatError(
                f"header mismatch in {path}: expected {SNAPSHOT_HEADER!r}, "
                f"got {header!r}"
            )
        try:
            data = np.loadtxt(handle, delimiter=",", ndmin=2)
        except ValueError as exc:
            raise SnapshotFormatError(f"bad row in {path}: {exc}") from None
    if data.shape != (grid.n_points, 8):
        raise SnapshotFormatError(
            f"{path}: expected {grid.n_points} rows x 8 columns, got {data.shape}"
        )
    field = SpinorField(
        grid, data[:, 1] + 1j * data[:, 2], data[:, 3] + 1j * data[:, 4]
    )
    return field, t


def write_diagnostics(records, path) -> None:
    """Diagnostics time series as CSV: t,Q,E,P,max_amp."""
    digits = _digits()
    fmt = f"%.{digits}g"
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write("t,Q,E,P,max_amp\n")
        for r in records:
            handle.write(
                ",".join(
                    fmt % v for v in (r.t, r.charge, r.energy, r.momentum, r.max_amp)
                )
                + "\n"
            )


def write_profile(profile, path, extra_metadata: dict = None) -> None:
    """Stationary profile as CSV: x,A,B with omega/residual in the sidecar."""
    digits = _digits()
    fmt = f"%.{digits}g"
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write("x,A,B\n")
        for x, a, b in zip(profile.grid.x, profile.a, profile.b):
            handle.write(",".join(fmt % v for v in (x, a, b)) + "\n")
    metadata = {
        "omega": profile.omega,
        "residual": profile.residual,
        "a0": profile.a0,
        "kappa": profile.kappa,
        "grid": {
            "x_min": profile.grid.x_min,
            "x_max": profile.grid.x_max,
            "n_points": profile.grid.n_points,
        },
        "units": UNITS_NOTE,
    }
    if extra_metadata:
        metadata.update(extra_metadata)
    with open(_sidecar_path(path), "w", encoding="utf-8") as handle:
        json.dump(metadata, handle, indent=2, sort_keys=True)
        handle.write("\n")

"""Run-configuration files: `key = value` lines, `#` comments.

Unknown keys are a hard error (typo protection). Defaults reproduce the
reference spin-symmetric run: m = 1, alpha = 0.5, mu = 1, A+- = +-1,
box [-40, 40) with 1024 points, RK4 at dt = 1e-3, snapshots at
t = 0, 0.5, 1, 2, 3, 4, 5, 6.
"""

import math
from dataclasses import dataclass, field as dataclass_field

from .dynamics import CouplingMode, ModePreset, preset_to_coupling
from .errors import ConfigError
from .evolution import FIG1_SNAPSHOT_TIMES, Scheme
from .grids import Grid

# which coupling keys each mode consumes
_MODE_COUPLING_KEYS = {
    CouplingMode.THIRRING: ("alpha_v",),
    CouplingMode.GROSS_NEVEU: ("alpha_s",),
    CouplingMode.PSEUDO_SCALAR: ("alpha_w",),
    CouplingMode.SPIN_SYMMETRIC: ("alpha",),
    CouplingMode.PSEUDO_SPIN_SYMMETRIC: ("alpha",),
    CouplingMode.GENERAL_QUARTIC: ("alpha_s", "alpha_v", "alpha_w", "alpha_sw"),
}

_FLOAT_KEYS = {
    "alpha",
    "alpha_s",
    "alpha_v",
    "alpha_w",
    "alpha_sw",
    "m",
    "x_min",
    "x_max",
    "a_plus",
    "a_minus",
    "mu",
    "dt",
    "t_final",
    "omega",
}
_INT_KEYS = {"n_points", "diagnostics_stride"}
_BOOL_KEYS = {"deterministic"}
_STRING_KEYS = {"mode", "scheme", "output_dir"}
_LIST_KEYS = {"snapshot_times"}
KNOWN_KEYS = _FLOAT_KEYS | _INT_KEYS | _BOOL_KEYS | _STRING_KEYS | _LIST_KEYS


@dataclass
class RunConfig:
    """Fully-resolved parameters of one evolution run."""

    mode: CouplingMode = CouplingMode.SPIN_SYMMETRIC
    alpha: float = 0.5
    alpha_s: float = 0.0
    alpha_v: float = 0.0
    alpha_w: float = 0.0
    alpha_sw: float = 0.0
    m: float = 1.0
    x_min: float = -40.0
    x_max: float = 40.0
    n_points: int = 1024
    a_plus: float = 1.0
    a_minus: float = -1.0
    mu: float = 1.0
    scheme: Scheme = Scheme.RK4
    dt: float = 1e-3
    t_final: float = 6.0
    snapshot_times: tuple = FIG1_SNAPSHOT_TIMES
    diagnostics_stride: int = 50
    output_dir: str = "out"
    deterministic: bool = True
    omega: float = 0.8  # used only by the stationary subcommand

    def preset(self) -> ModePreset:
        return ModePreset(
            self.mode,
            m=self.m,
            alpha=self.alpha,
            alpha_s=self.alpha_s,
            alpha_v=self.alpha_v,
            alpha_w=self.alpha_w,
            alpha_sw=self.alpha_sw,
        )

    def coupling(self):
        return preset_to_coupling(self.preset())

    def grid(self) -> Grid:
        return Grid(self.x_min, self.x_max, self.n_points)


def _parse_float(raw, key, line_no):
    try:
        value = float(raw)
    except ValueError:
        raise ConfigError(f"{key}: not a number: {raw!r}", line=line_no) from None
    if not math.isfinite(value):
        raise ConfigError(f"{key}: number must be finite, got {raw!r}", line=line_no)
    return value


def _parse_bool(raw, key, line_no):
    lowered = raw.lower()
    if lowered in ("true", "yes", "1", "on"):
        return True
    if lowered in ("false", "no", "0", "off"):
        return False
    raise ConfigError(f"{key}: not a boolean: {raw!r}", line=line_no)


def parse_config(text: str) -> RunConfig:
    """Parse configuration text into a RunConfig with defaults filled in."""
    values = {}
    lines = {}
    for line_no, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"expected 'key = value', got {raw_line!r}", line=line_no)
        key, _, raw = line.partition("=")
        key = key.strip().lower()
        raw = raw.strip()
        if key not in KNOWN_KEYS:
            raise ConfigError(f"unknown key {key!r}", line=line_no)
        if key in values:
            raise ConfigError(f"duplicate key {key!r}", line=line_no)
        if not raw:
            raise ConfigError(f"{key}: missing value", line=line_no)
        lines[key] = line_no
        if key in _FLOAT_KEYS:
            values[key] = _parse_float(raw, key, line_no)
        elif key in _INT_KEYS:
            number = _parse_float(raw, key, line_no)
            if number != int(number):
                raise ConfigError(f"{key}: expected an integer", line=line_no)
            values[key] = int(number)
        elif key in _BOOL_KEYS:
            values[key] = _parse_bool(raw, key, line_no)
        elif key in _LIST_KEYS:
            values[key] = tuple(
                _parse_float(part.strip(), key, line_no)
                for part in raw.split(",")
                if part.strip()
            )
        elif key == "mode":
            try:
                values[key] = CouplingMode(raw.lower())
            except ValueError:
                known = ", ".join(mm.value for mm in CouplingMode)
                raise ConfigError(
                    f"unknown mode {raw!r} (known: {known})", line=line_no
                ) from None
        elif key == "scheme":
            try:
                values[key] = Scheme(raw.lower())
            except ValueError:
                raise ConfigError(
                    f"unknown scheme {raw!r} (known: rk4, strang)", line=line_no
                ) from None
        else:
            values[key] = raw

    config = RunConfig(**values)

    # coupling keys must match the selected mode
    allowed = set(_MODE_COUPLING_KEYS[config.mode])
    coupling_keys = {"alpha", "alpha_s", "alpha_v", "alpha_w", "alpha_sw"}
    for key in coupling_keys & set(values):
        if key not in allowed:
            raise ConfigError(
                f"{key} does not apply to mode '{config.mode.value}' "
                f"(it takes: {', '.join(sorted(allowed))})",
                line=lines[key],
            )
    required = allowed - {"alpha"}  # `alpha` carries a reference default
    missing = [k for k in required if k not in values]
    if config.mode is not CouplingMode.GENERAL_QUARTIC and missing:
        raise ConfigError(
            f"mode '{config.mode.value}' requires {', '.join(missing)}",
            line=lines.get("mode"),
        )
    return config


def parse_config_file(path) -> RunConfig:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_config(handle.read())

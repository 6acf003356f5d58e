"""Simulation toolkit for the quartic nonlinear Dirac equation in 1+1 D."""

from .conformal import (
    DIVERGENT,
    FieldKind,
    conformal_degree,
    exponent_table,
    nonlinearity_exponent,
    quartic_terms_1p1,
)
from .diagnostics import DiagnosticsRecord, charge, energy, momentum
from .dynamics import (
    CouplingConfig,
    CouplingMode,
    ModePreset,
    preset_to_coupling,
    rhs,
    verify_mode_reduction,
)
from .errors import (
    ConfigError,
    GridMismatchError,
    InvalidDimensionError,
    InvalidParameterError,
    NldiracError,
    NoSolutionFoundError,
    NumericalBlowupError,
    SnapshotFormatError,
    UnsupportedModeError,
)
from .evolution import (
    FIG1_SNAPSHOT_TIMES,
    EvolveSpec,
    Scheme,
    Trajectory,
    evolve,
    linear_propagator,
    nonlinear_substep,
    step_rk4,
    step_strang,
)
from .fields import Bilinears, SpinorField, bilinears, initial_state, spectral_derivative
from .grids import Grid, default_grid
from .stationary import (
    StationaryProfile,
    shoot,
    stationary_odes,
    verify_stationarity,
)

__version__ = "0.1.0"

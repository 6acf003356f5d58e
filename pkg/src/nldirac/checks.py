"""Built-in invariant suite behind the `check` subcommand and endpoint.

Each check is fast (whole suite well under a minute) and self-contained:
unitarity of the linear propagator, conservation under both schemes,
convergence-order smoke tests, mode-reduction agreement, bilinear
inequalities, and linear exactness of the splitting.
"""

import time
from dataclasses import dataclass

import numpy as np

from . import diagnostics
from .dynamics import (
    CouplingConfig,
    CouplingMode,
    ModePreset,
    preset_to_coupling,
    verify_mode_reduction,
)
from .evolution import (
    EvolveSpec,
    RK4Stepper,
    Scheme,
    StrangStepper,
    evolve,
    linear_propagator,
)
from .fields import SpinorField, bilinears, initial_state
from .grids import Grid


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    elapsed_s: float


def smooth_field(grid: Grid, seed: int, cutoff: float = 4.0, amplitude: float = 0.8):
    """Deterministic band-limited random field for property checks."""
    rng = np.random.default_rng(seed)
    k = grid.wavenumbers
    n = grid.n_points

    def component():
        coeff = (rng.normal(size=n) + 1j * rng.normal(size=n)) * np.exp(
            -((k / cutoff) ** 2)
        )
        coeff[np.abs(k) > 2.0 * cutoff] = 0.0
        values = np.fft.ifft(coeff) * np.sqrt(n)
        return amplitude * values / np.abs(values).max()

    return SpinorField(grid, component(), component())


def _grid():
    return Grid(-20.0, 20.0, 256)


def _named_presets(alpha=0.5):
    return [
        ModePreset(CouplingMode.THIRRING, m=1.0, alpha=alpha),
        ModePreset(CouplingMode.GROSS_NEVEU, m=1.0, alpha=alpha),
        ModePreset(CouplingMode.SPIN_SYMMETRIC, m=1.0, alpha=alpha),
        ModePreset(CouplingMode.PSEUDO_SPIN_SYMMETRIC, m=1.0, alpha=alpha),
        ModePreset(CouplingMode.PSEUDO_SCALAR, m=1.0, alpha=alpha),
    ]


def check_propagator_unitarity():
    grid = _grid()
    rng = np.random.default_rng(3)
    worst = 0.0
    for _ in range(5):
        m, dt = rng.uniform(0.0, 3.0), rng.uniform(0.0, 1.0)
        u11, u12, u21, u22 = linear_propagator(grid, m, dt)
        worst = max(
            worst,
            float(np.abs(np.abs(u11) ** 2 + np.abs(u21) ** 2 - 1).max()),
            float(np.abs(np.abs(u12) ** 2 + np.abs(u22) ** 2 - 1).max()),
            float(np.abs(np.conj(u11) * u12 + np.conj(u21) * u22).max()),
        )
    return worst <= 1e-14, f"max |U+U - I| entry = {worst:.3e} (tol 1e-14)"


def check_strang_charge_conservation():
    grid = _grid()
    coupling = CouplingConfig(1.0, alpha_s=0.3, alpha_v=-0.2, alpha_w=0.4, alpha_sw=0.25)
    field = smooth_field(grid, 11)
    stepper = StrangStepper(grid, coupling)
    p, m = field.plus, field.minus
    q0 = diagnostics.charge(field)
    for _ in range(300):
        p, m = stepper.step_arrays(p, m, 1e-3)
    drift = abs(diagnostics.charge(SpinorField(grid, p, m)) - q0) / abs(q0)
    return drift <= 1e-12, f"relative charge drift over 300 steps = {drift:.3e}"


def check_linear_exactness():
    grid = _grid()
    m = 1.0
    k = grid.derivative_wavenumbers[9]
    h0 = np.array([[m, 1j * k], [-1j * k, -m]])
    energy, vectors = np.linalg.eigh(h0)
    e_plus, u = energy[1], vectors[:, 1]
    wave = np.exp(1j * k * grid.x)
    stepper = StrangStepper(grid, CouplingConfig(m))
    p, mn = u[0] * wave, u[1] * wave
    for _ in range(50):
        p, mn = stepper.step_arrays(p, mn, 0.02)
    rotation = np.exp(-1j * e_plus * 1.0)
    err = max(
        float(np.abs(p - rotation * u[0] * wave).max()),
        float(np.abs(mn - rotation * u[1] * wave).max()),
    )
    return err <= 1e-12, f"plane-wave error after t=1 exact propagation = {err:.3e}"


def _self_convergence_order(scheme: Scheme, dts, t_end=0.25):
    grid = _grid()
    coupling = preset_to_coupling(
        ModePreset(CouplingMode.SPIN_SYMMETRIC, m=1.0, alpha=0.5)
    )
    field = initial_state(grid, 1.0, -1.0, 1.0)
    results = []
    for dt in dts:
        stepper = (
            StrangStepper(grid, coupling)
            if scheme is Scheme.STRANG
            else RK4Stepper(grid, coupling)
        )
        p, m = field.plus.copy(), field.minus.copy()
        for _ in range(round(t_end / dt)):
            p, m = stepper.step_arrays(p, m, dt)
        results.append((p, m))
    errs = [
        max(
            float(np.abs(results[i][0] - results[i + 1][0]).max()),
            float(np.abs(results[i][1] - results[i + 1][1]).max()),
        )
        for i in range(len(results) - 1)
    ]
    return float(np.log2(errs[-2] / errs[-1]))


def check_strang_order():
    order = _self_convergence_order(Scheme.STRANG, (0.025, 0.0125, 0.00625))
    return abs(order - 2.0) <= 0.15, f"observed Strang order = {order:.3f}"


def check_rk4_order():
    order = _self_convergence_order(Scheme.RK4, (0.025, 0.0125, 0.00625))
    return abs(order - 4.0) <= 0.3, f"observed RK4 order = {order:.3f}"


def check_mode_reductions():
    grid = _grid()
    worst = 0.0
    for i, preset in enumerate(_named_presets()):
        for j in range(10):
            field = smooth_field(grid, 100 + 10 * i + j)
            worst = max(worst, verify_mode_reduction(preset, field))
    return worst <= 1e-12, f"max general-vs-reduced difference = {worst:.3e}"


def check_bilinear_identities():
    grid = _grid()
    worst_ineq = 0.0
    worst_identity = 0.0
    for seed in range(8):
        rng = np.random.default_rng(200 + seed)
        n = grid.n_points
        field = SpinorField(
            grid,
            rng.normal(size=n) + 1j * rng.normal(size=n),
            rng.normal(size=n) + 1j * rng.normal(size=n),
        )
        b = bilinears(field)
        worst_ineq = min(
            worst_ineq,
            float((b.v - np.abs(b.s)).min()),
            float((b.v**2 - b.s**2 - b.w**2).min()),
        )
        product = 4.0 * np.abs(field.plus) ** 2 * np.abs(field.minus) ** 2
        worst_identity = max(
            worst_identity, float(np.abs(b.v**2 - b.s**2 - product).max())
        )
    ok = worst_ineq >= -1e-12 and worst_identity <= 1e-10
    return ok, (
        f"min inequality slack = {worst_ineq:.3e}, "
        f"max V^2-S^2 identity error = {worst_identity:.3e}"
    )


def check_rk4_conservation():
    grid = _grid()
    coupling = CouplingConfig(1.0, alpha_s=0.3, alpha_v=-0.2, alpha_w=0.4, alpha_sw=0.25)
    field = smooth_field(grid, 31)
    spec = EvolveSpec(dt=1e-3, t_final=0.5, snapshot_times=(0.0, 0.5), scheme=Scheme.RK4)
    trajectory = evolve(field, coupling, spec)
    q = trajectory.diagnostics_series("charge")
    e = trajectory.diagnostics_series("energy")
    q_drift = float(np.abs(q - q[0]).max() / abs(q[0]))
    e_drift = float(np.abs(e - e[0]).max() / max(abs(e[0]), 1e-12))
    ok = q_drift <= 1e-10 and e_drift <= 1e-10
    return ok, f"RK4 relative drifts: charge {q_drift:.3e}, energy {e_drift:.3e}"


ALL_CHECKS = {
    "propagator-unitarity": check_propagator_unitarity,
    "strang-charge-conservation": check_strang_charge_conservation,
    "linear-exactness": check_linear_exactness,
    "strang-order": check_strang_order,
    "rk4-order": check_rk4_order,
    "mode-reductions": check_mode_reductions,
    "bilinear-identities": check_bilinear_identities,
    "rk4-conservation": check_rk4_conservation,
}


def run_checks(names=None):
    """Run the named checks (all by default); returns a list of CheckResult."""
    selected = list(ALL_CHECKS) if names is None else list(names)
    results = []
    for name in selected:
        if name not in ALL_CHECKS:
            results.append(CheckResult(name, False, "unknown check name", 0.0))
            continue
        start = time.perf_counter()
        try:
            passed, detail = ALL_CHECKS[name]()
        except Exception as exc:  # a crashed check is a failed check
            passed, detail = False, f"raised {type(exc).__name__}: {exc}"
        results.append(
            CheckResult(name, bool(passed), detail, time.perf_counter() - start)
        )
    return results

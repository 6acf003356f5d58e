"""Right-hand side of the general quartic nonlinear Dirac equation.

With gamma0 = sigma3, gamma1 = i*sigma1 fixed, the evolution is

    i dt psi_+ = (m + a_s S - a_sw W + a_v V) psi_+ + dx psi_- + (a_w W + a_sw S) psi_-
    i dt psi_- = -dx psi_+ + (a_w W + a_sw S) psi_+ + (-m - a_s S + a_sw W + a_v V) psi_-

where {a_s, a_v, a_w, a_sw} are dimensionless couplings and S, V, W the
pointwise bilinears. Named presets (Thirring, Gross-Neveu, spin and
pseudo-spin symmetric, pseudo-scalar) are zero patterns of the four
couplings; each also has a hand-coded component form used as an internal
consistency check.
"""

import enum
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameterError, UnsupportedModeError
from .fields import SpinorField, bilinears, derivative_arrays


@dataclass(frozen=True)
class CouplingConfig:
    """Mass and the four dimensionless quartic couplings."""

    m: float
    alpha_s: float = 0.0
    alpha_v: float = 0.0
    alpha_w: float = 0.0
    alpha_sw: float = 0.0

    def __post_init__(self):
        for name in ("m", "alpha_s", "alpha_v", "alpha_w", "alpha_sw"):
            if not np.isfinite(getattr(self, name)):
                raise InvalidParameterError(f"{name} must be finite")

    @property
    def alpha_plus(self) -> float:
        """alpha_v + alpha_s (weight of |psi_+|^2 in the + equation)."""
        return self.alpha_v + self.alpha_s

    @property
    def alpha_minus(self) -> float:
        """alpha_v - alpha_s."""
        return self.alpha_v - self.alpha_s

    def max_coupling(self) -> float:
        return max(
            abs(self.alpha_s), abs(self.alpha_v), abs(self.alpha_w), abs(self.alpha_sw)
        )


class CouplingMode(enum.Enum):
    GENERAL_QUARTIC = "general-quartic"
    THIRRING = "thirring"
    GROSS_NEVEU = "gross-neveu"
    SPIN_SYMMETRIC = "spin-symmetric"
    PSEUDO_SPIN_SYMMETRIC = "pseudo-spin-symmetric"
    PSEUDO_SCALAR = "pseudo-scalar"


@dataclass(frozen=True)
class ModePreset:
    """A named coupling mode plus the parameters it requires.

    `alpha` is the single coupling of the named modes (alpha_v for
    Thirring, alpha_s for Gross-Neveu, alpha_w for pseudo-scalar, the
    shared alpha of the spin/pseudo-spin symmetric pair). The four
    alpha_* fields are read only by GENERAL_QUARTIC.
    """

    mode: CouplingMode
    m: float = 1.0
    alpha: float = 0.0
    alpha_s: float = 0.0
    alpha_v: float = 0.0
    alpha_w: float = 0.0
    alpha_sw: float = 0.0


def preset_to_coupling(preset: ModePreset) -> CouplingConfig:
    """Expand a named mode into the four couplings.

    Spin symmetric maps alpha to (alpha_s, alpha_v) = (+alpha/2, alpha/2),
    pseudo-spin symmetric to (-alpha/2, alpha/2).
    """
    mode, m, a = preset.mode, preset.m, preset.alpha
    if mode is CouplingMode.GENERAL_QUARTIC:
        return CouplingConfig(
            m,
            alpha_s=preset.alpha_s,
            alpha_v=preset.alpha_v,
            alpha_w=preset.alpha_w,
            alpha_sw=preset.alpha_sw,
        )
    if mode is CouplingMode.THIRRING:
        return CouplingConfig(m, alpha_v=a)
    if mode is CouplingMode.GROSS_NEVEU:
        return CouplingConfig(m, alpha_s=a)
    if mode is CouplingMode.SPIN_SYMMETRIC:
        return CouplingConfig(m, alpha_s=0.5 * a, alpha_v=0.5 * a)
    if mode is CouplingMode.PSEUDO_SPIN_SYMMETRIC:
        return CouplingConfig(m, alpha_s=-0.5 * a, alpha_v=0.5 * a)
    if mode is CouplingMode.PSEUDO_SCALAR:
        return CouplingConfig(m, alpha_w=a)
    raise UnsupportedModeError(f"unknown mode {mode!r}")


def rhs_arrays(grid, plus, minus, coupling: CouplingConfig):
    """dt(psi) = -i H[psi] psi on raw component arrays."""
    p2 = plus.real**2 + plus.imag**2
    m2 = minus.real**2 + minus.imag**2
    s = p2 - m2
    v = p2 + m2
    w = -2.0 * (plus.real * minus.real + plus.imag * minus.imag)

    dplus, dminus = derivative_arrays(grid, plus, minus)

    common = coupling.alpha_v * v                      # identity part
    split = coupling.alpha_s * s - coupling.alpha_sw * w   # sigma3 part
    cross = coupling.alpha_w * w + coupling.alpha_sw * s   # sigma1 part

    h_plus = (coupling.m + common + split) * plus + dminus + cross * minus
    h_minus = -dplus + cross * plus + (common - coupling.m - split) * minus
    return -1j * h_plus, -1j * h_minus


def rhs(field: SpinorField, coupling: CouplingConfig) -> SpinorField:
    """Instantaneous time derivative of the field under the full equation."""
    dp, dm = rhs_arrays(field.grid, field.plus, field.minus, coupling)
    return SpinorField(field.grid, dp, dm)


def _reduced_rhs(preset: ModePreset, grid, plus, minus):
    """Hand-coded component equations of the named modes.

    Written term by term from each mode's printed two-component form, not
    from the general matrix, so agreement with `rhs` is a genuine
    cross-check of the coupling algebra.
    """
    dplus, dminus = derivative_arrays(grid, plus, minus)
    p2 = plus.real**2 + plus.imag**2
    m2 = minus.real**2 + minus.imag**2
    m, a = preset.m, preset.alpha
    mode = preset.mode

    if mode is CouplingMode.THIRRING:
        dens = a * (p2 + m2)
        hp = m * plus + dminus + dens * plus
        hm = -m * minus - dplus + dens * minus
    elif mode is CouplingMode.GROSS_NEVEU:
        hp = m * plus + dminus + a * (p2 - m2) * plus
        hm = -m * minus - dplus + a * (m2 - p2) * minus
    elif mode is CouplingMode.SPIN_SYMMETRIC:
        hp = (m + a * p2) * plus + dminus
        hm = (-m + a * m2) * minus - dplus
    elif mode is CouplingMode.PSEUDO_SPIN_SYMMETRIC:
        hp = (m + a * m2) * plus + dminus
        hm = (-m + a * p2) * minus - dplus
    elif mode is CouplingMode.PSEUDO_SCALAR:
        overlap = plus * np.conj(minus) + np.conj(plus) * minus
        hp = m * plus + dminus - a * overlap * minus
        hm = -m * minus - dplus - a * overlap * plus
    elif mode is CouplingMode.GENERAL_QUARTIC:
        if preset.alpha_sw != 0.0:
            raise UnsupportedModeError(
                "no independent component form exists for alpha_sw != 0"
            )
        ap = preset.alpha_v + preset.alpha_s
        am = preset.alpha_v - preset.alpha_s
        overlap = plus * np.conj(minus) + np.conj(plus) * minus
        hp = (
            m * plus
            + dminus
            + (ap * p2 + am * m2) * plus
            - preset.alpha_w * overlap * minus
        )
        hm = (
            -m * minus
            - dplus
            + (am * p2 + ap * m2) * minus
            - preset.alpha_w * overlap * plus
        )
    else:
        raise UnsupportedModeError(f"unknown mode {mode!r}")
    return -1j * hp, -1j * hm


def verify_mode_reduction(preset: ModePreset, field: SpinorField) -> float:
    """Max-abs difference between the general equation and the mode's own
    printed component form, evaluated on `field`."""
    coupling = preset_to_coupling(preset)
    gp, gm = rhs_arrays(field.grid, field.plus, field.minus, coupling)
    hp, hm = _reduced_rhs(preset, field.grid, field.plus, field.minus)
    return float(max(np.abs(gp - hp).max(), np.abs(gm - hm).max()))


__all__ = [
    "CouplingConfig",
    "CouplingMode",
    "ModePreset",
    "preset_to_coupling",
    "rhs",
    "rhs_arrays",
    "verify_mode_reduction",
    "bilinears",
]

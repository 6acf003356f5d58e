"""Two-component spinor fields and their pointwise bilinear densities.

The field (psi_plus, psi_minus) lives on a periodic Grid. Bilinears follow
the gamma-matrix representation gamma0 = sigma3, gamma1 = i*sigma1:

    S = |psi_+|^2 - |psi_-|^2        (scalar density)
    V = |psi_+|^2 + |psi_-|^2        (vector time-component / charge density)
    W = -(psi_+^* psi_- + psi_+ psi_-^*) = -2 Re(psi_+^* psi_-)
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import GridMismatchError, InvalidParameterError
from .grids import Grid


@dataclass
class SpinorField:
    """Complex amplitudes (plus, minus) sampled at the grid points.

    Stored as two separate contiguous complex arrays so pointwise kernels
    stream each component independently.
    """

    grid: Grid
    plus: np.ndarray
    minus: np.ndarray

    def __post_init__(self):
        self.plus = np.ascontiguousarray(self.plus, dtype=np.complex128)
        self.minus = np.ascontiguousarray(self.minus, dtype=np.complex128)
        n = self.grid.n_points
        if self.plus.shape != (n,) or self.minus.shape != (n,):
            raise GridMismatchError(
                f"component shapes {self.plus.shape}/{self.minus.shape} "
                f"do not match grid with {n} points"
            )
        if not (np.all(np.isfinite(self.plus)) and np.all(np.isfinite(self.minus))):
            raise InvalidParameterError("spinor amplitudes must be finite")

    def copy(self) -> "SpinorField":
        return SpinorField(self.grid, self.plus.copy(), self.minus.copy())

    def is_finite(self) -> bool:
        return bool(np.all(np.isfinite(self.plus)) and np.all(np.isfinite(self.minus)))

    def max_amplitude(self) -> float:
        return float(max(np.abs(self.plus).max(), np.abs(self.minus).max()))


def zero_field(grid: Grid) -> SpinorField:
    n = grid.n_points
    return SpinorField(grid, np.zeros(n, np.complex128), np.zeros(n, np.complex128))


def require_same_grid(a, b):
    if a.grid != b.grid:
        raise GridMismatchError("operands live on different grids")


class Bilinears(NamedTuple):
    """Pointwise densities (S, V, W), one real array each."""

    s: np.ndarray
    v: np.ndarray
    w: np.ndarray


def bilinears(field: SpinorField) -> Bilinears:
    """Evaluate the S, V, W densities at every grid point."""
    p2 = field.plus.real**2 + field.plus.imag**2
    m2 = field.minus.real**2 + field.minus.imag**2
    w = -2.0 * (
        field.plus.real * field.minus.real + field.plus.imag * field.minus.imag
    )
    return Bilinears(s=p2 - m2, v=p2 + m2, w=w)


def _derivative_factor(grid: Grid) -> np.ndarray:
    return 1j * grid.derivative_wavenumbers


def spectral_derivative(field: SpinorField) -> SpinorField:
    """d/dx of both components via FFT, multiply by i*k, inverse FFT."""
    ik = _derivative_factor(field.grid)
    stacked = np.fft.fft(np.stack((field.plus, field.minus)), axis=1)
    stacked *= ik
    out = np.fft.ifft(stacked, axis=1)
    return SpinorField(field.grid, out[0], out[1])


def derivative_arrays(grid: Grid, plus, minus):
    """Array-level d/dx used by the evolution kernels (no field wrapping)."""
    ik = _derivative_factor(grid)
    stacked = np.fft.fft(np.stack((plus, minus)), axis=1)
    stacked *= ik
    out = np.fft.ifft(stacked, axis=1)
    return out[0], out[1]


def _sech(z: np.ndarray) -> np.ndarray:
    # overflow-safe 1/cosh
    e = np.exp(-np.abs(z))
    return 2.0 * e / (1.0 + e * e)


def initial_state(grid: Grid, a_plus: float, a_minus: float, mu: float) -> SpinorField:
    """Localized real data: psi_+ = A+ sech(mu x), psi_- = A- tanh(mu x) sech(mu x).

    The lower component is proportional to d/dx of the upper one.
    """
    if not (np.isfinite(mu) and mu > 0):
        raise InvalidParameterError(f"mu must be positive and finite, got {mu}")
    for name, val in (("a_plus", a_plus), ("a_minus", a_minus)):
        if not np.isfinite(val):
            raise InvalidParameterError(f"{name} must be finite, got {val}")
    z = mu * grid.x
    sech = _sech(z)
    plus = (a_plus * sech).astype(np.complex128)
    minus = (a_minus * np.tanh(z) * sech).astype(np.complex128)
    return SpinorField(grid, plus, minus)

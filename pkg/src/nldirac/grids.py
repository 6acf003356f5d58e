"""Uniform periodic 1-D grids and their Fourier wavenumbers."""

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import InvalidParameterError

MIN_POINTS = 8


@dataclass(frozen=True)
class Grid:
    """Periodic lattice on [x_min, x_max): x_j = x_min + j*dx, j = 0..n-1.

    The endpoint x_max is identified with x_min. Lengths are in units of
    1/m (inverse mass), matching the field convention psi ~ sqrt(m).
    """

    x_min: float
    x_max: float
    n_points: int

    def __post_init__(self):
        if self.n_points < MIN_POINTS:
            raise InvalidParameterError(
                f"n_points must be >= {MIN_POINTS}, got {self.n_points}"
            )
        if not (np.isfinite(self.x_min) and np.isfinite(self.x_max)):
            raise InvalidParameterError("grid endpoints must be finite")
        if self.x_max <= self.x_min:
            raise InvalidParameterError(
                f"need x_max > x_min, got [{self.x_min}, {self.x_max})"
            )

    @property
    def length(self) -> float:
        return self.x_max - self.x_min

    @property
    def dx(self) -> float:
        return self.length / self.n_points

    @cached_property
    def x(self) -> np.ndarray:
        return self.x_min + self.dx * np.arange(self.n_points)

    @cached_property
    def wavenumbers(self) -> np.ndarray:
        """Discrete Fourier wavenumbers 2*pi*j'/L in standard FFT order."""
        return 2.0 * np.pi * np.fft.fftfreq(self.n_points, d=self.dx)

    @cached_property
    def derivative_wavenumbers(self) -> np.ndarray:
        """Wavenumbers used by d/dx, with the Nyquist mode zeroed.

        Zeroing the (sign-ambiguous) Nyquist coefficient keeps real fields
        real under spectral differentiation; the exact linear propagator
        uses the same set so that both routes see one discrete operator.
        """
        k = self.wavenumbers.copy()
        if self.n_points % 2 == 0:
            k[self.n_points // 2] = 0.0
        return k

    def __eq__(self, other):
        if not isinstance(other, Grid):
            return NotImplemented
        return (
            self.x_min == other.x_min
            and self.x_max == other.x_max
            and self.n_points == other.n_points
        )

    def __hash__(self):
        return hash((self.x_min, self.x_max, self.n_points))


def default_grid() -> Grid:
    """Box [-40, 40) with 1024 points; large enough that exp(-|x|) data
    decays far below round-off before the periodic wrap."""
    return Grid(-40.0, 40.0, 1024)

import numpy as np
import pytest

from nldirac.grids import Grid
from nldirac.fields import SpinorField


@pytest.fixture
def grid():
    return Grid(-20.0, 20.0, 256)


@pytest.fixture
def big_grid():
    return Grid(-40.0, 40.0, 1024)


def make_smooth_field(grid, seed, cutoff=4.0, amplitude=0.8):
    """Band-limited random field with reproducible content."""
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


def make_rough_field(grid, seed, amplitude=1.0):
    """Pointwise random field (no band limit) for algebraic identities."""
    rng = np.random.default_rng(seed)
    n = grid.n_points
    return SpinorField(
        grid,
        amplitude * (rng.normal(size=n) + 1j * rng.normal(size=n)),
        amplitude * (rng.normal(size=n) + 1j * rng.normal(size=n)),
    )


def parity_indices(n):
    """Index map realizing x -> -x on a symmetric periodic grid."""
    return (n - np.arange(n)) % n


def max_component_diff(f, g):
    return max(
        float(np.abs(f.plus - g.plus).max()), float(np.abs(f.minus - g.minus).max())
    )

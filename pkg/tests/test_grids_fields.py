import numpy as np
import pytest

from nldirac.errors import GridMismatchError, InvalidParameterError
from nldirac.fields import (
    SpinorField,
    bilinears,
    initial_state,
    spectral_derivative,
    zero_field,
)
from nldirac.grids import Grid, default_grid

from conftest import make_rough_field, parity_indices


class TestGrid:
    def test_basic_geometry(self):
        g = Grid(-40.0, 40.0, 1024)
        assert g.dx == pytest.approx(80.0 / 1024)
        assert g.x[0] == -40.0
        assert g.x[-1] == pytest.approx(40.0 - g.dx)
        assert len(g.x) == 1024

    def test_wavenumbers_are_fft_frequencies(self):
        g = Grid(-10.0, 10.0, 64)
        expected = 2 * np.pi * np.fft.fftfreq(64, d=g.dx)
        np.testing.assert_allclose(g.wavenumbers, expected)

    def test_nyquist_zeroed_for_derivative(self):
        g = Grid(-10.0, 10.0, 64)
        assert g.derivative_wavenumbers[32] == 0.0
        assert g.wavenumbers[32] != 0.0

    @pytest.mark.parametrize("n", [0, 1, 7])
    def test_too_few_points_rejected(self, n):
        with pytest.raises(InvalidParameterError):
            Grid(-1.0, 1.0, n)

    def test_reversed_endpoints_rejected(self):
        with pytest.raises(InvalidParameterError):
            Grid(1.0, -1.0, 64)

    def test_default_grid(self):
        g = default_grid()
        assert (g.x_min, g.x_max, g.n_points) == (-40.0, 40.0, 1024)


class TestSpinorField:
    def test_shape_mismatch_rejected(self, grid):
        with pytest.raises(GridMismatchError):
            SpinorField(grid, np.zeros(grid.n_points), np.zeros(grid.n_points - 1))

    def test_nonfinite_rejected(self, grid):
        bad = np.zeros(grid.n_points, np.complex128)
        bad[3] = np.nan
        with pytest.raises(InvalidParameterError):
            SpinorField(grid, bad, np.zeros(grid.n_points))


class TestBilinears:
    def test_single_component(self, grid):
        n = grid.n_points
        f = SpinorField(grid, np.ones(n), np.zeros(n))
        b = bilinears(f)
        assert b.s[0] == 1.0 and b.v[0] == 1.0 and b.w[0] == 0.0

    def test_equal_components(self, grid):
        n = grid.n_points
        f = SpinorField(grid, np.ones(n), np.ones(n))
        b = bilinears(f)
        assert b.s[0] == 0.0 and b.v[0] == 2.0 and b.w[0] == -2.0

    def test_quadrature_components(self, grid):
        n = grid.n_points
        f = SpinorField(grid, np.ones(n), 1j * np.ones(n))
        b = bilinears(f)
        assert b.s[0] == 0.0 and b.v[0] == 2.0 and b.w[0] == 0.0

    @pytest.mark.parametrize("seed", range(6))
    def test_inequalities_on_random_fields(self, grid, seed):
        b = bilinears(make_rough_field(grid, seed))
        assert (b.v - np.abs(b.s)).min() >= 0.0
        assert (b.v**2 - b.s**2 - b.w**2).min() >= -1e-12

    @pytest.mark.parametrize("seed", range(3))
    def test_v2_minus_s2_identity(self, grid, seed):
        f = make_rough_field(grid, 50 + seed)
        b = bilinears(f)
        product = 4.0 * np.abs(f.plus) ** 2 * np.abs(f.minus) ** 2
        np.testing.assert_allclose(b.v**2 - b.s**2, product, rtol=0, atol=1e-12)


class TestSpectralDerivative:
    def test_fourier_eigenfunction(self, grid):
        k = grid.derivative_wavenumbers[5]
        wave = np.exp(1j * k * grid.x)
        d = spectral_derivative(SpinorField(grid, wave, np.zeros_like(wave)))
        np.testing.assert_allclose(d.plus, 1j * k * wave, atol=1e-12)

    def test_constant_field(self, grid):
        n = grid.n_points
        d = spectral_derivative(SpinorField(grid, np.full(n, 2.0 + 1.0j), np.ones(n)))
        assert np.abs(d.plus).max() < 1e-13
        assert np.abs(d.minus).max() < 1e-13

    def test_sech_against_analytic_derivative(self):
        # d/dx sech = -sech * tanh; periodization error far below 1e-10
        g = Grid(-40.0, 40.0, 1024)
        f = initial_state(g, 1.0, 0.0, 1.0)
        d = spectral_derivative(f)
        exact = -np.tanh(g.x) / np.cosh(g.x)
        assert np.abs(d.plus.real - exact).max() <= 1e-10
        assert np.abs(d.plus.imag).max() <= 1e-12

    def test_linearity(self, grid):
        f = make_rough_field(grid, 9)
        g2 = make_rough_field(grid, 10)
        lhs = spectral_derivative(
            SpinorField(grid, 2.0 * f.plus + 3.0 * g2.plus, f.minus)
        )
        d1 = spectral_derivative(f)
        d2 = spectral_derivative(g2)
        np.testing.assert_allclose(
            lhs.plus, 2.0 * d1.plus + 3.0 * d2.plus, atol=1e-12
        )

    @pytest.mark.parametrize("seed", range(3))
    def test_antisymmetry_under_inner_product(self, grid, seed):
        f = make_rough_field(grid, 20 + seed)
        g2 = make_rough_field(grid, 30 + seed)
        df = spectral_derivative(f)
        dg = spectral_derivative(g2)
        pairing = np.vdot(f.plus, dg.plus) + np.vdot(df.plus, g2.plus)
        assert abs(pairing) <= 1e-10


class TestInitialState:
    def test_center_values(self, grid):
        f = initial_state(grid, 1.0, -1.0, 1.0)
        center = np.argmin(np.abs(grid.x))
        assert f.plus[center] == 1.0
        assert f.minus[center] == 0.0

    def test_zero_amplitudes(self, grid):
        f = initial_state(grid, 0.0, 0.0, 1.0)
        assert np.abs(f.plus).max() == 0.0
        assert np.abs(f.minus).max() == 0.0

    def test_real_and_parity(self, grid):
        f = initial_state(grid, 1.0, -1.0, 1.3)
        assert np.abs(f.plus.imag).max() == 0.0
        assert np.abs(f.minus.imag).max() == 0.0
        idx = parity_indices(grid.n_points)
        np.testing.assert_allclose(f.plus.real, f.plus.real[idx], atol=1e-15)
        # j = 0 is its own parity partner; there the odd component only
        # vanishes up to the e^{-mu L} tail of the data
        paired = slice(1, None)
        np.testing.assert_allclose(
            f.minus.real[paired], -f.minus.real[idx][paired], atol=1e-15
        )
        assert abs(f.minus.real[0]) <= np.exp(-1.3 * 20.0) * 10

    def test_total_charge_is_eight_thirds(self):
        # int sech^2 = 2/mu and int tanh^2 sech^2 = 2/(3 mu)
        g = Grid(-40.0, 40.0, 1024)
        f = initial_state(g, 1.0, -1.0, 1.0)
        b = bilinears(f)
        q = b.v.sum() * g.dx
        assert abs(q - 8.0 / 3.0) <= 1e-12

    def test_quadrature_oracle_for_charge(self):
        # high-resolution rectangle rule on a wider box as the oracle
        g = Grid(-60.0, 60.0, 8192)
        f = initial_state(g, 1.0, -1.0, 1.0)
        b = bilinears(f)
        oracle = b.v.sum() * g.dx
        assert abs(oracle - 8.0 / 3.0) <= 1e-12

    @pytest.mark.parametrize("mu", [0.0, -1.0, np.nan])
    def test_bad_mu_rejected(self, grid, mu):
        with pytest.raises(InvalidParameterError):
            initial_state(grid, 1.0, -1.0, mu)

    def test_zero_field_helper(self, grid):
        f = zero_field(grid)
        assert np.abs(f.plus).max() == 0.0

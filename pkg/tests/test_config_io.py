import numpy as np
import pytest

from nldirac.config import RunConfig, parse_config
from nldirac.dynamics import CouplingConfig, CouplingMode
from nldirac.errors import ConfigError, SnapshotFormatError
from nldirac.evolution import FIG1_SNAPSHOT_TIMES, Scheme
from nldirac.fields import initial_state, zero_field
from nldirac.grids import Grid
from nldirac.snapshots import (
    SNAPSHOT_HEADER,
    read_snapshot,
    write_diagnostics,
    write_snapshot,
)

from conftest import make_smooth_field


class TestParseConfig:
    def test_empty_text_gives_reference_defaults(self):
        config = parse_config("")
        assert config.mode is CouplingMode.SPIN_SYMMETRIC
        assert config.alpha == 0.5
        assert config.m == 1.0
        assert config.mu == 1.0
        assert (config.a_plus, config.a_minus) == (1.0, -1.0)
        assert config.snapshot_times == FIG1_SNAPSHOT_TIMES
        assert (config.x_min, config.x_max, config.n_points) == (-40.0, 40.0, 1024)
        assert config.scheme is Scheme.RK4
        assert config.dt == 1e-3

    def test_thirring_selection(self):
        config = parse_config("mode = thirring\nalpha_v = 0.5\n")
        assert config.mode is CouplingMode.THIRRING
        coupling = config.coupling()
        assert (
            coupling.alpha_s,
            coupling.alpha_v,
            coupling.alpha_w,
            coupling.alpha_sw,
        ) == (0.0, 0.5, 0.0, 0.0)

    def test_bad_number_names_line(self):
        with pytest.raises(ConfigError) as excinfo:
            parse_config("alpha_v = banana")
        assert excinfo.value.line == 1
        assert "banana" in str(excinfo.value)

    def test_unknown_key_fatal(self):
        with pytest.raises(ConfigError) as excinfo:
            parse_config("# comment\nalpa = 0.5\n")
        assert excinfo.value.line == 2

    def test_duplicate_key_fatal(self):
        with pytest.raises(ConfigError):
            parse_config("m = 1\nm = 2\n")

    @pytest.mark.parametrize("value", ["inf", "-inf", "nan"])
    def test_nonfinite_numbers_rejected(self, value):
        with pytest.raises(ConfigError):
            parse_config(f"m = {value}")

    def test_malformed_line_rejected(self):
        with pytest.raises(ConfigError) as excinfo:
            parse_config("just some words\n")
        assert excinfo.value.line == 1

    def test_coupling_key_checked_against_mode(self):
        with pytest.raises(ConfigError):
            parse_config("mode = thirring\nalpha = 0.5\n")
        with pytest.raises(ConfigError):
            parse_config("mode = spin-symmetric\nalpha_v = 0.5\n")

    def test_named_mode_requires_its_key(self):
        with pytest.raises(ConfigError):
            parse_config("mode = thirring\n")

    def test_comments_and_snapshot_lists(self):
        config = parse_config(
            "snapshot_times = 0, 0.25, 0.5  # three slices\nt_final = 0.5\n"
        )
        assert config.snapshot_times == (0.0, 0.25, 0.5)
        assert config.t_final == 0.5

    def test_unknown_mode_lists_choices(self):
        with pytest.raises(ConfigError) as excinfo:
            parse_config("mode = soler\n")
        assert "thirring" in str(excinfo.value)


class TestSnapshotRoundTrip:
    def test_round_trip_precision(self, tmp_path, grid):
        f = make_smooth_field(grid, 5)
        path = tmp_path / "snap.csv"
        write_snapshot(f, 1.25, path, coupling=CouplingConfig(1.0), scheme="rk4", dt=1e-3)
        restored, t = read_snapshot(path)
        assert t == 1.25
        assert restored.grid == grid
        assert np.abs(restored.plus - f.plus).max() <= 1e-15
        assert np.abs(restored.minus - f.minus).max() <= 1e-15

    def test_zero_field_columns(self, tmp_path, grid):
        path = tmp_path / "zero.csv"
        write_snapshot(zero_field(grid), 0.0, path)
        rows = path.read_text().strip().splitlines()
        assert rows[0] == SNAPSHOT_HEADER
        assert len(rows) == grid.n_points + 1
        for row in rows[1:3]:
            assert [float(v) for v in row.split(",")[1:]] == [0.0] * 7

    def test_scalar_density_at_origin(self, tmp_path):
        grid = Grid(-20.0, 20.0, 256)
        f = initial_state(grid, 1.5, -1.0, 1.0)
        path = tmp_path / "t0.csv"
        write_snapshot(f, 0.0, path)
        data = np.loadtxt(path, delimiter=",", skiprows=1)
        origin = np.argmin(np.abs(data[:, 0]))
        assert data[origin, 5] == pytest.approx(1.5**2, abs=1e-15)

    def test_header_mismatch_detected(self, tmp_path, grid):
        path = tmp_path / "snap.csv"
        write_snapshot(zero_field(grid), 0.0, path)
        body = path.read_text().splitlines()
        body[0] = "x,foo"
        path.write_text("\n".join(body) + "\n")
        with pytest.raises(SnapshotFormatError):
            read_snapshot(path)

    def test_row_count_mismatch_detected(self, tmp_path, grid):
        path = tmp_path / "snap.csv"
        write_snapshot(zero_field(grid), 0.0, path)
        body = path.read_text().splitlines()
        path.write_text("\n".join(body[:-5]) + "\n")
        with pytest.raises(SnapshotFormatError):
            read_snapshot(path)

    def test_missing_sidecar_detected(self, tmp_path, grid):
        path = tmp_path / "snap.csv"
        write_snapshot(zero_field(grid), 0.0, path)
        (tmp_path / "snap.csv.meta.json").unlink()
        with pytest.raises(SnapshotFormatError):
            read_snapshot(path)

    def test_precision_override(self, tmp_path, grid, monkeypatch):
        monkeypatch.setenv("NLDIRAC_SNAPSHOT_DIGITS", "5")
        f = make_smooth_field(grid, 6)
        path = tmp_path / "lowp.csv"
        write_snapshot(f, 0.0, path)
        first_value = path.read_text().splitlines()[1].split(",")[1]
        assert len(first_value.replace("-", "").replace(".", "").split("e")[0]) <= 5

    def test_units_note_recorded(self, tmp_path, grid):
        import json

        path = tmp_path / "snap.csv"
        write_snapshot(zero_field(grid), 0.0, path)
        metadata = json.loads((tmp_path / "snap.csv.meta.json").read_text())
        assert "sqrt(m)" in metadata["units"]
        assert "1/m" in metadata["units"]


class TestDiagnosticsFile:
    def test_written_columns(self, tmp_path):
        from nldirac.diagnostics import DiagnosticsRecord

        records = [
            DiagnosticsRecord(0.0, 1.0, 2.0, 0.0, 1.0),
            DiagnosticsRecord(0.5, 1.0, 2.0, 0.0, 0.9),
        ]
        path = tmp_path / "diag.csv"
        write_diagnostics(records, path)
        lines = path.read_text().strip().splitlines()
        assert lines[0] == "t,Q,E,P,max_amp"
        assert len(lines) == 3

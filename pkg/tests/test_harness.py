import re

import numpy as np
import pytest

from wenoct.cli import main
from wenoct.config import RunConfig, build_config, parse_config_text, parse_mesh
from wenoct.convergence import ConvergenceReport, check_doubling, eoc, l2_error, linf_error
from wenoct.diagnostics import StepRecord, central_derivative_line, summarize, total_variation
from wenoct.grid import ConfigurationError, Grid
from wenoct.io import point_table, read_csv, slice_extract, write_csv, write_fields, write_series
from wenoct.physics import prim_to_cons
from wenoct.problems import Problem


def uniform_q(grid, rho=1.0):
    w = np.zeros((8,) + grid.shape)
    w[0] = rho
    w[4] = 1.0
    w[5] = 0.5
    return prim_to_cons(w)


# ---------------------------------------------------------------- config


def test_config_file_with_overrides(tmp_path):
    path = tmp_path / "run.cfg"
    path.write_text("problem = rotated_shock_tube  # comment\nmesh = 90x75\ntfinal = 0.1\ncfl = 2.5\n")
    cfg = build_config(path, cfl=1.5)
    assert cfg.problem == "rotated_shock_tube"
    assert cfg.mesh == (90, 75) and cfg.t_final == 0.1 and cfg.cfl == 1.5


def test_defaults_resolve_from_problem():
    cfg = RunConfig(problem="orszag_tang")
    assert cfg.resolved_mesh() == (96, 96) and cfg.resolved_t_final() == 3.0
    assert cfg.solver().cfl == 3.0


@pytest.mark.parametrize(
    "kw",
    [dict(cfl=-1.0), dict(mesh=(8, 8)), dict(mesh=(32,)), dict(scheme="x"), dict(format="h5")],
)
def test_invalid_configs(kw):
    with pytest.raises(ConfigurationError):
        RunConfig(problem="orszag_tang", **kw)


def test_config_text_errors():
    with pytest.raises(ConfigurationError):
        parse_config_text("no equals sign")
    with pytest.raises(ConfigurationError):
        parse_config_text("colour = red")
    with pytest.raises(ConfigurationError):
        parse_mesh("12,abc")


def test_cli_usage_error_for_negative_cfl(capsys):
    assert main(["run", "--problem", "orszag_tang", "--cfl", "-1"]) == 2
    assert "usage" in capsys.readouterr().err


def test_cli_run_writes_outputs(tmp_path, capsys):
    out = tmp_path / "ot"
    code = main(
        ["run", "--problem", "orszag_tang", "--mesh", "16,16", "--tfinal", "0.05", "--out", str(out)]
    )
    assert code == 0
    header, diag = read_csv(out / "diagnostics.csv")
    assert header[:3] == ["step", "t", "dt"]
    assert diag[-1, 1] == pytest.approx(0.05)
    fh, fields = read_csv(out / "fields.csv")
    assert fields.shape[0] == 256 and "schlieren_abs_grad_log_rho" in fh
    sh, sl = read_csv(out / "slice.csv")
    assert sl.shape[0] == 16
    assert "steps to t=0.05" in capsys.readouterr().out


def test_cli_run_is_deterministic(tmp_path):
    args = ["run", "--problem", "orszag_tang", "--mesh", "16,16", "--tfinal", "0.05"]
    main(args + ["--out", str(tmp_path / "a")])
    main(args + ["--out", str(tmp_path / "b")])
    assert (tmp_path / "a" / "diagnostics.csv").read_text() == (tmp_path / "b" / "diagnostics.csv").read_text()


def test_base_scheme_rotated_tube_loses_divergence(tmp_path):
    out = tmp_path / "tube"
    assert main(
        ["run", "--problem", "rotated_shock_tube", "--mesh", "36,30", "--scheme", "base",
         "--max-steps", "3", "--out", str(out)]
    ) == 0
    header, diag = read_csv(out / "diagnostics.csv")
    assert diag[-1, header.index("max_divB")] > 1e-3


# ---------------------------------------------------------------- io


def test_csv_two_by_two(tmp_path):
    g = Grid((2, 2), (0.0, 0.0), (0.5, 0.5))
    q = uniform_q(g)
    path = write_fields(q, None, g, "csv", tmp_path / "f.csv")
    lines = path.read_text().splitlines()
    assert len(lines) == 5
    assert lines[0] == "x,y,rho,u1,u2,u3,p,B1,B2,B3,divB"


def test_csv_round_trip_bitwise(tmp_path, rng):
    header = ["a", "b"]
    rows = rng.normal(size=(20, 2)) * 10.0 ** rng.integers(-300, 300, size=(20, 2))
    write_csv(tmp_path / "r.csv", header, rows)
    h, back = read_csv(tmp_path / "r.csv")
    assert h == header and np.array_equal(back, rows)


def test_point_table_is_x_fastest():
    g = Grid((3, 2), (0.0, 0.0), (1.0, 1.0))
    header, table = point_table(uniform_q(g), None, g)
    assert list(table[:4, 0]) == [0.0, 1.0, 2.0, 0.0]
    assert list(table[:4, 1]) == [0.0, 0.0, 0.0, 1.0]


VTK_FLOAT = r"[-+]?(\d+(\.\d*)?|\.\d+)([eE][-+]?\d+)?|[-+]?(nan|inf)"


def test_vtk_legacy_grammar(tmp_path):
    g = Grid((4, 3), (0.0, 1.0), (0.5, 0.25))
    q = uniform_q(g)
    path = write_fields(q, np.zeros((1,) + g.shape), g, "vtk", tmp_path / "f.vtk")
    lines = path.read_text().splitlines()
    assert lines[0] == "# vtk DataFile Version 3.0"
    assert lines[2] == "ASCII" and lines[3] == "DATASET STRUCTURED_POINTS"
    assert lines[4] == "DIMENSIONS 4 3 1"
    assert re.fullmatch(r"ORIGIN( \S+){3}", lines[5]) and re.fullmatch(r"SPACING( \S+){3}", lines[6])
    assert lines[7] == "POINT_DATA 12"
    k, arrays = 8, []
    while k < len(lines):
        m = re.fullmatch(r"SCALARS (\w+) double 1", lines[k])
        assert m, lines[k]
        assert lines[k + 1] == "LOOKUP_TABLE default"
        vals = lines[k + 2 : k + 14]
        assert all(re.fullmatch(VTK_FLOAT, v) for v in vals)
        arrays.append(m.group(1))
        k += 14
    assert arrays == ["rho", "u1", "u2", "u3", "p", "B1", "B2", "B3", "divB", "A3"]


def test_slice_records():
    g = Grid.uniform([-1, -1], [1, 1], (20, 16), [False, False])
    q = uniform_q(g)
    header, rows = slice_extract(q, None, g, axis=1, position=0.0)
    assert rows.shape[0] == 20
    assert np.all(rows[:, header.index("rho")] == 1.0)
    with pytest.raises(ConfigurationError):
        slice_extract(q, None, g, axis=1, position=3.0)


def test_series_needs_records(tmp_path):
    with pytest.raises(ConfigurationError):
        write_series(tmp_path / "s.csv", [])
    rec = StepRecord(0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0)
    h, data = read_csv(write_series(tmp_path / "s.csv", [rec, rec]))
    assert data.shape == (2, len(h))


# ---------------------------------------------------------------- convergence & diagnostics


def test_eoc_of_published_pair():
    assert eoc(7.150e-10, 4.439e-11) == pytest.approx(4.009, abs=1e-3)


def test_zero_error():
    g = Grid((4, 4), (0, 0), (0.25, 0.25))
    assert l2_error(np.zeros(g.n), g) == 0.0 and linf_error(np.zeros(g.n)) == 0.0


def test_l2_is_volume_weighted():
    g = Grid((4, 4), (0, 0), (0.5, 0.5))
    assert l2_error(np.ones(g.n), g) == pytest.approx(2.0)


def test_report_eoc():
    g = Grid((4,), (0,), (1.0,))
    rep = ConvergenceReport("demo")
    rep.add_level((16,), {"B1": np.full(4, 1.6e-3)}, g)
    rep.add_level((32,), {"B1": np.full(4, 1e-4)}, g)
    assert rep.eoc("B1")[0] == pytest.approx(4.0)
    header, rows = rep.rows()
    assert rows[1][0] == "32" and np.isnan(rows[0][3])


def test_non_doubling_meshes_rejected():
    with pytest.raises(ConfigurationError):
        check_doubling([(16, 32), (24, 48)])


def test_total_variation_of_constant_is_zero():
    assert total_variation(np.full(10, 3.3)) == 0.0
    assert total_variation([0, 1, 0, 2]) == 4.0


def test_central_derivative_of_linear_periodic_slope():
    x = np.linspace(0, 1, 50, endpoint=False)
    d = central_derivative_line(np.sin(2 * np.pi * x), 1 / 50)
    assert np.abs(d - 2 * np.pi * np.cos(2 * np.pi * x)).max() < 1e-3


def test_summary_does_not_mutate_state():
    problem = Problem.create("orszag_tang", (16, 16))
    q, _ = problem.initial_data()
    before = q.copy()
    rec = summarize(q, problem.grid, periodic=problem.spec.periodic)
    assert np.array_equal(q, before)
    assert rec.min_p > 0 and rec.max_divB < 1e-12

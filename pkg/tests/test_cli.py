"""Command-line interface: validation, serialization, end-to-end runs."""
from __future__ import annotations

import json
import math

import numpy as np
import pytest
from scipy.constants import c as c_light

from nlcasimir import ConfigError, DperpTable
from nlcasimir.cli import (
    FORCE_COLUMNS,
    RunSpec,
    _load_dperp,
    build_parser,
    default_material_path,
    emit_table,
    main,
)
from nlcasimir.dielectric import angular_frequency_from_ev

GOLD_OMEGA_P = angular_frequency_from_ev(9.0)


def spec_kwargs(**over):
    base = dict(
        scenario="delta-curve",
        material_path=None,
        model="hydro",
        dperp=None,
        lmin=None,
        lmax=None,
        xmin=None,
        xmax=None,
        points=2,
        out="out.csv",
        fmt="csv",
        rel_tol=1e-6,
    )
    base.update(over)
    return base


def read_csv(path):
    lines = path.read_text().splitlines()
    header = lines[0].split(",")
    rows = [[float(v) for v in ln.split(",")] for ln in lines[1:]]
    return header, rows


# ------------------------------------------------------------- validation


def test_runspec_accepts_defaults():
    RunSpec(**spec_kwargs())


@pytest.mark.parametrize(
    "over",
    [
        {"scenario": "banana"},
        {"model": "banana"},
        {"points": 1},
        {"fmt": "yaml"},
        {"rel_tol": 0.0},
        {"rel_tol": 1.0},
        {"lmin": 1.0, "lmax": 2.0, "xmin": 1.0, "xmax": 2.0},
        {"lmin": 1.0},
        {"xmax": 2.0},
        {"lmin": 2.0, "lmax": 1.0},
        {"lmin": -1.0, "lmax": 1.0},
        {"scenario": "reflectivity-scan", "lmin": 1.0, "lmax": 2.0},
    ],
)
def test_runspec_rejects(over):
    with pytest.raises(ConfigError):
        RunSpec(**spec_kwargs(**over))


# ----------------------------------------------------------- serialization


def test_emit_table_csv_exact_bytes(tmp_path):
    path = tmp_path / "t.csv"
    emit_table([(1.0, 0.5), (2.0, float("nan"))], "csv", path, columns=("a", "b"))
    want = (
        "a,b\n"
        "1.0000000000000000e+00,5.0000000000000000e-01\n"
        "2.0000000000000000e+00,nan\n"
    )
    assert path.read_bytes() == want.encode()


def test_emit_table_json_nan_is_null(tmp_path):
    path = tmp_path / "t.json"
    emit_table([(1.0, float("nan"))], "json", path, columns=("a", "b"))
    data = json.loads(path.read_text())
    assert data == {"a": [1.0], "b": [None]}


def test_emit_table_rejects_ragged_rows(tmp_path):
    with pytest.raises(ConfigError):
        emit_table([(1.0, 2.0), (1.0,)], "csv", tmp_path / "t.csv", columns=("a", "b"))


def test_load_dperp_constant_angstrom():
    assert _load_dperp("0.5") == pytest.approx(0.5e-10, rel=1e-15)
    assert _load_dperp("-2") == pytest.approx(-2e-10, rel=1e-15)


def test_load_dperp_table(tmp_path):
    t = tmp_path / "d.csv"
    t.write_text("xi_eV,d_perp_A\n1.0,0.4\n10.0,0.2\n")
    table = _load_dperp(str(t))
    assert isinstance(table, DperpTable)
    assert table(angular_frequency_from_ev(1.0)) == pytest.approx(0.4e-10)
    assert table(angular_frequency_from_ev(10.0)) == pytest.approx(0.2e-10)


@pytest.mark.parametrize(
    "body",
    [
        "wrong,header\n1.0,0.4\n",
        "xi_eV,d_perp_A\n1.0\n",
        "xi_eV,d_perp_A\n1.0,abc\n",
        "xi_eV,d_perp_A\n",
    ],
)
def test_load_dperp_table_errors(tmp_path, body):
    t = tmp_path / "d.csv"
    t.write_text(body)
    with pytest.raises(ConfigError):
        _load_dperp(str(t))


def test_load_dperp_missing_file():
    with pytest.raises(ConfigError):
        _load_dperp("/nonexistent/table.csv")


def test_default_material_path_exists():
    assert default_material_path().exists()


# ------------------------------------------------------------- end to end


def test_delta_curve_end_to_end(tmp_path, capsys):
    out = tmp_path / "delta.csv"
    rc = main(
        [
            "--scenario", "delta-curve", "--model", "hydro",
            "--xmin", "1", "--xmax", "4", "--points", "3",
            "--rel-tol", "1e-6", "--out", str(out),
        ]
    )
    assert rc == 0
    header, rows = read_csv(out)
    assert header == list(FORCE_COLUMNS)
    assert len(rows) == 3
    for L_nm, x, F_l, F_nl, delta, e_l, e_nl in rows:
        assert L_nm * 1e-9 * GOLD_OMEGA_P / c_light == pytest.approx(x, rel=1e-12)
        assert 0.0 < F_nl < F_l
        assert delta == pytest.approx((abs(F_nl) - abs(F_l)) / abs(F_l), rel=1e-12)
        assert delta < 0.0
        assert e_l > 0.0 and e_nl > 0.0
    assert rows[0][1] == pytest.approx(1.0, rel=1e-12)
    assert rows[-1][1] == pytest.approx(4.0, rel=1e-12)
    summary = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert summary["scenario"] == "delta-curve"
    assert summary["points"] == 3
    assert summary["max_error_estimate"] > 0.0
    assert summary["wall_time"] > 0.0


def test_delta_curve_deterministic_bytes(tmp_path):
    args = [
        "--scenario", "delta-curve", "--model", "hydro",
        "--xmin", "2", "--xmax", "3", "--points", "2", "--rel-tol", "1e-6",
    ]
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main([*args, "--out", str(a)]) == 0
    assert main([*args, "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_force_curve_perfect_mirror(tmp_path):
    out = tmp_path / "f.csv"
    rc = main(
        [
            "--scenario", "force-curve", "--perfect-mirror",
            "--lmin", "100", "--lmax", "1000", "--points", "2",
            "--rel-tol", "1e-8", "--out", str(out),
        ]
    )
    assert rc == 0
    _, rows = read_csv(out)
    from scipy.constants import hbar

    for L_nm, x, F_l, F_nl, delta, e_l, e_nl in rows:
        L = L_nm * 1e-9
        assert F_l == F_nl
        assert delta == 0.0
        assert F_l == pytest.approx(math.pi**2 * hbar * c_light / (240 * L**4), rel=1e-6)
    assert rows[0][0] == pytest.approx(100.0, rel=1e-12)


def test_force_curve_separation_grid_nm(tmp_path):
    out = tmp_path / "f.csv"
    rc = main(
        [
            "--scenario", "force-curve", "--model", "local",
            "--lmin", "50", "--lmax", "100", "--points", "2",
            "--rel-tol", "1e-6", "--out", str(out),
        ]
    )
    assert rc == 0
    _, rows = read_csv(out)
    assert rows[0][0] == pytest.approx(50.0, rel=1e-12)
    assert rows[1][0] == pytest.approx(100.0, rel=1e-12)
    # force-curve with a plain model fills both columns with that model
    assert rows[0][2] == rows[0][3]


def test_feibelman_compare_writes_two_files(tmp_path):
    out = tmp_path / "cmp.csv"
    rc = main(
        [
            "--scenario", "feibelman-compare",
            "--xmin", "0.5", "--xmax", "5", "--points", "2",
            "--rel-tol", "1e-6", "--out", str(out),
        ]
    )
    assert rc == 0
    exact = tmp_path / "cmp_exact.csv"
    lw = tmp_path / "cmp_long_wavelength.csv"
    assert exact.exists() and lw.exists() and not out.exists()
    _, rows_e = read_csv(exact)
    _, rows_l = read_csv(lw)
    # both curves share the local baseline column exactly
    assert rows_e[0][2] == rows_l[0][2]
    assert rows_e[0][3] != rows_l[0][3]


def test_partial_failure_exit_2_and_nan_rows(tmp_path, capsys):
    out = tmp_path / "p.csv"
    rc = main(
        [
            "--scenario", "delta-curve", "--model", "feibelman",
            "--dperp", "100", "--lmin", "1", "--lmax", "100",
            "--points", "2", "--rel-tol", "1e-6", "--out", str(out),
        ]
    )
    assert rc == 2
    _, rows = read_csv(out)
    assert math.isnan(rows[0][2]) and math.isnan(rows[0][4])
    assert math.isfinite(rows[1][2]) and rows[1][4] > 0.0


def test_partial_failure_json_nulls(tmp_path):
    out = tmp_path / "p.json"
    rc = main(
        [
            "--scenario", "delta-curve", "--model", "feibelman",
            "--dperp", "100", "--lmin", "1", "--lmax", "100",
            "--points", "2", "--rel-tol", "1e-6",
            "--format", "json", "--out", str(out),
        ]
    )
    assert rc == 2
    data = json.loads(out.read_text())
    assert data["F_local_Pa"][0] is None
    assert data["delta_F_over_F"][1] > 0.0


def test_reflectivity_scan_schema(tmp_path):
    out = tmp_path / "r.csv"
    rc = main(
        [
            "--scenario", "reflectivity-scan", "--model", "local",
            "--xmin", "0.5", "--xmax", "20", "--points", "4",
            "--out", str(out),
        ]
    )
    assert rc == 0
    header, rows = read_csv(out)
    assert header == ["xi_eV", "Q_inv_m", "r_s", "r_p"]
    for E, Q, r_s, r_p in rows:
        assert Q == pytest.approx(angular_frequency_from_ev(E) / c_light, rel=1e-12)
        assert -1.0 < r_s < 0.0
        assert 0.0 < r_p < 1.0


def test_reflectivity_scan_scib_smoke(tmp_path):
    out = tmp_path / "r.csv"
    rc = main(
        [
            "--scenario", "reflectivity-scan", "--model", "scib-lindhard",
            "--xmin", "1", "--xmax", "5", "--points", "2",
            "--rel-tol", "1e-6", "--out", str(out),
        ]
    )
    assert rc == 0
    _, rows = read_csv(out)
    assert all(-1.0 < r[2] < 0.0 and 0.0 < r[3] < 1.0 for r in rows)


def test_dielectric_scan_schema_and_transparency(tmp_path):
    material = tmp_path / "thin.toml"
    material.write_text("omega_p_eV = 9.0e-6\nv_F_m_per_s = 1.0e6\n")
    out = tmp_path / "d.csv"
    rc = main(
        [
            "--scenario", "dielectric-scan", "--model", "hydro",
            "--material", str(material),
            "--xmin", "0.1", "--xmax", "10", "--points", "4",
            "--out", str(out),
        ]
    )
    assert rc == 0
    header, rows = read_csv(out)
    assert header == ["xi_eV", "Q_inv_m", "eps_t", "eps_l", "r_s", "r_p"]
    for E, Q, et, el, r_s, r_p in rows:
        # a vanishing plasma density is optically indistinguishable
        # from vacuum
        assert et == pytest.approx(1.0, abs=1e-8)
        assert el == pytest.approx(1.0, abs=1e-8)
        assert abs(r_s) < 1e-8 and abs(r_p) < 1e-8


def test_dielectric_scan_gold_screens(tmp_path):
    out = tmp_path / "d.csv"
    rc = main(
        [
            "--scenario", "dielectric-scan", "--model", "hydro",
            "--xmin", "0.5", "--xmax", "5", "--points", "3",
            "--out", str(out),
        ]
    )
    assert rc == 0
    _, rows = read_csv(out)
    for E, Q, et, el, r_s, r_p in rows:
        assert et > 1.0 and el > 1.0
        assert el < et  # spatial dispersion weakens the screening at k = Q


def test_json_format_force_curve(tmp_path):
    out = tmp_path / "f.json"
    rc = main(
        [
            "--scenario", "delta-curve", "--model", "hydro",
            "--xmin", "2", "--xmax", "3", "--points", "2",
            "--rel-tol", "1e-6", "--format", "json", "--out", str(out),
        ]
    )
    assert rc == 0
    data = json.loads(out.read_text())
    assert list(data) == list(FORCE_COLUMNS)
    assert len(data["L_nm"]) == 2
    assert data["delta_F_over_F"][0] < 0.0


def test_missing_dperp_is_config_error(tmp_path):
    rc = main(
        [
            "--scenario", "delta-curve", "--model", "feibelman",
            "--xmin", "1", "--xmax", "2", "--points", "2",
            "--out", str(tmp_path / "x.csv"),
        ]
    )
    assert rc == 1


def test_bad_flag_value_exit_1():
    assert main(["--scenario", "banana"]) == 1
    assert main(["--points", "notanumber"]) == 1


def test_missing_material_file_exit_1(tmp_path):
    rc = main(
        [
            "--scenario", "delta-curve", "--material", str(tmp_path / "no.toml"),
            "--xmin", "1", "--xmax", "2", "--points", "2",
            "--out", str(tmp_path / "x.csv"),
        ]
    )
    assert rc == 1


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    assert "--scenario" in capsys.readouterr().out


def test_parser_defaults():
    ns = build_parser().parse_args([])
    assert ns.scenario == "delta-curve"
    assert ns.points == 81
    assert ns.rel_tol == 1e-8
    assert ns.format == "csv"

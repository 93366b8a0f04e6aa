import math

import pytest

import ttmol


def test_reference_level():
    sp = ttmol.ScaledParams(4.0, 2.0, 1.0)
    assert ttmol.num_bound_states(sp) == 1
    s = ttmol.energy_level(sp, 0)
    assert s.eps == pytest.approx(-0.25, abs=1e-14)
    assert s.a1 == pytest.approx(0.5, abs=1e-14)
    assert s.Lambda == pytest.approx(4.0, abs=1e-14)


def test_hulthen_reduction():
    sp = ttmol.ScaledParams(100.0, 0.0, 1.0)
    assert ttmol.num_bound_states(sp) == 9
    for n in range(9):
        expected = -(((n + 1) ** 2 - 100.0) / (2.0 * (n + 1))) ** 2
        assert ttmol.energy_level(sp, n).eps == pytest.approx(expected, rel=1e-13)


def test_physical_units():
    p = ttmol.PotentialParams(V0=2.0, V1=1.0, beta=1.0, q=1.0, mu=1.0, hbar=1.0)
    s = ttmol.energy_level(p, 0)
    assert s.E == pytest.approx(-0.125, abs=1e-14)
    assert ttmol.potential_eval(p, math.log(2.0)) == pytest.approx(-1.0, abs=1e-12)


def test_special_functions():
    assert ttmol.gauss_2f1(1.0, 1.0, 2.0, 0.5) == pytest.approx(2.0 * math.log(2.0), rel=1e-13)
    assert ttmol.ln_gamma(5.0) == pytest.approx(math.log(24.0), rel=1e-13)
    assert ttmol.jacobi_eval(1, 2.0, 1.0, 0.0) == pytest.approx(0.5, abs=1e-14)
    with pytest.raises(Exception):
        ttmol.gauss_2f1(1.0, 1.0, 2.0, 1.0)


def test_normalization():
    assert ttmol.normalize_unit_interval(0, 1.0, 1.0, 1.0) == pytest.approx(math.sqrt(30.0), rel=1e-12)
    closed = ttmol.closed_form_norm(2, 0.7, 2.0, 0.8)
    quad = ttmol.normalize_unit_interval(2, 0.7, 2.0, 0.8)
    assert closed == pytest.approx(quad, rel=1e-10)


def test_ladder_algebra():
    assert ttmol.annihilation_residual(0.5, 3.0, 1.0) <= 1e-12
    assert ttmol.lower_residual(3, 0.5, 3.0, 1.0) <= 1e-10
    r = ttmol.commutator_check(2, 0.5, 3.0, 1.0)
    assert max(r.lower_raise, r.weight_raise, r.lower_weight) <= 1e-10
    pair = ttmol.casimir_orderings(5, 3.0)
    assert pair.raise_then_lower == pytest.approx(2.0, abs=1e-12)
    assert pair.lower_then_raise == pytest.approx(2.0, abs=1e-12)


def test_oracle_agreement():
    sp = ttmol.ScaledParams(4.0, 2.0, 1.0)
    grid = ttmol.RadialGrid(0.0, 40.0, 1500)
    extrap = ttmol.richardson(sp, grid, 1)
    assert extrap[0] == pytest.approx(-0.25, abs=5e-5)


def test_wavefunction_eval():
    sp = ttmol.ScaledParams(4.0, 2.0, 1.0)
    ws = ttmol.eigenstate(sp, 0, ttmol.NormConvention.Radial, 1.0)
    assert ttmol.eval_r(ws, 1.0, math.log(2.0)) == pytest.approx(
        ttmol.eval_x(ws, 0.5), rel=1e-13
    )
    assert ttmol.orthogonality_residual(ws, ws, 1.0) == pytest.approx(1.0, abs=1e-10)


def test_cli_roundtrip(tmp_path):
    cfg = tmp_path / "cfg.txt"
    out = tmp_path / "out"
    cfg.write_text(
        "potential.v0 = 4\npotential.v1 = 2\npotential.q = 1\n"
        f"output.directory = {out}\n"
    )
    assert ttmol.run_cli(["spectrum", str(cfg)]) == 0
    body = (out / "spectrum.csv").read_text()
    assert body == "n,Lambda,a1,eps,E\n0,4,0.5,-0.25,-0.25\n"

import json
import math
import pathlib

import pytest

import zolo

CONFIGS = pathlib.Path(__file__).resolve().parents[2] / "configs"


def two_disks():
    E = zolo.Region.disk(1.0, 0.7)
    return E, E.negated()


def test_version():
    assert zolo.__version__.count(".") == 2


def test_mobius_modulus_and_ratio():
    E, F = two_disks()
    m = zolo.solve_map(E, F)
    assert m.h == pytest.approx(5.996501399405, rel=1e-10)
    ctx = zolo.build_context(m, 5)
    assert ctx.empirical_ratio() * m.h**5 == pytest.approx(1.0, rel=1e-6)
    assert ctx.count_zeros() == 5


def test_rectangle_pair_sandwich():
    E = zolo.Region.rectangle(-1.4, -0.6, -0.6, 0.6)
    m = zolo.solve_map(E, E.negated())
    assert m.h == pytest.approx(10.7, rel=0.02)
    gc = zolo.geometry_constants(m)
    for n in (2, 4):
        ratio = zolo.build_context(m, n).empirical_ratio()
        b = zolo.zolotarev_upper(gc, n)
        assert m.h**-n <= ratio
        if b.upper_valid:
            assert ratio <= b.upper


def test_bounds():
    b = zolo.zolotarev_upper(zolo.GeometryConstants(10.0), 5)
    assert b.upper == pytest.approx(9.00606119179419e-05, rel=1e-12)
    assert zolo.zolotarev_lower(2.0, 3) == 0.125
    assert zolo.asymptotic_constant(1.5, 1.0) == 12
    assert zolo.m_n(1, 1, 2, 1) == 4.5


def test_geometry():
    L = zolo.Region.polygon([0.3 - 0.5j, 1.3 - 0.5j, 1.3 + 0.5j, 0.8 + 0.5j, 0.8, 0.3])
    assert zolo.rotation(L) == pytest.approx(1.5)
    assert not zolo.is_convex(L)
    assert zolo.Region.disk(0, 1).contains(0.5)
    with pytest.raises(zolo.InvalidInput):
        zolo.Region.disk(0, 1).contains(1.0)


def test_aaa_and_vandermonde():
    z = [complex(math.cos(t), math.sin(t)) for t in (2 * math.pi * (j + 0.3) / 200 for j in range(200))]
    r = zolo.aaa_fit(z, [1 / (x - 2) for x in z])
    assert r.degree == 1
    poles, zeros = r.poles_zeros()
    assert abs(poles[0] - 2) < 1e-10
    assert zolo.vandermonde_h(0.2 + 0.1j, 0.4) == pytest.approx(2.34935043016053, rel=1e-12)


def test_cli_round_trip():
    code, out, err = zolo.run_cli(["map", "--config", str(CONFIGS / "two_disks.json")])
    assert code == 0, err
    assert json.loads(out)["h"] == pytest.approx(5.996501399405, rel=1e-10)
    code, _, err = zolo.run_cli(["bound", "--config", "/nonexistent.json"])
    assert code == 1


def test_errors_are_typed():
    with pytest.raises(zolo.InvalidInput):
        zolo.zolotarev_lower(1.0, 3)
    assert issubclass(zolo.NumericalFailure, zolo.Error)

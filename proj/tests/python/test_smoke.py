import json
import math

import pytest

import eulerwaves as ew


def test_catalogue_lists_every_entry():
    keys = [e["key"] for e in ew.catalogue()]
    assert keys == [
        "kelvin-torus",
        "kelvin-disk",
        "rossby-sphere",
        "kelvin-hyperbolic",
        "rossby-s3",
        "ck-cylinder",
        "twisted-annulus",
    ]
    assert "twisted-annulus m [c a b]" in ew.list_text()


def test_describe_sphere_exact_lambda():
    d = ew.describe("rossby-sphere", {"n": 1, "m": 2})
    assert d["lambda_exact"] == "1/3"
    assert d["classification"] == "genuine"
    assert ew.describe("rossby-sphere", {"n": 1, "m": 1})["classification"] == "stationary"


def test_verify_report():
    r = ew.verify("rossby-sphere", {"n": 1, "m": 2}, grid=10)
    assert r["pass"] is True
    names = {c["name"] for c in r["checks"]}
    assert {"euler", "linearized", "energy"} <= names
    again = ew.verify_json("rossby-sphere", {"n": 1, "m": 2}, grid=10)
    assert json.loads(again) == r


def test_twisted_alpha_and_roots():
    assert abs(ew.twisted_alpha(-0.3, 2 * math.pi / 3, 2 * math.pi, 1) - 1.25) < 1e-8
    assert abs(ew.crossproduct_root(0.5, 2 * math.pi / 3, 2 * math.pi) - 0.75) < 1e-10
    assert abs(ew.bessel_j_zero(0, 1) - 2.404825557695773) < 1e-12
    assert abs(ew.ck_beta(0, 1) - 3.831705970207512) < 1e-10
    assert abs(ew.hyperbolic_beta(1) - 3.800994341364244496) < 1e-10
    assert abs(ew.bessel_j(0.5, 1.0) - math.sqrt(2 / math.pi) * math.sin(1.0)) < 1e-15


def test_field_and_trace():
    f = ew.field("kelvin-disk", {"rho": 0}, 0.0, [0.5, 0.3])
    assert f["U_R"] == pytest.approx([0.0, 1.0])
    tr = ew.trace("kelvin-disk", {"rho": 0}, [0.6, 0.4], 0.0, 2 * math.pi, 2 * math.pi / 2000)
    assert tr["status"] == "completed"
    assert tr["x"][-1][0] == pytest.approx(0.6, abs=1e-8)
    assert tr["csv"].startswith("t,r,theta")
    amb = ew.trace("rossby-s3", {}, [1.0, 0.0, 0.0, 0.0], 0.0, 5.0, ambient=True)
    assert all(abs(math.sqrt(sum(c * c for c in x)) - 1.0) < 1e-8 for x in amb["x"])


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        ew.describe("no-such-key")
    with pytest.raises(ValueError):
        ew.describe("kelvin-torus", {"j": 1})
    with pytest.raises(ew.EulerWavesError):
        ew.describe("kelvin-torus", {"n": 0, "m": 0})
    with pytest.raises(ew.EulerWavesError):
        ew.trace("kelvin-disk", {}, [1.5, 0.0])


def test_cli_entry():
    code, out, _ = ew.run_cli(["eigen", "disk-beta", "--n", "0", "--m", "1", "--format", "json"])
    assert code == 0
    assert abs(json.loads(out)["beta"] - 2.404825557695772) < 1e-12
    assert ew.run_cli(["bogus"])[0] == 64

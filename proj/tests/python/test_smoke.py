import math

import pytest

import lagkit


def test_catalog_names():
    names = lagkit.catalog_names()
    assert len(names) >= 12
    assert "clifford_torus" in names
    assert lagkit.catalog_listing()[0]["name"] == names[0]


def test_parse_round_trip():
    spec = lagkit.catalog("clifford_torus")
    assert lagkit.parse(spec.serialize()) == spec
    assert spec.signature == (2, 0)
    assert spec.num_params == 2
    assert spec.expected_index == 0


def test_parse_error():
    with pytest.raises(lagkit.ParseError):
        lagkit.parse("params t:[0,1]; map exp(i*t)*q;")
    with pytest.raises(lagkit.Error):
        lagkit.catalog("no_such_entry")


def test_check_clifford():
    report = lagkit.check(lagkit.catalog("clifford_torus"))
    assert report["spec_name"] == "clifford_torus"
    assert all(c["pass"] for c in report["checks"].values())
    assert abs(report["sphere_fit"]["radius_sq_signed"] - 1.0) < 1e-10


def test_check_whitney_fails_fit():
    report = lagkit.check(lagkit.catalog("whitney_sphere"))
    assert report["checks"]["lagrangian"]["pass"]
    assert not report["checks"]["sphere_fit"]["pass"]
    assert report["sphere_fit"]["rms_residual"] > 0.05


def test_circle_product():
    product = lagkit.circle_product(lagkit.catalog("minimal_legendrian_torus_S5"))
    assert product.num_params == 3
    report = lagkit.check(product)
    assert all(c["pass"] for c in report["checks"].values() if c["status"] != "skipped")


def test_evaluate_and_metric():
    spec = lagkit.catalog("theorem43_example")
    z = lagkit.evaluate(spec, [0.0, 0.5])
    assert abs(z[0] - math.cosh(0.5)) < 1e-14
    g = lagkit.metric(spec, [0.0, 0.5])
    assert abs(g[0][0] + 1.0) < 1e-14
    k = lagkit.sectional_curvature(lagkit.catalog("product_S1xS2"), [0.1, 0.2, 0.3], 1, 2)
    assert abs(k - 1.0) < 1e-7


def test_affine_image_fit():
    moved = lagkit.affine_image(lagkit.catalog("clifford_torus"), 2.5, [0.3, 0.7j])
    fit = lagkit.check(moved)["sphere_fit"]
    assert abs(fit["center"][0][0] - 0.3) < 1e-7
    assert abs(fit["center"][1][1] - 0.7) < 1e-7
    assert abs(math.sqrt(fit["radius_sq_signed"]) - 2.5) < 1e-7


def test_crosscheck():
    result = lagkit.crosscheck(lagkit.catalog("whitney_sphere"), order=3)
    assert result["pass"]
    assert [o["order"] for o in result["orders"]] == [1, 2, 3]


def test_cli():
    code, out, _ = lagkit.run_cli(["check", "clifford_torus", "--json"])
    assert code == 0
    assert '"spec_name": "clifford_torus"' in out
    assert lagkit.run_cli(["check", "nosuchfile.imm"])[0] == 2

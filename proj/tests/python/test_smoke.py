import math

import pytest

import shrinkcert as sc


def test_version():
    assert sc.__version__ == "0.1.0"


def test_stone_values():
    sphere = sc.area({"type": "sphere", "R": 2.0})
    assert sphere["op"] == "area"
    assert sphere["method"] == "closed_form"
    assert abs(sphere["value"] - 4 / math.e) < 1e-9
    cyl = sc.area({"type": "cylinder", "R": math.sqrt(2), "h": "inf"})
    assert abs(cyl["value"] - math.sqrt(2 * math.pi / math.e)) < 1e-8
    assert abs(sc.gaussian_volume_ball()["value"] - 0.5445) < 5e-4


def test_entropy_of_sphere():
    e = sc.entropy({"type": "sphere", "R": 2.0})
    assert abs(e["value"] - 4 / math.e) < 1e-8
    assert not e["boundary_warning"]


def test_capped_cylinders():
    (r,) = sc.verify_bounds("capped-cylinders")
    assert r["pass"]
    assert 1.865 <= r["computed_max"] <= 1.869
    assert "capped-cylinders" in sc.bound_names()


def test_sweepout_single_cell():
    p = sc.select_parameters(1, 1.0)
    assert p["h"] > 0 and p["Omega"] >= 1.0
    res = sc.inversion_max_area(1, 1.0, 40)
    assert res["pass"]
    assert res["max_area"] < 2.0


def test_jacobi():
    z = sc.jacobi_zeros()
    assert z["r2"]["root"] < z["r1"]["root"]
    assert sc.stability_residual("phi1", 1.0) < 1e-10
    rep = sc.verify_no_positive_radial([-1.0, 0.0, 1e3], 1000)
    assert rep["pass"]
    s = sc.sphere_profile_first_zero()
    assert s["zero"]["root"] < math.pi / 2 - 1e-3


def test_errors():
    with pytest.raises(ValueError):
        sc.area({"type": "sphere", "R": -1.0})
    with pytest.raises(ValueError):
        sc.stability_residual("phi3", 1.0)
    with pytest.raises(ValueError):
        sc.riemann_hurwitz_genus(2, 0, 0, 1)


def test_config_roundtrip():
    c = sc.parse_config("g_list = 1,2\nR_grid = 0.5:1:3\n")
    assert c["g_list"] == [1, 2]
    assert c["R_points"] == 3

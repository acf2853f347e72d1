import json
import os
import subprocess

import pytest

import sigma_lab


def test_sigma_values():
    assert sigma_lab.sigma(54)["sigma"] == 3
    assert sigma_lab.sigma(55)["sigma"] == 4
    big = sigma_lab.sigma(10**12)
    assert big["sigma"] == 15
    assert big["method"] == "series"


def test_bracket_candidates():
    b = sigma_lab.bracket(4)
    assert b["candidates"] == [2, 3]
    assert b["lower"]["lo"].startswith("1.76086064367947")


def test_intervals():
    t = sigma_lab.t_value(2)
    assert t.lo.startswith("3.8442310281591168248636716")
    assert not t.contains("3.8442310281591168248636716")
    assert t.width < 1e-30
    assert abs(float(sigma_lab.ln_factorial(5)) - 4.787491742782046) < 1e-12
    assert "Interval[" in repr(t)


def test_n_a():
    assert sigma_lab.n_a("2")["n_a"] == 4
    assert sigma_lab.n_a("10")["n_a"] == 25
    with pytest.raises(ValueError):
        sigma_lab.n_a("1")


def test_changepoints():
    records = sigma_lab.changepoints(5000)
    assert [r["n_i"] for r in records] == [3, 54, 458, 3480]
    assert sigma_lab.first_n_with_sigma(4) == 55


def test_verify_suite():
    out = sigma_lab.verify("gn")
    assert out["verdict"] == "PASS"
    assert out["reports"][0]["check_id"] == "gn"


def test_cli_matches_module():
    exe = os.environ.get("SIGMA_LAB_BIN")
    if not exe:
        pytest.skip("SIGMA_LAB_BIN not set")
    out = subprocess.run([exe, "sigma", "458"], capture_output=True, text=True, check=True).stdout
    assert json.loads(out) == sigma_lab.sigma(458)

import pygrs
import pytest


def test_cyclotomic_roots_sum_to_zero():
    total = pygrs.Cyclotomic()
    for k in range(5):
        total = total + pygrs.Cyclotomic.root(5, k)
    assert total.is_zero()
    z = pygrs.Cyclotomic.root(3)
    assert str(z * z.conj()) == "1"
    assert pygrs.Cyclotomic("6/4").rational() == "3/2"


def test_help_scan_psl2():
    scan = pygrs.help_scan("psl2", p=7)
    assert scan["feasible"] == [4]
    assert scan["filters_agree"]


def test_help_scan_psl33_is_empty():
    scan = pygrs.help_scan("psl33", jobs=2)
    assert scan["feasible"] == []


def test_counterexample_pattern():
    out = pygrs.construct("psl2", p=7, pattern="1,2,4")
    assert out["valenti"] is None
    assert out["report"]["recovered_pattern"] == "1,2,4"
    assert pygrs.construct("psl2", p=5, pattern="1,2")["valenti"] is not None


def test_psl33_construction():
    report = pygrs.construct("psl33")["report"]
    assert report["eps_counts"]["(3,-2)"] == 2


def test_gap_and_oracle():
    gap = pygrs.gap_report(7)
    assert "1,2,4" in gap["missing"]
    assert pygrs.square_lines(11) == (6, 6, True)
    g = pygrs.oracle("psl2", 9)
    assert g["order"] == 360
    assert pygrs.orthogonal("psl33")


def test_errors_are_value_errors():
    with pytest.raises(ValueError):
        pygrs.construct("psl2", p=7, pattern="1,2")
    with pytest.raises(pygrs.GrsError):
        pygrs.Cyclotomic("1/0")

"""Smoke tests for the python bindings."""

import pytest

import cubecover as cc


def test_subcube_roundtrip_and_covers():
    assert cc.enumerate_subcubes(3, 3) == ["***"]
    assert len(cc.enumerate_subcubes(3, 1)) == 12
    assert cc.covers("01*", "0**")
    assert not cc.covers("01*", "1**")
    assert cc.signature("1*01*1") == [1, 1, 1]
    with pytest.raises(ValueError):
        cc.signature("0a*")


def test_coloring():
    s = cc.scheme(3, 1)
    assert (s["r"], s["k"], s["kprime"], s["palette"]) == (2, 2, 2, 4)
    assert cc.color_of("1*0", 3, 1) == [1, 0]
    q = cc.find_colored_subcube("***", [1, 0], 3, 1)
    assert q == "1*0"
    assert cc.verify_polychromatic(6, 3, 1)["ok"]
    klass = cc.color_class(5, 3, 1, [0, 0])
    assert cc.verify_covering(klass)["ok"]


def test_facet_cover():
    cover = cc.facet_cover(3, 1)
    assert sorted(cover["members"]) == sorted(["00*", "1*0", "*11"])
    report = cc.verify_covering(cover)
    assert report["ok"] and report["targets_checked"] == 6


def test_pipeline_is_seed_deterministic():
    a = cc.pipeline_cover(6, 4, 2, seed=42)
    b = cc.pipeline_cover(6, 4, 2, seed=42)
    assert a == b
    assert cc.verify_covering(a)["ok"]


def test_solver_and_bounds():
    result = cc.solve_min_cover(4, 3, 2)
    assert result["f"] == 4 and result["proved_optimal"]
    assert cc.brute_force_min_cover(3, 2, 1, 2) is None
    assert cc.lower_bound_f(4, 2, 1) == 8
    assert cc.bounds_pc(3, 1) == (4, 6)
    assert cc.bounds_c(3, 1) == ("1/12", "1/4")
    report = cc.bound_report(4, 2, 1)
    assert report["ex_upper"] == 24
    assert cc.turan_relation(3, 2, 3) == 9
    assert cc.verify_binomial_identity(6, 4, 2)

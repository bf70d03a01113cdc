"""Parametric families: construction, claimed counts, verification reports."""

from __future__ import annotations

import json
import math

import pytest

from surfrep.families import (
    claimed_counts,
    exact_knot,
    lpq_link,
    parse_family,
    torus_knot,
    verify_family,
)
from surfrep.surface import MultiCurve, SurfaceModel


#-- Construction --#

def test_constructor_validation():
    with pytest.raises(ValueError):
        torus_knot(0, 5)
    with pytest.raises(ValueError):
        torus_knot(3, 0)
    with pytest.raises(ValueError):
        exact_knot(1, 2)
    with pytest.raises(ValueError):
        exact_knot(4, 0)
    with pytest.raises(ValueError):
        lpq_link(0, 4)
    with pytest.raises(ValueError):
        lpq_link(2, 6)  # q must exceed 3p
    lpq_link(2, 7)


def test_weight_vectors():
    assert torus_knot(3, 5).curve == MultiCurve(SurfaceModel.torus(), (5,), (3,))
    assert exact_knot(4, 2).curve == MultiCurve(
        SurfaceModel.chain(2), (5, 4, 2), (2, 2, 2)
    )
    assert exact_knot(5, 3).curve == MultiCurve(
        SurfaceModel.chain(3), (6, 5, 3, 3), (3, 2, 3, 3)
    )
    assert exact_knot(4, 1).curve == MultiCurve(SurfaceModel.chain(1), (5, 4), (2, 2))
    assert lpq_link(2, 7).curve == MultiCurve(
        SurfaceModel.chain(2), (7, 7, 7), (2, 2, 2)
    )


def test_extrapolation_flag():
    assert exact_knot(4, 1).extrapolated is True
    assert exact_knot(4, 2).extrapolated is False
    assert torus_knot(2, 3).extrapolated is False


def test_parse_family():
    assert parse_family("torus:3,5") == torus_knot(3, 5)
    assert parse_family("exactly:4,2") == exact_knot(4, 2)
    assert parse_family("lpq:2,7") == lpq_link(2, 7)
    for bad in ("torus:3", "torus:3,5,7", "weird:1,2", "lpq:2,6", "torus:a,b", "torus"):
        with pytest.raises(ValueError):
            parse_family(bad)


#-- Claimed counts --#

def test_exactly_counts_match_computation():
    """Closed-form counts agree with the pairing for the whole grid."""
    for n in range(2, 9):
        for g in range(1, 4):
            inst = exact_knot(n, g)
            for cls, expected, _ in claimed_counts(inst):
                assert inst.curve.boundary_count(cls) == expected, (n, g, str(cls))


def test_lpq_counts_match_computation():
    for p in range(1, 4):
        for q in range(3 * p + 1, 3 * p + 5):
            inst = lpq_link(p, q)
            for cls, expected, _ in claimed_counts(inst):
                assert inst.curve.boundary_count(cls) == expected


def test_torus_counts_match_computation():
    for p in range(1, 7):
        for q in range(1, 7):
            inst = torus_knot(p, q)
            for cls, expected, _ in claimed_counts(inst):
                assert inst.curve.boundary_count(cls) == expected


def test_exactly_count_values_at_4_2():
    by_name = {str(cls): (v, f) for cls, v, f in claimed_counts(exact_knot(4, 2))}
    assert by_name == {
        "m0": (4, "n"),
        "m1": (4, "n"),
        "m2": (4, "2*ceil(n/2)"),
        "l0": (7, "n+1+ceil(n/2)"),
        "l1": (9, "2*n+1"),
        "l2": (6, "n+ceil(n/2)"),
    }


#-- Reports --#

def test_torus_reports_pass():
    for p in range(1, 7):
        for q in range(1, 7):
            report = verify_family(torus_knot(p, q))
            assert report.passed, report
            names = [c.name for c in report.checks]
            assert "smoothed components = gcd(p, q)" in names
            assert "crossing upper bound = min(p, q)" in names


def test_exactly_reports_even_weights_pass():
    for n in (2, 4, 6, 8):
        for g in (1, 2, 3):
            report = verify_family(exact_knot(n, g))
            assert report.passed, (n, g, report)


def test_exactly_reports_odd_weights_fail_only_representativity():
    """Odd n at genus >= 2: counts hold but the certificate stops at n-1."""
    for n in (3, 5, 7):
        for g in (2, 3):
            report = verify_family(exact_knot(n, g))
            assert not report.passed
            failing = [c for c in report.checks if not c.passed]
            assert [c.name for c in failing] == ["certified representativity"]
            assert all(c.passed for c in report.checks if c.name.startswith("count"))
    # genus 1 keeps the loop condition only, which meets n for odd n too
    for n in (3, 5, 7):
        assert verify_family(exact_knot(n, 1)).passed


def test_lpq_reports_pass():
    for p, q in [(1, 4), (1, 5), (2, 7), (2, 9), (3, 10)]:
        report = verify_family(lpq_link(p, q))
        assert report.passed, (p, q, report)
        comps = next(c for c in report.checks if c.name == "smoothed components")
        assert comps.actual >= 1


def test_report_json_shape():
    blob = json.loads(json.dumps(verify_family(torus_knot(2, 3)).to_json()))
    assert blob["family"] == "torus:2,3"
    assert blob["pass"] is True
    assert blob["extrapolated"] is False
    assert all(set(c) == {"name", "expected", "actual", "pass"} for c in blob["checks"])


def test_components_match_gcd_for_torus_family():
    from surfrep.smoothing import trace_components

    for p in range(1, 7):
        for q in range(1, 7):
            assert trace_components(torus_knot(p, q).curve) == math.gcd(p, q)

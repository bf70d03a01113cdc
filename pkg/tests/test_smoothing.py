"""Component counts for coherently smoothed multicurves."""

from __future__ import annotations

import math
import random

from hypothesis import given, strategies as st

from surfrep.smoothing import trace_components, trace_orbits
from surfrep.surface import MultiCurve, SurfaceModel


def _total_crossings(mc: MultiCurve) -> int:
    from surfrep.surface import CurveClass

    k = mc.surface.num_classes
    return sum(
        mc.longitudes[j] * mc.boundary_count(CurveClass("l", j)) for j in range(k)
    )


#-- Torus --#

def test_torus_components_are_gcd():
    """q meridian copies against p longitude copies close into gcd(p, q) curves."""
    for p in range(1, 13):
        for q in range(1, 13):
            mc = MultiCurve(SurfaceModel.torus(), (q,), (p,))
            assert trace_components(mc) == math.gcd(p, q)


def test_torus_zero_weight_copies_are_untouched():
    assert trace_components(MultiCurve(SurfaceModel.torus(), (4,), (0,))) == 4
    assert trace_components(MultiCurve(SurfaceModel.torus(), (0,), (3,))) == 3


#-- Genus-1 chain --#

def test_chain1_components_merge_to_gcd():
    """Both meridians cross both longitudes, so only the total weights matter."""
    rng = random.Random(7)
    for _ in range(200):
        a = (rng.randrange(0, 7), rng.randrange(0, 7))
        b = (rng.randrange(0, 7), rng.randrange(0, 7))
        if sum(a) + sum(b) == 0:
            continue
        mc = MultiCurve(SurfaceModel.chain(1), a, b)
        if sum(a) > 0 and sum(b) > 0:
            assert trace_components(mc) == math.gcd(sum(a), sum(b))
        else:
            assert trace_components(mc) == sum(a) + sum(b)


#-- Higher genus --#

def test_knot_weightings_trace_to_one_component():
    """The weightings used by exact_knot close up into a single curve."""
    for g in (1, 2, 3):
        for n in range(2, 9):
            c, f = -(-n // 2), n // 2
            a = (n + 1, n) + (c,) * (g - 1)
            b = (c, f) + (c,) * (g - 1)
            mc = MultiCurve(SurfaceModel.chain(g), a, b)
            assert trace_components(mc) == 1


def test_small_chain2_walk_detail():
    """Weights (3,2,1)/(1,1,1): 12 crossings, one closed walk of 24 states."""
    mc = MultiCurve(SurfaceModel.chain(2), (3, 2, 1), (1, 1, 1))
    assert _total_crossings(mc) == 12
    orbits = trace_orbits(mc)
    assert len(orbits) == 1
    assert len(orbits[0]) == 24


def test_untouched_copies_counted():
    mc = MultiCurve(SurfaceModel.chain(1), (0, 0), (3, 2))
    assert trace_components(mc) == 5
    # l_1 on a genus-3 chain meets only m_0 and m_1; zero those out and
    # its copies survive while the rest still close up.
    mc2 = MultiCurve(SurfaceModel.chain(3), (0, 0, 2, 2), (0, 4, 1, 1))
    orbits = trace_orbits(mc2)
    assert trace_components(mc2) == len(orbits) + 4


#-- Structure of the walk --#

@given(
    g=st.integers(min_value=1, max_value=3),
    seed=st.integers(min_value=0, max_value=2**32 - 1),
)
def test_orbits_partition_all_states(g: int, seed: int):
    """Orbit lengths sum to twice the crossing count and never repeat a state."""
    rng = random.Random(seed)
    k = g + 1
    a = tuple(rng.randrange(0, 6) for _ in range(k))
    b = tuple(rng.randrange(0, 6) for _ in range(k))
    if sum(a) + sum(b) == 0:
        a = (1,) + a[1:]
    mc = MultiCurve(SurfaceModel.chain(g), a, b)
    orbits = trace_orbits(mc)
    states = [s for orbit in orbits for s in orbit]
    assert len(states) == len(set(states)) == 2 * _total_crossings(mc)
    assert trace_components(mc) >= 1
    assert trace_orbits(mc) == orbits  # deterministic

"""Lower-bound certificates from cut-open planar pieces.

Cutting the chain surface along all meridians (or all longitudes) yields
two mirror copies of a planar surface with one boundary circle per cut
class.  The multicurve falls apart into arc classes: each surviving
curve class leaves parallel arcs joining the two boundary circles it
crossed.  Every compressing disk of an embedded surface meets such a
piece in essential loops and essential arcs, so exact minimum crossing
numbers for those give a lower bound on how often any compressing disk
boundary must cross the multicurve:

* every essential loop in every piece crosses >= n arcs, and
* every essential arc in every piece crosses >= n/2 arcs

together certify that no disk boundary meets the multicurve fewer than
n times.  Combined with the cheapest reference class as an upper bound
this often pins the representativity exactly.

Pieces here are necklace-shaped: boundary circles sit in a cyclic order
and every arc class joins two cyclically adjacent circles.  Minima are
computed exactly by enumerating separating configurations; no drawing
is ever constructed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Any

from surfrep.smoothing import PlanarPiece, cut_pieces
from surfrep.surface import MultiCurve

__all__ = [
    "PieceBounds",
    "Certificate",
    "Representativity",
    "min_essential_loop",
    "min_essential_arc",
    "evaluate_piece",
    "certify_pieces",
    "certify_lower",
    "lower_bound_holds",
    "best_certified_bound",
    "upper_bound",
    "build_certificate",
    "representativity_exact",
]


#-- Exact minima --#

def min_essential_loop(piece: PlanarPiece) -> int:
    """Fewest arcs crossed by any essential loop in the piece.

    A loop is essential when it separates the boundary circles into two
    nonempty groups; isotoping it to cross each arc class at most once
    per separation, the minimum is attained on a split of the circle
    set.  Circle 0 stays on the outside, which enumerates each split
    exactly once.
    """
    k = piece.circles
    best: int | None = None
    for size in range(1, k):
        for inside in combinations(range(1, k), size):
            group = set(inside)
            cost = sum(m for a, b, m in piece.arcs if (a in group) != (b in group))
            if best is None or cost < best:
                best = cost
    assert best is not None  # k >= 2 always yields a split
    return best


def _check_necklace(piece: PlanarPiece) -> None:
    k = piece.circles
    for a, b, _ in piece.arcs:
        if (b - a) % k not in (1, k - 1):
            raise ValueError(
                f"arc pair ({a}, {b}) is not cyclically adjacent among {k} circles"
            )


def min_essential_arc(piece: PlanarPiece, circle: int) -> int | None:
    """Fewest arcs crossed by an essential arc based on ``circle``.

    The arc starts and ends on the given boundary circle and, together
    with part of that circle, must enclose at least one other circle on
    each side.  Returns None when fewer than three circles make every
    such arc inessential or boundary-parallel.

    Endpoints of the candidate arc sit in gaps between consecutive arc
    ends on the base circle; those ends come in two contiguous blocks,
    one per adjacent arc class.  For every endpoint placement and every
    split of the remaining circles the crossing count is exact, since
    each configuration is realizable with no excess crossings.
    """
    k = piece.circles
    if not (0 <= circle < k):
        raise ValueError(f"no circle {circle} in a piece with {k} circles")
    if k < 3:
        return None
    _check_necklace(piece)

    cp = (circle - 1) % k  # neighbor circle of the first end block
    cn = (circle + 1) % k  # neighbor circle of the second end block
    mu_prev = piece.multiplicity(cp, circle)
    mu_next = piece.multiplicity(circle, cn)
    far = [(a, b, m) for a, b, m in piece.arcs if circle not in (a, b)]

    # end r of the canonical order is a prev-class end iff r < mu_prev
    m = mu_prev + mu_next
    others = [c for c in range(k) if c != circle]

    best: int | None = None
    span = range(m) if m else range(1)
    for s in span:
        for t in range(s, m if m else 1):
            p_in = max(0, min(t, mu_prev) - min(s, mu_prev))
            n_in = (t - s) - p_in
            for size in range(1, len(others)):
                for chosen in combinations(others, size):
                    inside = set(chosen)
                    cost = sum(mlt for a, b, mlt in far if (a in inside) != (b in inside))
                    cost += (mu_prev - p_in) if cp in inside else p_in
                    cost += (mu_next - n_in) if cn in inside else n_in
                    if best is None or cost < best:
                        best = cost
    return best


#-- Certificates --#

@dataclass(frozen=True)
class PieceBounds:
    """Exact loop and arc minima for one piece (None: no arc candidates)."""

    piece_id: str
    loop_min: int
    arc_min: int | None

    def to_json(self) -> dict[str, Any]:
        return {"id": self.piece_id, "loop_min": self.loop_min, "arc_min": self.arc_min}


@dataclass(frozen=True)
class Certificate:
    """Evaluation of the two lower-bound conditions at level n.

    ``exact`` is only set when the certified level n agrees with the
    cheapest-class upper bound, pinning the representativity to n.
    """

    n: int
    pieces: tuple[PieceBounds, ...]
    lower_ok: bool
    upper: int | None
    exact: int | None

    def to_json(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "pieces": [p.to_json() for p in self.pieces],
            "lower_ok": self.lower_ok,
            "upper": self.upper,
            "exact": self.exact,
        }


@dataclass(frozen=True)
class Representativity:
    """Certified range: lower <= representativity <= upper."""

    lower: int
    upper: int
    exact: int | None

    def to_json(self) -> dict[str, Any]:
        return {"lower": self.lower, "upper": self.upper, "exact": self.exact}


def evaluate_piece(piece: PlanarPiece) -> PieceBounds:
    """Loop minimum and the minimum over all base circles of arc minima."""
    arc_minima = [
        v for b in range(piece.circles) if (v := min_essential_arc(piece, b)) is not None
    ]
    return PieceBounds(
        piece.id,
        min_essential_loop(piece),
        min(arc_minima) if arc_minima else None,
    )


def lower_bound_holds(bounds: list[PieceBounds], n: int) -> bool:
    """True when every loop min is >= n and every arc min is >= n/2."""
    for pb in bounds:
        if pb.loop_min < n:
            return False
        # exact comparison arc_min >= n/2 without rounding
        if pb.arc_min is not None and 2 * pb.arc_min < n:
            return False
    return True


def best_certified_bound(bounds: list[PieceBounds]) -> int | None:
    """Largest n the piece bounds certify, the minimum of the piece scores."""
    scores: list[int] = []
    for pb in bounds:
        vals = [pb.loop_min]
        if pb.arc_min is not None:
            vals.append(2 * pb.arc_min)
        scores.append(min(vals))
    return min(scores) if scores else None


def certify_pieces(pieces: list[PlanarPiece], n: int) -> Certificate:
    """Evaluate the certificate conditions on explicit pieces."""
    if not pieces:
        raise ValueError("no pieces to certify")
    bounds = tuple(evaluate_piece(p) for p in pieces)
    return Certificate(n, bounds, lower_bound_holds(list(bounds), n), None, None)


def _all_pieces(mc: MultiCurve) -> list[PlanarPiece]:
    return [*cut_pieces(mc, "meridians"), *cut_pieces(mc, "longitudes")]


def certify_lower(mc: MultiCurve, n: int) -> Certificate:
    """Cut the multicurve both ways and evaluate the conditions at n."""
    return certify_pieces(_all_pieces(mc), n)


def upper_bound(mc: MultiCurve) -> int:
    """Cheapest reference class: an embedded upper bound for the representativity."""
    return mc.min_boundary_count()


def build_certificate(mc: MultiCurve, n: int) -> Certificate:
    """Full certificate at level n, including the upper-bound comparison."""
    cert = certify_lower(mc, n)
    upper = upper_bound(mc)
    exact = n if cert.lower_ok and upper == n else None
    return Certificate(n, cert.pieces, cert.lower_ok, upper, exact)


def representativity_exact(mc: MultiCurve) -> Representativity:
    """Best certified window around the representativity.

    The upper bound is the cheapest reference class; the lower bound is
    the largest level all four pieces certify, capped by the upper
    bound.  ``exact`` is set when the two meet.
    """
    bounds = [evaluate_piece(p) for p in _all_pieces(mc)]
    upper = upper_bound(mc)
    star = best_certified_bound(bounds)
    lower = upper if star is None else min(star, upper)
    return Representativity(lower, upper, upper if lower == upper else None)

"""Face-width of graphs embedded in closed oriented surfaces.

A map is encoded combinatorially: every edge contributes two darts,
each vertex carries the counterclockwise cyclic order of its darts, and
the involution alpha swaps the two darts of each edge.  Faces are
recovered as orbits of sigma-after-alpha, which yields the Euler
characteristic and the genus without any geometry.

The face-width of a map is the smallest number of intersections a
noncontractible closed curve on the surface must have with the graph.
Such a curve can be pushed to alternate between vertices and faces, so
the face-width is half the length of a shortest noncontractible cycle
in the radial map, the bipartite map joining each vertex to each face
once per incidence.  Candidate cycles come from breadth first search
trees; noncontractibility of each candidate is decided by cutting the
surface open along it and inspecting the pieces.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import Any

__all__ = [
    "RotationSystem",
    "radial",
    "cut_along",
    "cycle_is_contractible",
    "face_width",
]


@dataclass(frozen=True)
class RotationSystem:
    """A graph embedded in a closed oriented surface.

    ``rotations[v]`` lists the darts at vertex v in counterclockwise
    order; ``edges`` pairs each dart with its opposite.  Dart names are
    arbitrary integers, each appearing exactly once in the rotations
    and exactly once across the edge pairs.
    """

    rotations: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rotations", tuple(tuple(r) for r in self.rotations))
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        if not self.rotations:
            raise ValueError("map needs at least one vertex")
        seen: set[int] = set()
        for v, rot in enumerate(self.rotations):
            if not rot:
                raise ValueError(f"vertex {v} has no darts")
            for d in rot:
                if d in seen:
                    raise ValueError(f"dart {d} appears twice in the rotations")
                seen.add(d)
        paired: set[int] = set()
        for e in self.edges:
            if len(e) != 2 or e[0] == e[1]:
                raise ValueError(f"edge {e} must pair two distinct darts")
            for d in e:
                if d not in seen:
                    raise ValueError(f"edge dart {d} missing from the rotations")
                if d in paired:
                    raise ValueError(f"dart {d} appears in two edges")
                paired.add(d)
        if paired != seen:
            raise ValueError(f"darts without an opposite: {sorted(seen - paired)}")
        assert self.euler_characteristic % 2 == 0

    #-- Derived structure --#

    @cached_property
    def _vertex_of(self) -> dict[int, int]:
        return {d: v for v, rot in enumerate(self.rotations) for d in rot}

    @cached_property
    def _alpha(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for d1, d2 in self.edges:
            out[d1], out[d2] = d2, d1
        return out

    @cached_property
    def _sigma(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for rot in self.rotations:
            for t, d in enumerate(rot):
                out[d] = rot[(t + 1) % len(rot)]
        return out

    def vertex_of(self, dart: int) -> int:
        return self._vertex_of[dart]

    def alpha(self, dart: int) -> int:
        return self._alpha[dart]

    def sigma(self, dart: int) -> int:
        return self._sigma[dart]

    @cached_property
    def faces(self) -> tuple[tuple[int, ...], ...]:
        """Orbits of sigma-after-alpha, each starting at its least dart."""
        nxt = {d: self._sigma[self._alpha[d]] for d in self._vertex_of}
        seen: set[int] = set()
        out: list[tuple[int, ...]] = []
        for start in sorted(nxt):
            if start in seen:
                continue
            orbit = [start]
            seen.add(start)
            d = nxt[start]
            while d != start:
                orbit.append(d)
                seen.add(d)
                d = nxt[d]
            out.append(tuple(orbit))
        return tuple(out)

    @property
    def num_vertices(self) -> int:
        return len(self.rotations)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def num_faces(self) -> int:
        return len(self.faces)

    @cached_property
    def euler_characteristic(self) -> int:
        return self.num_vertices - self.num_edges + self.num_faces

    def connected_components(self) -> list[set[int]]:
        """Vertex sets reachable through edges."""
        out: list[set[int]] = []
        left = set(range(self.num_vertices))
        while left:
            comp = {left.pop()}
            queue = list(comp)
            while queue:
                v = queue.pop()
                for d in self.rotations[v]:
                    w = self._vertex_of[self._alpha[d]]
                    if w in left:
                        left.remove(w)
                        comp.add(w)
                        queue.append(w)
            out.append(comp)
        return out

    def component_euler_characteristics(self) -> list[int]:
        comps = self.connected_components()
        where = {v: t for t, comp in enumerate(comps) for v in comp}
        chi = [len(comp) for comp in comps]
        for d1, _ in self.edges:
            chi[where[self._vertex_of[d1]]] -= 1
        for orbit in self.faces:
            chi[where[self._vertex_of[orbit[0]]]] += 1
        return chi

    def genus(self) -> int:
        if len(self.connected_components()) != 1:
            raise ValueError("genus needs a connected map")
        return (2 - self.euler_characteristic) // 2

    #-- Serialization --#

    def to_json(self) -> dict[str, Any]:
        return {
            "rotations": [list(r) for r in self.rotations],
            "edges": [list(e) for e in self.edges],
        }

    @staticmethod
    def from_json(obj: dict[str, Any]) -> "RotationSystem":
        return RotationSystem(
            tuple(tuple(int(d) for d in r) for r in obj["rotations"]),
            tuple(tuple(int(d) for d in e) for e in obj["edges"]),
        )


#-- Radial map --#

def radial(rs: RotationSystem) -> RotationSystem:
    """Vertex-face incidence map of ``rs``, embedded in the same surface.

    One new edge per dart joins the dart's vertex node to its face
    node.  Vertex nodes keep the original dart order and face nodes
    take the reversed face orbit, which keeps the embedding
    consistently oriented: every face of the result is a quadrilateral
    around one original edge, so the Euler characteristic is preserved.
    """
    darts = sorted(rs._vertex_of)
    idx = {d: 2 * t for t, d in enumerate(darts)}
    rotations = [tuple(idx[d] for d in rot) for rot in rs.rotations]
    for orbit in rs.faces:
        rotations.append(tuple(idx[d] + 1 for d in reversed(orbit)))
    edges = tuple((idx[d], idx[d] + 1) for d in darts)
    out = RotationSystem(tuple(rotations), edges)
    assert out.euler_characteristic == rs.euler_characteristic
    return out


#-- Cutting along a cycle --#

def cut_along(rs: RotationSystem, cycle: Sequence[int]) -> RotationSystem:
    """Cut the surface open along a simple cycle of darts.

    ``cycle`` lists darts d0 .. d(L-1); dart dt leaves vertex vt, its
    opposite sits at v(t+1), vertices and edges are distinct, and the
    walk closes up.  Cycle vertices and edges are doubled, one copy per
    side of the cut; the two boundary walks become faces of the result,
    so its Euler characteristic is two larger.
    """
    L = len(cycle)
    if L == 0:
        raise ValueError("cycle must be nonempty")
    verts = [rs.vertex_of(d) for d in cycle]
    if len(set(verts)) != L:
        raise ValueError("cycle repeats a vertex")
    if len({frozenset((d, rs.alpha(d))) for d in cycle}) != L:
        raise ValueError("cycle repeats an edge")
    for t, d in enumerate(cycle):
        if rs.vertex_of(rs.alpha(d)) != verts[(t + 1) % L]:
            raise ValueError("cycle darts do not join up")

    copy: dict[tuple[int, str], int] = {}
    fresh = max(rs._vertex_of) + 1
    for d in cycle:
        for x in (d, rs.alpha(d)):
            for s in ("L", "R"):
                copy[(x, s)] = fresh
                fresh += 1

    # at vertex vt the cycle arrives by the opposite of d(t-1) and
    # leaves by dt; sweeping counterclockwise from the outgoing dart to
    # the incoming one passes the darts left of the direction of travel
    out_dart = {verts[t]: cycle[t] for t in range(L)}
    in_dart = {verts[(t + 1) % L]: rs.alpha(d) for t, d in enumerate(cycle)}

    rotations: list[tuple[int, ...]] = []
    for v, rot in enumerate(rs.rotations):
        if v not in out_dart:
            rotations.append(rot)
            continue
        o, i = out_dart[v], in_dart[v]
        k = len(rot)
        left: list[int] = []
        p = (rot.index(o) + 1) % k
        while rot[p] != i:
            left.append(rot[p])
            p = (p + 1) % k
        right: list[int] = []
        p = (rot.index(i) + 1) % k
        while rot[p] != o:
            right.append(rot[p])
            p = (p + 1) % k
        rotations.append((copy[(o, "L")], *left, copy[(i, "L")]))
        rotations.append((copy[(i, "R")], *right, copy[(o, "R")]))

    cut_edges = {frozenset((d, rs.alpha(d))) for d in cycle}
    edges = [e for e in rs.edges if frozenset(e) not in cut_edges]
    for d in cycle:
        a = rs.alpha(d)
        edges.append((copy[(d, "L")], copy[(a, "L")]))
        edges.append((copy[(d, "R")], copy[(a, "R")]))

    out = RotationSystem(tuple(rotations), tuple(edges))
    assert out.euler_characteristic == rs.euler_characteristic + 2
    return out


def cycle_is_contractible(rs: RotationSystem, cycle: Sequence[int]) -> bool:
    """Whether the simple cycle bounds a disk on the surface.

    Cutting along a contractible cycle splits the map in two, with the
    disk side capping off to a sphere; any other outcome, one piece or
    two pieces of positive genus, certifies an essential cycle.
    """
    chis = cut_along(rs, cycle).component_euler_characteristics()
    return len(chis) == 2 and 2 in chis


#-- Face-width --#

def _cycle_candidates(rs: RotationSystem) -> list[tuple[int, ...]]:
    """Simple cycles containing a shortest one from every essential class.

    Breadth first search from every root; each non-tree edge closes a
    fundamental cycle, trimmed of the common tree prefix.  Any family
    of cycles closed under rerouting along two of three internally
    disjoint paths has a shortest member of this form, and the
    noncontractible cycles are such a family.
    """
    found: dict[frozenset[frozenset[int]], tuple[int, ...]] = {}
    for root in range(rs.num_vertices):
        path: dict[int, tuple[int, ...]] = {root: ()}
        order = [root]
        head = 0
        tree: set[frozenset[int]] = set()
        while head < len(order):
            v = order[head]
            head += 1
            for d in rs.rotations[v]:
                w = rs.vertex_of(rs.alpha(d))
                ekey = frozenset((d, rs.alpha(d)))
                if w not in path:
                    path[w] = path[v] + (d,)
                    order.append(w)
                    tree.add(ekey)
                elif ekey not in tree:
                    if w == v:
                        cand: tuple[int, ...] = (d,)
                    else:
                        pu, pw = path[v], path[w]
                        c = 0
                        while c < len(pu) and c < len(pw) and pu[c] == pw[c]:
                            c += 1
                        back = tuple(rs.alpha(x) for x in reversed(pw[c:]))
                        cand = pu[c:] + (d,) + back
                    key = frozenset(frozenset((x, rs.alpha(x))) for x in cand)
                    if key not in found or len(found[key]) > len(cand):
                        found[key] = cand
    return sorted(found.values(), key=len)


def face_width(rs: RotationSystem) -> int | float:
    """Least crossings of a noncontractible closed curve with the graph.

    Infinite on the sphere, where every closed curve is contractible.
    Elsewhere this is half the length of a shortest noncontractible
    cycle of the radial map, found by checking candidates in length
    order.
    """
    if rs.genus() == 0:
        return math.inf
    rad = radial(rs)
    for cand in _cycle_candidates(rad):
        if not cycle_is_contractible(rad, cand):
            return len(cand) // 2
    raise AssertionError("no noncontractible cycle on a positive genus surface")

"""Certified interval propagation for knot and spatial-graph invariants.

Tracks six integer-valued quantities per subject: the representativity r,
the bridge number b, the bridge string number bs, the waist, the first
Betti number beta1 of the underlying graph, and the number of link
components.  Each fact is a closed interval with non-negative rational
endpoints; :func:`propagate` narrows the intervals to the fixed point of
a fixed rule catalog, recording for every endpoint the chain of rules
that produced it.

Rule catalog (applied in both directions where the relation allows):

    R1   r <= bs / 2                     always
    R2   2 <= r <= b                     nontrivial knots
    R3   bs = 2 * b                      nontrivial knots
    R4   r = b = min(p, q)               torus_knot(p, q)
    R5   r = 2 and b = 2                 two_bridge
    R6   r <= 3                          algebraic
    R7   r = 3 iff the parameters are +-(-2, 3, 3) or +-(-2, 3, 5),
         otherwise r != 3                pretzel(p, q, s)
    R8   r = 2                           composite
    R9   r <= 4                          has_conway_sphere
    R10  bs <= 2 * b + 1                 theta_curve
    R11  r <= beta1                      primitive
    R12  waist <= bs / 3                 always
    R13  r >= 1                          always

Subjects are assumed non-trivial throughout; trivial knots and graphs
are not valid subjects.  A step that empties an interval, either because
the lower bound exceeds the upper bound or because no integer point
remains, raises :class:`Contradiction` carrying the responsible chain.
Intervals are never rounded during propagation; integer hulls are taken
only when displaying results.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Mapping, Sequence

__all__ = [
    "ATTRIBUTES",
    "RULE_ORDER",
    "TAG_NAMES",
    "Contradiction",
    "FactSet",
    "Interval",
    "SubjectTags",
    "betti1",
    "propagate",
]

#: quantities the engine reasons about; all of them are integer valued
ATTRIBUTES = ("r", "b", "bs", "waist", "beta1", "components")

TAG_NAMES = frozenset(
    {
        "nontrivial_knot",
        "torus_knot",
        "two_bridge",
        "algebraic",
        "pretzel",
        "composite",
        "has_conway_sphere",
        "theta_curve",
        "primitive",
        "spatial_graph",
    }
)

#: tags that can only describe a nontrivial knot
_KNOT_TAGS = frozenset(
    {
        "nontrivial_knot",
        "torus_knot",
        "two_bridge",
        "algebraic",
        "pretzel",
        "composite",
        "has_conway_sphere",
    }
)

_PARAM_ARITY = {"torus_knot": 2, "pretzel": 3}

RULE_ORDER = tuple(f"R{i}" for i in range(1, 14))

#: pretzel parameter multisets whose representativity is exactly 3
_PRETZEL_THREE = frozenset(
    tuple(sorted(sign * x for x in base))
    for base in ((-2, 3, 3), (-2, 3, 5))
    for sign in (1, -1)
)


def betti1(vertices: int, edges: int, components: int) -> int:
    """First Betti number E - V + C of a graph with the given counts."""
    if vertices < 1:
        raise ValueError("graph needs at least one vertex")
    if edges < 0:
        raise ValueError("edge count cannot be negative")
    if not 1 <= components <= vertices:
        raise ValueError("component count must lie between 1 and the vertex count")
    # each edge merges at most two components
    if components < vertices - edges:
        raise ValueError("too few edges for that component count")
    return edges - vertices + components


#-- Facts --#

@dataclass(frozen=True)
class Interval:
    """Closed interval with non-negative rational endpoints.

    ``hi`` is None when the attribute is unbounded above.  The rule
    chains record which rules justified each endpoint, seed facts
    appearing as ``seed:<attribute>``.
    """

    lo: Fraction = Fraction(0)
    hi: Fraction | None = None
    lo_rules: tuple[str, ...] = ()
    hi_rules: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.lo < 0:
            raise ValueError("interval endpoints must be non-negative")
        if self.hi is not None and self.hi < self.lo:
            raise ValueError("interval is empty")

    def contains(self, value: int | Fraction) -> bool:
        return self.lo <= value and (self.hi is None or value <= self.hi)

    def integer_hull(self) -> tuple[int, int | None]:
        """Tightest integer endpoints; the display form for integral attributes."""
        return math.ceil(self.lo), None if self.hi is None else math.floor(self.hi)

    def to_json(self) -> dict[str, Any]:
        return {
            "lo": str(self.lo),
            "hi": None if self.hi is None else str(self.hi),
            "lo_rules": list(self.lo_rules),
            "hi_rules": list(self.hi_rules),
        }


@dataclass(frozen=True)
class SubjectTags:
    """Validated set of descriptive flags, with parameters where required."""

    names: frozenset[str] = frozenset()
    torus_knot: tuple[int, int] | None = None
    pretzel: tuple[int, int, int] | None = None

    def __post_init__(self) -> None:
        unknown = self.names - TAG_NAMES
        if unknown:
            raise ValueError(f"unknown tags: {sorted(unknown)}")
        if ("torus_knot" in self.names) != (self.torus_knot is not None):
            raise ValueError("torus_knot requires parameters p,q and no other tag does")
        if ("pretzel" in self.names) != (self.pretzel is not None):
            raise ValueError("pretzel requires three strand parameters")
        if self.torus_knot is not None:
            if len(self.torus_knot) != 2:
                raise ValueError("torus_knot takes exactly two parameters")
            p, q = self.torus_knot
            # the curve is a nontrivial knot only for coprime p, q >= 2
            if p < 2 or q < 2 or math.gcd(p, q) != 1:
                raise ValueError("torus_knot parameters must be coprime and at least 2")
        if self.pretzel is not None and len(self.pretzel) != 3:
            raise ValueError("pretzel takes exactly three parameters")
        if "theta_curve" in self.names and self.names & _KNOT_TAGS:
            raise ValueError("theta_curve is incompatible with knot tags")

    @property
    def effective(self) -> frozenset[str]:
        """Tag closure: any knot-only tag implies nontrivial_knot."""
        if self.names & _KNOT_TAGS:
            return self.names | {"nontrivial_knot"}
        return self.names

    @classmethod
    def from_strings(cls, items: Iterable[str]) -> "SubjectTags":
        """Parse flags of the form ``name`` or ``name=p,q``."""
        names: set[str] = set()
        params: dict[str, tuple[int, ...]] = {}
        for item in items:
            name, eq, raw = item.partition("=")
            name = name.strip()
            if name in names:
                raise ValueError(f"duplicate tag {name!r}")
            names.add(name)
            if name in _PARAM_ARITY:
                if not eq:
                    raise ValueError(f"tag {name!r} needs parameters, e.g. {name}=3,5")
                try:
                    values = tuple(int(part) for part in raw.split(","))
                except ValueError:
                    raise ValueError(f"parameters of {name!r} must be integers") from None
                if len(values) != _PARAM_ARITY[name]:
                    raise ValueError(
                        f"tag {name!r} takes {_PARAM_ARITY[name]} parameters"
                    )
                params[name] = values
            elif eq:
                raise ValueError(f"tag {name!r} takes no parameters")
        return cls(
            frozenset(names),
            params.get("torus_knot"),  # type: ignore[arg-type]
            params.get("pretzel"),  # type: ignore[arg-type]
        )

    def labels(self) -> tuple[str, ...]:
        """Canonical string form, one entry per tag, sorted by name."""
        out = []
        for name in sorted(self.names):
            values = getattr(self, name) if name in _PARAM_ARITY else None
            out.append(name if values is None else name + "=" + ",".join(map(str, values)))
        return tuple(out)


class Contradiction(Exception):
    """An interval became empty during propagation.

    ``rules`` is the deduplicated union of the lower and upper chains of
    the offending attribute, in derivation order.
    """

    def __init__(
        self,
        attribute: str,
        lo: Fraction,
        hi: Fraction,
        lo_rules: tuple[str, ...],
        hi_rules: tuple[str, ...],
    ) -> None:
        self.attribute = attribute
        self.lo = lo
        self.hi = hi
        self.lo_rules = lo_rules
        self.hi_rules = hi_rules
        self.rules = tuple(dict.fromkeys((*lo_rules, *hi_rules)))
        reason = "no integer point" if lo <= hi else "lower bound exceeds upper bound"
        chain = " -> ".join(self.rules) if self.rules else "start"
        super().__init__(f"{attribute} in [{lo}, {hi}] is impossible ({reason}); via {chain}")


@dataclass(frozen=True)
class FactSet:
    """Fixed point of rule propagation: one interval per attribute."""

    tags: SubjectTags
    facts: Mapping[str, Interval]

    def __getitem__(self, attribute: str) -> Interval:
        return self.facts[attribute]

    def snapshot(self) -> dict[str, tuple[Fraction, Fraction | None]]:
        """Endpoint values only; the order-independent part of the result."""
        return {name: (iv.lo, iv.hi) for name, iv in self.facts.items()}

    def to_json(self) -> dict[str, Any]:
        return {
            "tags": list(self.tags.labels()),
            "facts": {name: self.facts[name].to_json() for name in ATTRIBUTES},
        }


#-- Propagation --#

class _Fact:
    """Mutable working copy of one interval during propagation."""

    __slots__ = ("name", "lo", "hi", "lo_rules", "hi_rules")

    def __init__(self, name: str) -> None:
        self.name = name
        self.lo = Fraction(0)
        self.hi: Fraction | None = None
        self.lo_rules: tuple[str, ...] = ()
        self.hi_rules: tuple[str, ...] = ()

    def _verify(self) -> None:
        hi = self.hi
        if hi is None:
            return
        # integral attribute: empty also when no integer fits
        if self.lo > hi or math.ceil(self.lo) > math.floor(hi):
            raise Contradiction(self.name, self.lo, hi, self.lo_rules, self.hi_rules)

    def raise_lo(self, value: Fraction, rules: tuple[str, ...]) -> bool:
        if value <= self.lo:
            return False
        self.lo, self.lo_rules = value, rules
        self._verify()
        return True

    def lower_hi(self, value: Fraction, rules: tuple[str, ...]) -> bool:
        if self.hi is not None and value >= self.hi:
            return False
        self.hi, self.hi_rules = value, rules
        self._verify()
        return True


def _chain(source: tuple[str, ...], rule: str) -> tuple[str, ...]:
    return source if source and source[-1] == rule else (*source, rule)


def _r1(f: dict[str, _Fact], tags: SubjectTags) -> bool:
    r, bs = f["r"], f["bs"]
    changed = bs.raise_lo(2 * r.lo, _chain(r.lo_rules, "R1"))
    if bs.hi is not None:
        changed |= r.lower_hi(bs.hi / 2, _chain(bs.hi_rules, "R1"))
    return changed


def _r2(f: dict[str, _Fact], tags: SubjectTags) -> bool:
    if "nontrivial_knot" not in tags.effective:
        return False
    r, b = f["r"], f["b"]
    changed = r.raise_lo(Fraction(2), ("R2",))
    changed |= b.raise_lo(r.lo, _chain(r.lo_rules, "R2"))
    if b.hi is not None:
        changed |= r.lower_hi(b.hi, _chain(b.hi_rules, "R2"))
    return changed


def _r3(f: dict[str, _Fact], tags: SubjectTags) -> bool:
    if "nontrivial_knot" not in tags.effective:
        return False
    b, bs = f["b"], f["bs"]
    changed = bs.raise_lo(2 * b.lo, _chain(b.lo_rules, "R3"))
    changed |= b.raise_lo(bs.lo / 2, _chain(bs.lo_rules, "R3"))
    if b.hi is not None:
        changed |= bs.lower_hi(2 * b.hi, _chain(b.hi_rules, "R3"))
    if bs.hi is not None:
        changed |= b.lower_hi(bs.hi / 2, _chain(bs.hi_rules, "R3"))
    return changed


def _r4(f: dict[str, _Fact], tags: SubjectTags) -> bool:
    if tags.torus_knot is None:
        return False
    m = Fraction(min(tags.torus_knot))
    changed = False
    for name in ("r", "b"):
        changed |= f[name].raise_lo(m, ("R4",))
        changed |= f[name].lower_hi(m, ("R4",))
    return changed


def _r5(f: dict[str, _Fact], tags: SubjectTags) -> bool:
    if "two_bridge" not in tags.names:
        return False
    two = Fraction(2)
    changed = False
    for name in ("r", "b"):
        changed |= f[name].raise_lo(two, ("R5",))
        changed |= f[name].lower_hi(two, ("R5",))
    return changed


def _r6(f: dict[str, _Fact], tags: SubjectTags) -> bool:
    if "algebraic" not in tags.names:
        return False
    return f["r"].lower_hi(Fraction(3), ("R6",))


def _r7(f: dict[str, _Fact], tags: SubjectTags) -> bool:
    if tags.pretzel is None:
        return False
    r = f["r"]
    three = Fraction(3)
    if tuple(sorted(tags.pretzel)) in _PRETZEL_THREE:
        return r.raise_lo(three, ("R7",)) | r.lower_hi(three, ("R7",))
    # outside the listed pairs only r != 3 is known: shave endpoints at 3,
    # leaving interior threes alone (interval arithmetic cannot see them)
    changed = False
    if r.hi == three:
        changed = r.lower_hi(Fraction(2), _chain(r.hi_rules, "R7"))
    if r.lo == three:
        changed |= r.raise_lo(Fraction(4), _chain(r.lo_rules, "R7"))
    return changed


def _r8(f: dict[str, _Fact], tags: SubjectTags) -> bool:
    if "composite" not in tags.names:
        return False
    two = Fraction(2)
    r = f["r"]
    return r.raise_lo(two, ("R8",)) | r.lower_hi(two, ("R8",))


def _r9(f: dict[str, _Fact], tags: SubjectTags) -> bool:
    if "has_conway_sphere" not in tags.names:
        return False
    return f["r"].lower_hi(Fraction(4), ("R9",))


def _r10(f: dict[str, _Fact], tags: SubjectTags) -> bool:
    if "theta_curve" not in tags.names:
        return False
    b, bs = f["b"], f["bs"]
    changed = b.raise_lo((bs.lo - 1) / 2, _chain(bs.lo_rules, "R10"))
    if b.hi is not None:
        changed |= bs.lower_hi(2 * b.hi + 1, _chain(b.hi_rules, "R10"))
    return changed


def _r11(f: dict[str, _Fact], tags: SubjectTags) -> bool:
    if "primitive" not in tags.names:
        return False
    beta = f["beta1"]
    if beta.hi is None:
        return False
    return f["r"].lower_hi(beta.hi, _chain(beta.hi_rules, "R11"))


def _r12(f: dict[str, _Fact], tags: SubjectTags) -> bool:
    waist, bs = f["waist"], f["bs"]
    changed = bs.raise_lo(3 * waist.lo, _chain(waist.lo_rules, "R12"))
    if bs.hi is not None:
        changed |= waist.lower_hi(bs.hi / 3, _chain(bs.hi_rules, "R12"))
    return changed


def _r13(f: dict[str, _Fact], tags: SubjectTags) -> bool:
    return f["r"].raise_lo(Fraction(1), ("R13",))


_RULES = {
    "R1": _r1,
    "R2": _r2,
    "R3": _r3,
    "R4": _r4,
    "R5": _r5,
    "R6": _r6,
    "R7": _r7,
    "R8": _r8,
    "R9": _r9,
    "R10": _r10,
    "R11": _r11,
    "R12": _r12,
    "R13": _r13,
}


def propagate(
    tags: SubjectTags,
    seeds: Mapping[str, int | Fraction] | None = None,
    *,
    rule_order: Sequence[str] = RULE_ORDER,
) -> FactSet:
    """Narrow the attribute intervals to the fixed point of the rule catalog.

    ``seeds`` maps attribute names to known exact values.  ``rule_order``
    affects only which chain gets recorded when several rules justify the
    same endpoint; the interval values of the fixed point do not depend
    on it.  Raises :class:`Contradiction` when the facts are inconsistent.
    """
    if sorted(rule_order) != sorted(RULE_ORDER):
        raise ValueError("rule_order must be a permutation of the rule ids")
    facts = {name: _Fact(name) for name in ATTRIBUTES}
    for name, value in (seeds or {}).items():
        if name not in facts:
            raise ValueError(f"unknown attribute {name!r}")
        if isinstance(value, float):
            raise ValueError("seed values must be integers or exact rationals")
        exact = Fraction(value)
        if exact < 0:
            raise ValueError(f"seed for {name!r} must be non-negative")
        rules = (f"seed:{name}",)
        facts[name].raise_lo(exact, rules)
        facts[name].lower_hi(exact, rules)
    changed = True
    passes = 0
    while changed:
        changed = False
        for rule in rule_order:
            changed |= _RULES[rule](facts, tags)
        passes += 1
        assert passes <= 64, "propagation failed to stabilise"
    return FactSet(
        tags,
        {
            name: Interval(fact.lo, fact.hi, fact.lo_rules, fact.hi_rules)
            for name, fact in facts.items()
        },
    )

"""Standard surfaces, curve classes, and multicurves.

Two closed orientable surface models are supported:

* the standard torus, carrying one meridian class and one longitude class
  that cross exactly once, and
* the chain surface of genus g, the double of a planar surface with g+1
  boundary circles.  It carries meridian classes m_0..m_g (the doubled
  circles) and longitude classes l_0..l_g, where l_j crosses m_{j-1} and
  m_j (indices cyclic) exactly once each and misses every other meridian.

A multicurve is a nonnegative integer weight per class: a_i parallel
copies of m_i and b_j parallel copies of l_j, arranged so that every
crossing between a longitude copy and a meridian copy is transverse.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

__all__ = [
    "SurfaceModel",
    "CurveClass",
    "MultiCurve",
    "pairing",
    "pairing_matrix",
]


#-- Surfaces --#

@dataclass(frozen=True)
class SurfaceModel:
    """A standard surface: ``kind`` is "torus" or "chain"."""

    kind: str
    genus: int

    def __post_init__(self) -> None:
        if self.kind == "torus":
            if self.genus != 1:
                raise ValueError(f"torus has genus 1, not {self.genus}")
        elif self.kind == "chain":
            if self.genus < 1:
                raise ValueError(f"chain genus must be >= 1, got {self.genus}")
        else:
            raise ValueError(f"unknown surface kind {self.kind!r}")

    @staticmethod
    def torus() -> "SurfaceModel":
        return SurfaceModel("torus", 1)

    @staticmethod
    def chain(genus: int) -> "SurfaceModel":
        return SurfaceModel("chain", genus)

    @property
    def num_classes(self) -> int:
        """Number of meridian classes (= number of longitude classes)."""
        return 1 if self.kind == "torus" else self.genus + 1

    def to_json(self) -> dict[str, Any]:
        return {"kind": self.kind, "genus": self.genus}

    @staticmethod
    def from_json(obj: dict[str, Any]) -> "SurfaceModel":
        return SurfaceModel(str(obj["kind"]), int(obj["genus"]))


@dataclass(frozen=True)
class CurveClass:
    """A reference curve class: family "m" (meridian) or "l" (longitude)."""

    family: str
    index: int

    def __post_init__(self) -> None:
        if self.family not in ("m", "l"):
            raise ValueError(f"family must be 'm' or 'l', got {self.family!r}")
        if self.index < 0:
            raise ValueError(f"class index must be >= 0, got {self.index}")

    def __str__(self) -> str:
        return f"{self.family}{self.index}"


#-- Pairing --#

def pairing(surface: SurfaceModel, j: int, i: int) -> int:
    """Crossings between one copy of l_j and one copy of m_i.

    On the chain surface l_j meets exactly the two cyclically adjacent
    meridians m_{j-1} and m_j, once each; these coincide when the genus
    is 1, in which case l_j still meets each of m_0, m_1 once.
    """
    k = surface.num_classes
    if not (0 <= j < k and 0 <= i < k):
        raise ValueError(f"class indices out of range: l_{j}, m_{i} on {surface.kind}")
    if surface.kind == "torus":
        return 1
    return 1 if (i - j) % k in (0, k - 1) else 0


def pairing_matrix(surface: SurfaceModel) -> tuple[tuple[int, ...], ...]:
    """Full matrix P with P[j][i] = pairing(surface, j, i)."""
    k = surface.num_classes
    return tuple(tuple(pairing(surface, j, i) for i in range(k)) for j in range(k))


#-- Multicurves --#

@dataclass(frozen=True)
class MultiCurve:
    """Weighted reference curves on a surface.

    ``meridians[i]`` is the number of parallel copies of m_i and
    ``longitudes[j]`` the number of copies of l_j.
    """

    surface: SurfaceModel
    meridians: tuple[int, ...]
    longitudes: tuple[int, ...]

    def __post_init__(self) -> None:
        k = self.surface.num_classes
        object.__setattr__(self, "meridians", tuple(self.meridians))
        object.__setattr__(self, "longitudes", tuple(self.longitudes))
        if len(self.meridians) != k or len(self.longitudes) != k:
            raise ValueError(
                f"expected {k} weights per family, got "
                f"{len(self.meridians)} meridian and {len(self.longitudes)} longitude"
            )
        for w in (*self.meridians, *self.longitudes):
            if not isinstance(w, int) or w < 0:
                raise ValueError(f"weights must be nonnegative integers, got {w!r}")
        if not any((*self.meridians, *self.longitudes)):
            raise ValueError("multicurve needs at least one positive weight")

    def boundary_count(self, cls: CurveClass) -> int:
        """Total crossings of the multicurve with one copy of ``cls``.

        A copy of m_i is crossed by every longitude copy whose class
        pairs with m_i, and by no meridian copy; symmetrically for l_j.
        """
        k = self.surface.num_classes
        if cls.index >= k:
            raise ValueError(f"no class {cls} on a surface with {k} classes per family")
        if cls.family == "m":
            return sum(b * pairing(self.surface, j, cls.index)
                       for j, b in enumerate(self.longitudes))
        return sum(a * pairing(self.surface, cls.index, i)
                   for i, a in enumerate(self.meridians))

    def min_boundary_count(self) -> int:
        """Minimum of boundary_count over all curve classes."""
        k = self.surface.num_classes
        counts = [self.boundary_count(CurveClass(f, i))
                  for f in ("m", "l") for i in range(k)]
        return min(counts)

    def to_json(self) -> dict[str, Any]:
        return {
            "surface": self.surface.to_json(),
            "meridians": list(self.meridians),
            "longitudes": list(self.longitudes),
        }

    @staticmethod
    def from_json(obj: dict[str, Any]) -> "MultiCurve":
        return MultiCurve(
            SurfaceModel.from_json(obj["surface"]),
            tuple(int(w) for w in obj["meridians"]),
            tuple(int(w) for w in obj["longitudes"]),
        )

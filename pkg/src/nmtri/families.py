"""Generators for the extremal colorings that meet the main bound tightly.

The recurring construction is a three-or-more-part graph: an independent core
``X_0`` completely joined to ``k`` monochromatic cliques ``X_1 .. X_k``, with
color class ``i`` holding exactly the edges incident with ``X_i``.  ``h_m`` is
the balanced two-color case (all parts of size ``m``), ``h_m_plus`` grows the
core by one vertex, and ``h_m_k`` is the many-color generalization with
``|X_0| = (k-1)m``.  Each generator comes with closed-form class sizes used as
test oracles.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .graph import ColoredGraph

MONO_CLIQUE = "mono_clique"
ALTERNATING_C4 = "alternating_c4"
HM = "hm"
HM_PLUS = "hm_plus"
HMK = "hmk"


@dataclass(frozen=True)
class FamilySpec:
    """A named extremal construction plus its vertex part layout.

    ``parts`` lists the vertex ranges assigned to ``X_0, X_1, ..., X_k`` for
    the core-and-cliques families; single-part families carry one entry.
    """

    kind: str
    n: int
    k: int
    m: int | None = None
    color: int | None = None
    parts: tuple[tuple[int, ...], ...] = ()

    @classmethod
    def mono_clique(cls, n: int, color: int = 1, k: int = 2) -> "FamilySpec":
        if not 1 <= color <= k:
            raise ValueError(f"color {color} out of range 1..{k}")
        return cls(MONO_CLIQUE, n, k, color=color, parts=(tuple(range(n)),))

    @classmethod
    def alternating_c4(cls) -> "FamilySpec":
        return cls(ALTERNATING_C4, 4, 2, parts=((0, 1, 2, 3),))

    @classmethod
    def hm(cls, m: int) -> "FamilySpec":
        if m < 1:
            raise ValueError("m must be >= 1")
        parts = _core_parts(core=m, clique=m, k=2)
        return cls(HM, 3 * m, 2, m=m, parts=parts)

    @classmethod
    def hm_plus(cls, m: int) -> "FamilySpec":
        if m < 1:
            raise ValueError("m must be >= 1")
        parts = _core_parts(core=m + 1, clique=m, k=2)
        return cls(HM_PLUS, 3 * m + 1, 2, m=m, parts=parts)

    @classmethod
    def hmk(cls, m: int, k: int) -> "FamilySpec":
        if m < 1 or k < 1:
            raise ValueError("m and k must be >= 1")
        parts = _core_parts(core=(k - 1) * m, clique=m, k=k)
        return cls(HMK, (2 * k - 1) * m, k, m=m, parts=parts)

    def build(self) -> ColoredGraph:
        """Materialize the construction as a graph."""
        if self.kind == MONO_CLIQUE:
            assert self.color is not None
            return ColoredGraph.from_edges(
                self.n, self.k,
                ((u, v, self.color) for u in range(self.n)
                 for v in range(u + 1, self.n)),
            )
        if self.kind == ALTERNATING_C4:
            return ColoredGraph.from_edges(
                4, 2, [(0, 1, 1), (1, 2, 2), (2, 3, 1), (0, 3, 2)])
        # Core-and-cliques families: color i = all edges touching X_i.
        edges: list[tuple[int, int, int]] = []
        core = self.parts[0]
        for i, part in enumerate(self.parts[1:], start=1):
            for u in core:
                for v in part:
                    edges.append((u, v, i))
            for a in range(len(part)):
                for b in range(a + 1, len(part)):
                    edges.append((part[a], part[b], i))
        return ColoredGraph.from_edges(self.n, self.k, edges)


def _core_parts(core: int, clique: int, k: int) -> tuple[tuple[int, ...], ...]:
    parts = [tuple(range(core))]
    start = core
    for _ in range(k):
        parts.append(tuple(range(start, start + clique)))
        start += clique
    return tuple(parts)


def mono_clique(n: int, color: int = 1, k: int = 2) -> ColoredGraph:
    """Complete graph on ``n`` vertices with every edge in one class."""
    return FamilySpec.mono_clique(n, color, k).build()


def alternating_c4() -> ColoredGraph:
    """The 4-cycle ``0-1-2-3-0`` with colors alternating 1, 2, 1, 2."""
    return FamilySpec.alternating_c4().build()


def h_m(m: int) -> ColoredGraph:
    """Two monochromatic m-cliques completely joined to an independent m-core."""
    return FamilySpec.hm(m).build()


def h_m_plus(m: int) -> ColoredGraph:
    """Same as :func:`h_m` but with an (m+1)-vertex core."""
    return FamilySpec.hm_plus(m).build()


def h_m_k(m: int, k: int) -> ColoredGraph:
    """k monochromatic m-cliques completely joined to an independent (k-1)m-core."""
    return FamilySpec.hmk(m, k).build()


def predicted_class_size(m: int, k: int) -> int:
    """Closed-form size of each color class of ``h_m_k(m, k)``."""
    if m < 1 or k < 1:
        raise ValueError("m and k must be >= 1")
    return comb(m, 2) + (k - 1) * m * m

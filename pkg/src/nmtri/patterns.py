"""Locate triangles, seagulls and alternating squares in a colored graph.

A *seagull* is a 3-set inducing exactly a two-edge path whose edges differ in
color; an *alternating square* is a 4-set inducing exactly a 4-cycle whose
colors alternate between two classes.  Both are induced by definition here.
All streams are ordered lexicographically by vertex tuple so that "first
witness" is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graph import ColoredGraph

MONOCHROMATIC = "monochromatic"
NON_MONOCHROMATIC = "non_monochromatic"
RAINBOW = "rainbow"

SEAGULL = "seagull"
ALTERNATING_SQUARE = "alternating_square"


@dataclass(frozen=True)
class TriangleWitness:
    """A located triangle: sorted vertex triple, pair colors, color profile.

    ``colors`` follows pair order ``(a,b), (a,c), (b,c)``.  A rainbow triangle
    reports its own profile but still counts as non-monochromatic.
    """

    vertices: tuple[int, int, int]
    colors: tuple[int, int, int]
    profile: str

    @property
    def is_non_monochromatic(self) -> bool:
        return self.profile != MONOCHROMATIC

    @property
    def mono_color(self) -> int | None:
        return self.colors[0] if self.profile == MONOCHROMATIC else None


@dataclass(frozen=True)
class PatternWitness:
    """A located seagull or alternating square.

    ``edges`` lists the present pairs with their colors, sorted by pair.
    """

    kind: str
    vertices: tuple[int, ...]
    edges: tuple[tuple[tuple[int, int], int], ...]

    @property
    def colors_used(self) -> tuple[int, ...]:
        return tuple(sorted({c for _, c in self.edges}))


def classify_triangle(colors: tuple[int, int, int]) -> str:
    """Profile of a fully colored triple: all equal, all distinct, or mixed."""
    a, b, c = colors
    if a == b == c:
        return MONOCHROMATIC
    if a != b and b != c and a != c:
        return RAINBOW
    return NON_MONOCHROMATIC


def triangles(g: ColoredGraph) -> Iterator[TriangleWitness]:
    """Every triangle exactly once, ascending lexicographic by vertex triple."""
    n = g.n
    for u in range(n):
        row_u = g.adjacency_row(u) >> (u + 1)
        v = u + 1
        while row_u:
            if row_u & 1:
                common = g.adjacency_row(u) & g.adjacency_row(v)
                common >>= v + 1
                w = v + 1
                while common:
                    if common & 1:
                        colors = (g.color_of(u, v), g.color_of(u, w),
                                  g.color_of(v, w))
                        yield TriangleWitness((u, v, w), colors,
                                              classify_triangle(colors))
                    common >>= 1
                    w += 1
            row_u >>= 1
            v += 1


def has_nonmono_triangle(g: ColoredGraph) -> TriangleWitness | None:
    """First triangle (lex order) using at least two colors, or None."""
    for t in triangles(g):
        if t.is_non_monochromatic:
            return t
    return None


def seagulls(g: ColoredGraph) -> Iterator[PatternWitness]:
    """All seagulls, ascending lexicographic by vertex triple.

    Empty for k = 1: the two path edges must differ in color.
    """
    n = g.n
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                present = []
                for u, v in ((a, b), (a, c), (b, c)):
                    col = g.color_of(u, v)
                    if col:
                        present.append(((u, v), col))
                if len(present) == 2 and present[0][1] != present[1][1]:
                    yield PatternWitness(SEAGULL, (a, b, c), tuple(present))


def alternating_squares(g: ColoredGraph) -> Iterator[PatternWitness]:
    """All alternating squares, ascending lexicographic by vertex 4-tuple."""
    n = g.n
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                for d in range(c + 1, n):
                    w = _alternating_square_at(g, (a, b, c, d))
                    if w is not None:
                        yield w


def _alternating_square_at(g: ColoredGraph,
                           quad: tuple[int, int, int, int]) -> PatternWitness | None:
    present = []
    missing = []
    for i in range(4):
        for j in range(i + 1, 4):
            u, v = quad[i], quad[j]
            col = g.color_of(u, v)
            if col:
                present.append(((u, v), col))
            else:
                missing.append((u, v))
    if len(missing) != 2:
        return None
    (p, q), (r, s) = missing
    if {p, q} & {r, s}:
        return None
    # The two non-edges are the diagonals; cycle is p-r-q-s-p.
    c1 = g.color_of(p, r)
    c2 = g.color_of(r, q)
    if c1 == c2:
        return None
    if g.color_of(q, s) != c1 or g.color_of(s, p) != c2:
        return None
    return PatternWitness(ALTERNATING_SQUARE, quad, tuple(present))


def max_disjoint_seagulls(g: ColoredGraph, mode: str = "exact") -> list[PatternWitness]:
    """A vertex-disjoint seagull packing.

    ``exact`` (intended for n <= ~15) returns a maximum packing, ties broken
    lexicographically by the sequence of vertex triples; ``greedy`` returns a
    maximal packing by first-fit over the lexicographic stream.
    """
    cands = list(seagulls(g))
    if mode == "greedy":
        taken: list[PatternWitness] = []
        used: set[int] = set()
        for s in cands:
            if used.isdisjoint(s.vertices):
                taken.append(s)
                used.update(s.vertices)
        return taken
    if mode != "exact":
        raise ValueError(f"unknown packing mode {mode!r}")

    masks = []
    for s in cands:
        m = 0
        for v in s.vertices:
            m |= 1 << v
        masks.append(m)
    best: list[int] = []

    def dfs(start: int, used_mask: int, chosen: list[int]) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = chosen.copy()
        # Candidates left cannot strictly improve the record: prune.  Equal-size
        # packings found later are lexicographically larger, so dropping them
        # keeps the first (lex-least) maximum packing.
        if len(chosen) + (len(cands) - start) <= len(best):
            return
        for j in range(start, len(cands)):
            if masks[j] & used_mask == 0:
                chosen.append(j)
                dfs(j + 1, used_mask | masks[j], chosen)
                chosen.pop()

    dfs(0, 0, [])
    return [cands[j] for j in best]


def is_monochromatic(g: ColoredGraph) -> bool:
    """True when all edges lie in a single class (vacuously true when empty)."""
    e = g.edge_count
    return e == 0 or any(s == e for s in g.class_sizes)


def is_rainbow(g: ColoredGraph) -> bool:
    """True when every color class has at most one edge."""
    return all(s <= 1 for s in g.class_sizes)

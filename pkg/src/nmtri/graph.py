"""Data model for edge-colored simple graphs, with exact counting primitives.

A graph on ``n`` vertices (labelled ``0..n-1``) with ``k`` color classes
stores one value in ``{0..k}`` per unordered vertex pair: ``0`` marks a
non-edge and ``c in {1..k}`` an edge of color ``c``.  Color classes
therefore partition the edge set by construction.

Instances are immutable; editing helpers return new graphs, so any value can
be shared read-only across threads.  Adjacency is mirrored as per-vertex
integer bit rows (one row per color plus a color-blind row), which turns
triangle and neighborhood queries into integer intersections.

All threshold arithmetic elsewhere in the package is integer-exact; the only
non-integer quantity here is :meth:`ColoredGraph.density`, which returns a
``fractions.Fraction``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Iterator


def pair_index(n: int, u: int, v: int) -> int:
    """Position of pair ``(u, v)``, ``u < v``, in row-major upper-triangle order.

    Pairs are ordered ``(0,1), (0,2), ..., (0,n-1), (1,2), ..., (n-2,n-1)``.
    """
    if not 0 <= u < v < n:
        raise ValueError(f"pair ({u}, {v}) out of range for n={n}")
    return u * (2 * n - u - 1) // 2 + (v - u - 1)


def pair_iter(n: int) -> Iterator[tuple[int, int]]:
    """All vertex pairs of an ``n``-vertex graph, in pair-index order."""
    for u in range(n):
        for v in range(u + 1, n):
            yield u, v


@dataclass(frozen=True)
class ColorStats:
    """Aggregate counts: edge total, per-class sizes, and the pair universe."""

    edge_total: int
    class_sizes: tuple[int, ...]
    pair_total: int


class ColoredGraph:
    """Immutable k-edge-colored simple graph.

    Build with :meth:`empty`, :meth:`from_edges` or :meth:`from_pair_values`;
    derive edited copies with :meth:`with_pair`.
    """

    __slots__ = ("n", "k", "_vals", "_adj", "_adjc", "_class_sizes", "_hash")

    def __init__(self, n: int, k: int, vals: bytes):
        if k < 1:
            raise ValueError("at least one color class is required (k >= 1)")
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        npairs = n * (n - 1) // 2
        if len(vals) != npairs:
            raise ValueError(f"expected {npairs} pair values, got {len(vals)}")
        sizes = [0] * k
        adj = [0] * n
        adjc = [[0] * n for _ in range(k)]
        p = 0
        for u in range(n):
            for v in range(u + 1, n):
                c = vals[p]
                p += 1
                if c == 0:
                    continue
                if c > k:
                    raise ValueError(f"pair ({u}, {v}) has color {c} > k={k}")
                sizes[c - 1] += 1
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                adjc[c - 1][u] |= 1 << v
                adjc[c - 1][v] |= 1 << u
        self.n = n
        self.k = k
        self._vals = bytes(vals)
        self._adj = tuple(adj)
        self._adjc = tuple(tuple(rows) for rows in adjc)
        self._class_sizes = tuple(sizes)
        self._hash = hash((n, k, self._vals))

    # -- constructors ------------------------------------------------------

    @classmethod
    def empty(cls, n: int, k: int) -> "ColoredGraph":
        """Graph with ``n`` vertices and no edges."""
        return cls(n, k, bytes(n * (n - 1) // 2))

    @classmethod
    def from_edges(cls, n: int, k: int, edges: Iterable[tuple[int, int, int]]) -> "ColoredGraph":
        """Graph from ``(u, v, color)`` triples; later entries overwrite earlier."""
        vals = bytearray(n * (n - 1) // 2)
        for u, v, c in edges:
            if u == v:
                raise ValueError(f"self-pair ({u}, {v}) is not allowed")
            if u > v:
                u, v = v, u
            if not 0 <= c <= k:
                raise ValueError(f"color {c} out of range 0..{k}")
            vals[pair_index(n, u, v)] = c
        return cls(n, k, bytes(vals))

    @classmethod
    def from_pair_values(cls, n: int, k: int, vals: Iterable[int]) -> "ColoredGraph":
        """Graph from a full pair-value vector in pair-index order."""
        return cls(n, k, bytes(vals))

    # -- basic accessors ----------------------------------------------------

    def color_of(self, u: int, v: int) -> int:
        """Value of pair ``{u, v}``: 0 when absent, else the edge color."""
        if u > v:
            u, v = v, u
        return self._vals[pair_index(self.n, u, v)]

    def with_pair(self, u: int, v: int, c: int) -> "ColoredGraph":
        """Copy of this graph with pair ``{u, v}`` set to ``c`` (0 removes)."""
        if u == v:
            raise ValueError(f"self-pair ({u}, {v}) is not allowed")
        if u > v:
            u, v = v, u
        if not 0 <= c <= self.k:
            raise ValueError(f"color {c} out of range 0..{self.k}")
        vals = bytearray(self._vals)
        vals[pair_index(self.n, u, v)] = c
        return ColoredGraph(self.n, self.k, bytes(vals))

    def pair_values(self) -> bytes:
        """The raw pair-value vector in pair-index order."""
        return self._vals

    def edges(self) -> Iterator[tuple[int, int, int]]:
        """All ``(u, v, color)`` triples with ``u < v``, in pair-index order."""
        p = 0
        for u in range(self.n):
            for v in range(u + 1, self.n):
                c = self._vals[p]
                p += 1
                if c:
                    yield u, v, c

    def adjacency_row(self, v: int, color: int | None = None) -> int:
        """Neighbor bitmask of ``v``, optionally restricted to one color."""
        if color is None:
            return self._adj[v]
        if not 1 <= color <= self.k:
            raise ValueError(f"color {color} out of range 1..{self.k}")
        return self._adjc[color - 1][v]

    @property
    def class_sizes(self) -> tuple[int, ...]:
        """Sizes of the color classes ``E_1 .. E_k``."""
        return self._class_sizes

    @property
    def edge_count(self) -> int:
        return sum(self._class_sizes)

    @property
    def pair_count(self) -> int:
        return comb(self.n, 2)

    def stats(self) -> ColorStats:
        return ColorStats(self.edge_count, self._class_sizes, self.pair_count)

    # -- counting primitives -------------------------------------------------

    def density(self) -> Fraction:
        """Edge count over pair count, as an exact rational.  Needs ``n >= 2``."""
        if self.n < 2:
            raise ValueError("density requires at least 2 vertices")
        return Fraction(self.edge_count, self.pair_count)

    def _vertex_set(self, X: Iterable[int]) -> list[int]:
        xs = sorted(set(X))
        if xs and (xs[0] < 0 or xs[-1] >= self.n):
            raise ValueError(f"vertex set {xs} out of range for n={self.n}")
        return xs

    def edges_within(self, X: Iterable[int], color: int | None = None) -> int:
        """Number of edges with both ends in ``X``, optionally of one color."""
        xs = self._vertex_set(X)
        if color is not None and not 1 <= color <= self.k:
            raise ValueError(f"color {color} out of range 1..{self.k}")
        total = 0
        for i, u in enumerate(xs):
            for v in xs[i + 1:]:
                c = self.color_of(u, v)
                if c and (color is None or c == color):
                    total += 1
        return total

    def edges_between(self, X: Iterable[int], Y: Iterable[int],
                      color: int | None = None) -> int:
        """Number of edges with one end in ``X`` and one in ``Y`` (disjoint sets)."""
        xs = self._vertex_set(X)
        ys = self._vertex_set(Y)
        if set(xs) & set(ys):
            raise ValueError("vertex sets must be disjoint")
        ymask = 0
        for y in ys:
            ymask |= 1 << y
        total = 0
        for x in xs:
            if color is None:
                total += (self._adj[x] & ymask).bit_count()
            else:
                total += (self.adjacency_row(x, color) & ymask).bit_count()
        return total

    def induced(self, X: Iterable[int]) -> "ColoredGraph":
        """Subgraph induced by ``X``, relabelled ``0..|X|-1`` in ascending order."""
        xs = self._vertex_set(X)
        return ColoredGraph.from_edges(
            len(xs), self.k,
            ((i, j, self.color_of(xs[i], xs[j]))
             for i in range(len(xs)) for j in range(i + 1, len(xs))),
        )

    def components(self) -> list[tuple[int, ...]]:
        """Connected components as sorted vertex tuples, ordered by minimum element."""
        out: list[tuple[int, ...]] = []
        seen = 0
        for v0 in range(self.n):
            if seen >> v0 & 1:
                continue
            mask = 0
            frontier = 1 << v0
            while frontier:
                mask |= frontier
                nxt = 0
                m = frontier
                while m:
                    b = m & -m
                    m ^= b
                    nxt |= self._adj[b.bit_length() - 1]
                frontier = nxt & ~mask
            seen |= mask
            out.append(tuple(v for v in range(v0, self.n) if mask >> v & 1))
        return out

    def independence_number(self) -> int:
        """Exact maximum independent set size.

        Branch and bound: maximum-clique search on the complement with a
        greedy-coloring upper bound.  Exponential in the worst case; meant
        for the audit scale (n up to roughly 30).
        """
        n = self.n
        if n == 0:
            return 0
        full = (1 << n) - 1
        comp_adj = [(~self._adj[v]) & full & ~(1 << v) for v in range(n)]
        best = 0

        def expand(size: int, cand: int) -> None:
            nonlocal best
            if cand == 0:
                if size > best:
                    best = size
                return
            # Greedy coloring of the candidate set; class index bounds the clique.
            order: list[tuple[int, int]] = []
            rest = cand
            color_no = 0
            while rest:
                color_no += 1
                avail = rest
                cls = 0
                while avail:
                    b = avail & -avail
                    v = b.bit_length() - 1
                    cls |= b
                    avail &= ~comp_adj[v]
                    avail &= ~b
                rest &= ~cls
                m = cls
                while m:
                    b = m & -m
                    m ^= b
                    order.append((b.bit_length() - 1, color_no))
            for v, bound in reversed(order):
                if size + bound <= best:
                    return
                expand(size + 1, cand & comp_adj[v])
                cand &= ~(1 << v)

        expand(0, full)
        return best

    # -- dunder -------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColoredGraph):
            return NotImplemented
        return (self.n, self.k, self._vals) == (other.n, other.k, other._vals)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"ColoredGraph(n={self.n}, k={self.k}, edges={self.edge_count})"

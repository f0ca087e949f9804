"""Shared brute-force oracles and random graph helpers.

Every oracle here enumerates naively (subsets, permutations, products) and
stays independent of the implementation paths it checks.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations, product
from math import comb

import pytest

from nmtri.graph import ColoredGraph, pair_iter


def random_graph(rng: random.Random, n: int, k: int,
                 p_edge: float | None = None) -> ColoredGraph:
    if p_edge is None:
        p_edge = rng.uniform(0.2, 0.9)
    vals = bytearray()
    for _ in range(n * (n - 1) // 2):
        vals.append(rng.randint(1, k) if rng.random() < p_edge else 0)
    return ColoredGraph.from_pair_values(n, k, bytes(vals))


def brute_triangles(g: ColoredGraph) -> list[tuple[int, int, int]]:
    out = []
    for a, b, c in combinations(range(g.n), 3):
        if g.color_of(a, b) and g.color_of(a, c) and g.color_of(b, c):
            out.append((a, b, c))
    return out


def brute_nonmono_triangles(g: ColoredGraph) -> list[tuple[int, int, int]]:
    out = []
    for a, b, c in brute_triangles(g):
        cols = {g.color_of(a, b), g.color_of(a, c), g.color_of(b, c)}
        if len(cols) > 1:
            out.append((a, b, c))
    return out


def brute_seagulls(g: ColoredGraph) -> list[tuple[int, int, int]]:
    out = []
    for a, b, c in combinations(range(g.n), 3):
        cols = [g.color_of(u, v) for u, v in ((a, b), (a, c), (b, c))]
        present = [col for col in cols if col]
        if len(present) == 2 and present[0] != present[1]:
            out.append((a, b, c))
    return out


def brute_alternating_squares(g: ColoredGraph) -> list[tuple[int, ...]]:
    out = []
    for quad in combinations(range(g.n), 4):
        for cyc in permutations(quad):
            if cyc[0] != min(cyc):
                continue
            a, b, c, d = cyc
            if b > d:
                continue  # each cycle once
            e = [g.color_of(a, b), g.color_of(b, c), g.color_of(c, d),
                 g.color_of(d, a)]
            if 0 in e or g.color_of(a, c) or g.color_of(b, d):
                continue
            if e[0] == e[2] and e[1] == e[3] and e[0] != e[1]:
                out.append(tuple(sorted(quad)))
    return sorted(set(out))


def brute_independence(g: ColoredGraph) -> int:
    for size in range(g.n, 0, -1):
        for sub in combinations(range(g.n), size):
            if all(g.color_of(u, v) == 0 for u, v in combinations(sub, 2)):
                return size
    return 0


def brute_max_packing_size(g: ColoredGraph) -> int:
    gulls = brute_seagulls(g)
    best = 0
    for size in range(len(gulls), 0, -1):
        if size * 3 > g.n or size <= best:
            continue
        for pick in combinations(gulls, size):
            seen: set[int] = set()
            ok = True
            for s in pick:
                if seen & set(s):
                    ok = False
                    break
                seen.update(s)
            if ok:
                best = size
                break
    return best


def brute_isomorphic(g: ColoredGraph, h: ColoredGraph,
                     exact_colors: bool = False) -> bool:
    if g.n != h.n or g.k != h.k or g.edge_count != h.edge_count:
        return False
    color_perms = ([tuple(range(1, g.k + 1))] if exact_colors
                   else list(permutations(range(1, g.k + 1))))
    for vm in permutations(range(g.n)):
        for cp in color_perms:
            cmap = [0] + list(cp)
            if all(h.color_of(vm[u], vm[v]) == cmap[g.color_of(u, v)]
                   for u, v in pair_iter(g.n)):
                return True
    return False


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240901)

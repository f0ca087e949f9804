import pytest

from nmtri.graph import ColoredGraph
from nmtri.families import alternating_c4, h_m, h_m_plus, mono_clique
from nmtri.patterns import (
    MONOCHROMATIC,
    NON_MONOCHROMATIC,
    RAINBOW,
    alternating_squares,
    has_nonmono_triangle,
    is_monochromatic,
    is_rainbow,
    max_disjoint_seagulls,
    seagulls,
    triangles,
)

from conftest import (
    brute_alternating_squares,
    brute_max_packing_size,
    brute_nonmono_triangles,
    brute_seagulls,
    brute_triangles,
    random_graph,
)


def test_triangles_on_families():
    tris = list(triangles(h_m(2)))
    assert len(tris) == 4
    assert all(t.profile == MONOCHROMATIC for t in tris)
    assert list(triangles(alternating_c4())) == []
    k4 = list(triangles(mono_clique(4, 1)))
    assert len(k4) == 4 and all(t.mono_color == 1 for t in k4)


def test_triangle_stream_matches_brute_force(rng):
    for _ in range(80):
        g = random_graph(rng, rng.randint(0, 8), 3)
        got = [t.vertices for t in triangles(g)]
        assert got == brute_triangles(g)
        assert got == sorted(got)


def test_triangle_profiles(rng):
    g = ColoredGraph.from_edges(3, 3, [(0, 1, 1), (0, 2, 2), (1, 2, 3)])
    (t,) = triangles(g)
    assert t.profile == RAINBOW and t.is_non_monochromatic
    g2 = ColoredGraph.from_edges(3, 2, [(0, 1, 1), (0, 2, 1), (1, 2, 2)])
    (t2,) = triangles(g2)
    assert t2.profile == NON_MONOCHROMATIC and t2.mono_color is None


def test_has_nonmono_triangle():
    g = ColoredGraph.from_edges(3, 2, [(0, 1, 1), (0, 2, 1), (1, 2, 2)])
    w = has_nonmono_triangle(g)
    assert w is not None and w.vertices == (0, 1, 2)
    for m in range(1, 7):
        assert has_nonmono_triangle(h_m(m)) is None
    rainbow = ColoredGraph.from_edges(3, 3, [(0, 1, 1), (0, 2, 2), (1, 2, 3)])
    w = has_nonmono_triangle(rainbow)
    assert w is not None and w.profile == RAINBOW


def test_has_nonmono_triangle_matches_brute(rng):
    for _ in range(100):
        g = random_graph(rng, 6, 2)
        expect = brute_nonmono_triangles(g)
        got = has_nonmono_triangle(g)
        assert (got is None) == (not expect)
        if got is not None:
            assert got.vertices == expect[0]


def test_seagulls_basic():
    path = ColoredGraph.from_edges(3, 2, [(0, 1, 1), (1, 2, 2)])
    (s,) = seagulls(path)
    assert s.vertices == (0, 1, 2) and s.colors_used == (1, 2)
    assert list(seagulls(mono_clique(5, 1))) == []
    assert len(list(seagulls(h_m(1)))) == 1
    # Single-color graphs cannot host a seagull.
    k1 = ColoredGraph.from_edges(3, 1, [(0, 1, 1), (1, 2, 1)])
    assert list(seagulls(k1)) == []


def test_seagulls_match_brute(rng):
    for _ in range(80):
        g = random_graph(rng, 7, 2)
        assert [s.vertices for s in seagulls(g)] == brute_seagulls(g)


def test_seagull_witness_shape(rng):
    for _ in range(40):
        g = random_graph(rng, 7, 3)
        for s in seagulls(g):
            assert len(s.edges) == 2
            assert len(s.colors_used) == 2


def test_alternating_squares():
    assert len(list(alternating_squares(alternating_c4()))) == 1
    assert list(alternating_squares(h_m_plus(1))) == []
    mono_c4 = ColoredGraph.from_edges(
        4, 2, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1)])
    assert list(alternating_squares(mono_c4)) == []


def test_alternating_squares_match_brute(rng):
    for _ in range(80):
        g = random_graph(rng, 6, 2)
        got = [w.vertices for w in alternating_squares(g)]
        assert got == brute_alternating_squares(g)
        for w in alternating_squares(g):
            assert len(w.edges) == 4
            assert len(w.colors_used) == 2
            # each vertex is incident with one edge of each color
            for v in w.vertices:
                touching = [c for (pair, c) in w.edges if v in pair]
                assert sorted(touching) == sorted(w.colors_used)


def test_max_disjoint_seagulls_families():
    assert len(max_disjoint_seagulls(h_m(2))) == 2
    assert max_disjoint_seagulls(mono_clique(6, 1)) == []
    single = ColoredGraph.from_edges(3, 2, [(0, 1, 1), (1, 2, 2)])
    assert len(max_disjoint_seagulls(single)) == 1


def test_max_disjoint_seagulls_exact_vs_brute(rng):
    for _ in range(40):
        g = random_graph(rng, rng.randint(3, 9), 2)
        exact = max_disjoint_seagulls(g, "exact")
        greedy = max_disjoint_seagulls(g, "greedy")
        assert len(exact) == brute_max_packing_size(g)
        assert len(exact) >= len(greedy)
        for packing in (exact, greedy):
            seen = set()
            for s in packing:
                assert not (seen & set(s.vertices))
                seen.update(s.vertices)


def test_max_disjoint_seagulls_bad_mode():
    with pytest.raises(ValueError):
        max_disjoint_seagulls(h_m(1), "fastest")


def test_claim2_property_on_triangle_free_colorings(rng):
    # Whenever no non-mono triangle exists, any outside vertex sends at most
    # 2 edges into any seagull.
    checked = 0
    for _ in range(300):
        g = random_graph(rng, 6, 2, p_edge=rng.uniform(0.1, 0.5))
        if has_nonmono_triangle(g) is not None:
            continue
        for s in seagulls(g):
            for v in range(g.n):
                if v in s.vertices:
                    continue
                assert g.edges_between([v], s.vertices) <= 2
                checked += 1
    assert checked > 100


def test_monochromatic_and_rainbow_flags():
    assert is_monochromatic(mono_clique(5, 1))
    assert not is_rainbow(mono_clique(5, 1))
    rc4 = ColoredGraph.from_edges(
        4, 4, [(0, 1, 1), (1, 2, 2), (2, 3, 3), (0, 3, 4)])
    assert is_rainbow(rc4) and not is_monochromatic(rc4)
    single = ColoredGraph.from_edges(2, 2, [(0, 1, 1)])
    assert is_monochromatic(single) and is_rainbow(single)
    empty = ColoredGraph.empty(4, 2)
    assert is_monochromatic(empty) and is_rainbow(empty)

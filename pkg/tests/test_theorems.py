from itertools import combinations, product
from math import comb

import pytest

from nmtri.graph import ColoredGraph
from nmtri.families import alternating_c4, h_m, h_m_k, h_m_plus, mono_clique
from nmtri.patterns import has_nonmono_triangle
from nmtri.theorems import (
    ClaimAuditReport,
    TightClass,
    claim_audit,
    classify_tight,
    conjecture1_premise,
    conjecture2_premise,
    corollary_premise,
    generalized_min_premise,
    lemma1_check,
    main_premise_strict,
    main_premise_weak,
    mantel_premise,
)
from nmtri.search import random_hypothesis_coloring

from conftest import brute_triangles, random_graph


def rainbow_c4() -> ColoredGraph:
    return ColoredGraph.from_edges(
        4, 4, [(0, 1, 1), (1, 2, 2), (2, 3, 3), (0, 3, 4)])


def test_mantel_premise_values():
    assert mantel_premise(mono_clique(3, 1))
    c5 = ColoredGraph.from_edges(5, 2, [(i, (i + 1) % 5, 1) for i in range(5)])
    assert not mantel_premise(c5)


def test_mantel_every_7_edge_graph_on_5_vertices_has_triangle():
    pairs = list(combinations(range(5), 2))
    for chosen in combinations(pairs, 7):
        g = ColoredGraph.from_edges(5, 2, ((u, v, 1) for u, v in chosen))
        assert mantel_premise(g)
        assert brute_triangles(g)


def test_main_premises_on_families():
    g = h_m(3)
    assert main_premise_weak(g) and not main_premise_strict(g)
    k5 = mono_clique(5, 1)
    assert main_premise_weak(k5) and not main_premise_strict(k5)


def test_main_premise_requires_two_colors():
    with pytest.raises(ValueError):
        main_premise_strict(h_m_k(2, 3))
    assert generalized_min_premise(h_m_k(2, 3), strict=False) is False


def test_strict_premise_forces_witness_on_k4_with_one_recolored_edge():
    # All 6 colorings of K_4 with five edges of color 1 and one of color 2.
    pairs = list(combinations(range(4), 2))
    for blue in pairs:
        g = ColoredGraph.from_edges(
            4, 2, ((u, v, 2 if (u, v) == blue else 1) for u, v in pairs))
        assert g.edge_count + min(g.class_sizes) == 7 > comb(4, 2)
        assert main_premise_strict(g)
        assert has_nonmono_triangle(g) is not None


def test_corollary_premise_values():
    assert not corollary_premise(h_m(2))  # boundary: 3*5 == C(6,2)
    balanced_k4 = ColoredGraph.from_edges(
        4, 2, [(0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 2, 2), (1, 3, 2), (2, 3, 2)])
    assert corollary_premise(balanced_k4)


def test_corollary_implies_strict_premise_exhaustively():
    for n in range(2, 6):
        npairs = comb(n, 2)
        for vec in product(range(3), repeat=npairs):
            e1 = sum(1 for c in vec if c == 1)
            e2 = sum(1 for c in vec if c == 2)
            if 3 * e1 > npairs and 3 * e2 > npairs:
                assert e1 + e2 + min(e1, e2) > npairs


def test_conjecture_premises_on_hmk():
    g = h_m_k(2, 3)
    assert not conjecture1_premise(g)   # 2*27-9 = 45 <= 50
    assert not conjecture2_premise(g)   # 10*9 = 90 <= 100


def test_conjecture1_rainbow_c4_variants():
    g = rainbow_c4()
    assert not conjecture1_premise(g)                          # 7 <= 8
    assert conjecture1_premise(g, binomial_variant=True)       # 7 > 6
    assert has_nonmono_triangle(g) is None


def test_conjecture2_weak_flag():
    # K_4 split 3/3: 6*3 = 18 > 16; with k=2 both classes qualify strictly.
    g = ColoredGraph.from_edges(
        4, 2, [(0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 2, 2), (1, 3, 2), (2, 3, 2)])
    assert conjecture2_premise(g)
    # boundary case via equality: n=4, k=2, class of size exactly 16/6 never
    # integral, so craft k=1: 2*|E_1| >= 16 at |E_1| = 8 impossible on n=4;
    # check flag semantics on a direct example instead
    h = ColoredGraph.from_edges(3, 2, [(0, 1, 1), (0, 2, 1), (1, 2, 2)])
    # 6*2 = 12 > 9 and 6*1 = 6 < 9: strict and weak both reject class 2
    assert not conjecture2_premise(h)
    assert not conjecture2_premise(h, strict=False)


def test_monotonicity_of_strict_premise(rng):
    for _ in range(100):
        g = random_graph(rng, 6, 2)
        if not main_premise_strict(g):
            continue
        for u in range(6):
            for v in range(u + 1, 6):
                if g.color_of(u, v) == 0:
                    assert main_premise_strict(g.with_pair(u, v, 1))
                    assert main_premise_strict(g.with_pair(u, v, 2))


def test_classify_tight_known_graphs():
    assert classify_tight(h_m_plus(2)).label == "FamilyHmPlus(2)"
    assert classify_tight(mono_clique(7, 1)).label == "MonoClique"
    assert classify_tight(alternating_c4()).label == "AlternatingSquare"
    assert classify_tight(h_m(1)).label == "FamilyHm(1)"
    assert classify_tight(h_m(2)).label == "FamilyHm(2)"
    assert classify_tight(h_m_plus(1)).label == "FamilyHmPlus(1)"
    k4 = mono_clique(4, 1).with_pair(0, 1, 2)
    cls = classify_tight(k4)
    assert cls.kind == "HasNonMonoTriangle" and cls.witness is not None


def test_classify_tight_precondition():
    with pytest.raises(ValueError):
        classify_tight(ColoredGraph.empty(4, 2))
    with pytest.raises(ValueError):
        classify_tight(h_m_k(2, 3))


def test_classify_tight_never_violates_at_n4():
    # Full enumeration: every weak-premise coloring classifies to a known
    # outcome.
    labels = set()
    for vec in product(range(3), repeat=6):
        g = ColoredGraph.from_pair_values(4, 2, vec)
        if not main_premise_weak(g):
            continue
        cls = classify_tight(g)
        assert cls.kind != "Violation"
        if cls.kind != "HasNonMonoTriangle":
            labels.add(cls.label)
    assert labels == {"MonoClique", "AlternatingSquare", "FamilyHmPlus(1)"}


def test_lemma1_on_cliques_and_preconditions():
    for n in range(2, 8):
        assert lemma1_check(mono_clique(n, 1)) is None
    two_triangles = ColoredGraph.from_edges(
        6, 2, [(0, 1, 1), (0, 2, 1), (1, 2, 1), (3, 4, 1), (3, 5, 1), (4, 5, 1)])
    with pytest.raises(ValueError):
        lemma1_check(two_triangles)  # density 6/15 < 2/3
    with pytest.raises(ValueError):
        lemma1_check(ColoredGraph.empty(1, 1))


def test_lemma1_exhaustive_small():
    for n in range(2, 6):
        pairs = list(combinations(range(n), 2))
        for vec in product(range(2), repeat=len(pairs)):
            g = ColoredGraph.from_pair_values(n, 1, vec)
            if 3 * g.edge_count < n * (n - 1):
                continue
            assert lemma1_check(g) is None


def test_claim_audit_on_families():
    rep = claim_audit(h_m(3))
    assert rep.claim2_hypothesis and rep.claim4_hypothesis
    assert rep.ok
    assert rep.checked["claim2"] > 0
    assert rep.checked["claim4_pairs"] > 0
    # every disjoint seagull pair of h_m(3) is a tight (r+b = 6) pair
    assert rep.checked["claim4_tight"] == rep.checked["claim4_pairs"]


def test_claim_audit_hypothesis_gate():
    k3 = ColoredGraph.from_edges(3, 2, [(0, 1, 1), (0, 2, 1), (1, 2, 2)])
    rep = claim_audit(k3)
    assert not rep.claim2_hypothesis
    assert rep.checked["claim2"] == 0 and rep.ok


def test_claim_audit_gates_claim4_on_alternating_square():
    rep = claim_audit(alternating_c4())
    assert rep.claim2_hypothesis and not rep.claim4_hypothesis
    assert rep.checked["claim4_pairs"] == 0


def test_claim_audit_on_random_hypothesis_graphs(rng):
    for _ in range(150):
        n = rng.choice([6, 7, 8])
        vec = random_hypothesis_coloring(rng, n)
        g = ColoredGraph.from_pair_values(n, 2, vec)
        assert has_nonmono_triangle(g) is None
        rep = claim_audit(g)
        assert rep.ok, (n, vec, rep.violations)


def test_tight_class_labels():
    assert TightClass("FamilyHm", m=2).label == "FamilyHm(2)"
    assert TightClass("MonoClique").label == "MonoClique"

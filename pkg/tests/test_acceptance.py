"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines and
timings.  Criteria with stated runtime bounds assert them on the selected
kernel backend.
"""

from __future__ import annotations

import itertools
import random
import time
from contextlib import contextmanager
from math import comb

from nmtri import engine
from nmtri.graph import ColoredGraph
from nmtri.families import (
    alternating_c4,
    h_m,
    h_m_k,
    h_m_plus,
    mono_clique,
    predicted_class_size,
)
from nmtri.iso import apply_certificate, are_isomorphic, canonical_key
from nmtri.patterns import has_nonmono_triangle
from nmtri.search import (
    SearchSpec,
    audit_claims_random,
    audit_claims_sweep,
    characterize_tight,
    hunt_conjecture,
    run_search,
    verify_theorem,
)

from conftest import brute_isomorphic, brute_triangles, random_graph


@contextmanager
def criterion(num: int, text: str):
    t0 = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {num}: FAIL - {text}")
        raise
    dt = time.perf_counter() - t0
    print(f"ACCEPTANCE {num}: PASS - {text} [{dt:.2f}s, backend={engine.BACKEND}]")


def test_criterion_1_generator_identities():
    with criterion(1, "generator identities exact for m <= 50, k <= 6"):
        t0 = time.perf_counter()
        for m in range(1, 51):
            g = h_m(m)
            assert g.edge_count + min(g.class_sizes) == comb(3 * m, 2)
            gp = h_m_plus(m)
            assert gp.edge_count + min(gp.class_sizes) == comb(3 * m + 1, 2)
        for m in range(1, 21):
            for k in range(1, 7):
                sizes = h_m_k(m, k).class_sizes
                assert all(s == predicted_class_size(m, k) for s in sizes)
        assert time.perf_counter() - t0 < 1.0


def test_criterion_2_families_triangle_free():
    with criterion(2, "families contain no non-monochromatic triangle"):
        t0 = time.perf_counter()

        def scan_clean(g: ColoredGraph) -> bool:
            # Exhaustive triple scan, independent of the pattern streams.
            for a, b, c in itertools.combinations(range(g.n), 3):
                cols = (g.color_of(a, b), g.color_of(a, c), g.color_of(b, c))
                if all(cols) and len(set(cols)) > 1:
                    return False
            return True

        for m in range(1, 7):
            assert scan_clean(h_m(m))
            assert scan_clean(h_m_plus(m))
        for m in range(1, 5):
            for k in range(1, 5):
                assert scan_clean(h_m_k(m, k))
        assert time.perf_counter() - t0 < 5.0


def test_criterion_3_theorem_sweeps():
    with criterion(3, "strict-premise sweeps find zero counterexamples, n=3..6"):
        t0 = time.perf_counter()
        for n in (3, 4, 5):
            rep = verify_theorem(n)
            assert rep.verified and not rep.counterexamples
            assert rep.premise_hits == rep.conclusion_hits
        small = time.perf_counter() - t0
        assert small < 5.0

        t1 = time.perf_counter()
        rep6 = run_search(SearchSpec("theorem", 6, 2, budget=3 ** 15, shards=1))
        single = time.perf_counter() - t1
        assert rep6.verified and rep6.enumerated == 3 ** 15
        assert rep6.premise_hits == rep6.conclusion_hits == 3971766
        assert single < 600.0

        t2 = time.perf_counter()
        rep6s = run_search(SearchSpec("theorem", 6, 2, budget=3 ** 15, shards=8))
        sharded = time.perf_counter() - t2
        assert rep6s.comparable_dict() == rep6.comparable_dict()
        assert sharded < 120.0


def test_criterion_4_tight_characterization():
    with criterion(4, "tight iso classes exactly as characterized, n <= 6"):
        expected = {
            3: {canonical_key(mono_clique(3, 1)), canonical_key(h_m(1))},
            4: {canonical_key(mono_clique(4, 1)), canonical_key(alternating_c4()),
                canonical_key(h_m_plus(1))},
            5: {canonical_key(mono_clique(5, 1))},
            6: {canonical_key(mono_clique(6, 1)), canonical_key(h_m(2))},
        }
        for n in (3, 4, 5, 6):
            budget = max(3 ** comb(n, 2), 10 ** 9)
            rep = characterize_tight(n, budget=budget)
            got = {bytes.fromhex(key) for key, _, _ in rep.tight_classes}
            assert got == expected[n], f"n={n}"
            assert all(label != "Violation" for _, label, _ in rep.tight_classes)
            assert rep.verified


def test_criterion_5_lemma_verification():
    with criterion(5, "density-2/3 component lemma holds for all n = 2..7"):
        t0 = time.perf_counter()
        total = 0
        for n in range(2, 8):
            rep = run_search(SearchSpec("lemma", n, 1, budget=2 ** 21))
            assert rep.verified and not rep.counterexamples
            assert rep.enumerated == 2 ** comb(n, 2)
            assert rep.premise_hits == rep.conclusion_hits
            total += rep.enumerated
        assert total == sum(2 ** comb(n, 2) for n in range(2, 8))
        assert time.perf_counter() - t0 < 600.0


def test_criterion_6_claim_audits():
    with criterion(6, "claim audits clean: sweeps n <= 6 and 10^5 samples at n = 7, 8"):
        for n in (4, 5, 6):
            budget = max(3 ** comb(n, 2), 10 ** 9)
            rep = audit_claims_sweep(n, budget=budget)
            assert rep.verified and not rep.counterexamples
            assert rep.premise_hits == rep.conclusion_hits
            if n == 6:
                # tight (r+b = 6) pairs exist and all induce h_m(2)
                assert rep.extras["claim4_tight"] >= 1
                assert rep.extras["claim4_tight_verified"] == rep.extras["claim4_tight"]
        for n in (7, 8):
            rep = audit_claims_random(n, 100_000, seed=1729)
            assert rep.verified and rep.conclusion_hits == 100_000


def test_criterion_7_conjecture_consistency():
    with criterion(7, "conjectures consistent at n <= 5, k <= 3; "
                      "weakened threshold surfaces the rainbow 4-cycle"):
        for which in (1, 2):
            for n in (3, 4, 5):
                for k in (1, 2, 3):
                    rep = hunt_conjecture(which, n, k)
                    assert rep.verified, (which, n, k)
                    assert not rep.counterexamples
        weak = hunt_conjecture(1, 4, 4, conj1_binomial=True)
        assert not weak.verified
        rc4 = ColoredGraph.from_edges(
            4, 4, [(0, 1, 1), (1, 2, 2), (2, 3, 3), (0, 3, 4)])
        target = canonical_key(rc4)
        from nmtri.formats import parse_ecg
        found = {canonical_key(parse_ecg(text)) for text in weak.counterexamples}
        assert target in found


def test_criterion_8_isomorphism_soundness():
    with criterion(8, "certificates sound; canonical keys match brute-force "
                      "isomorphism on 500 random graphs and family pairs"):
        rng = random.Random(424242)
        graphs = [random_graph(rng, rng.randint(1, 6), rng.choice([1, 2, 3]))
                  for _ in range(500)]
        keys = [canonical_key(g) for g in graphs]
        for i in range(len(graphs)):
            for j in range(i + 1, len(graphs)):
                same_key = keys[i] == keys[j]
                assert same_key == brute_isomorphic(graphs[i], graphs[j])
        # certificates reproduce the target exactly
        for _ in range(50):
            g = rng.choice(graphs)
            vm = list(range(g.n))
            rng.shuffle(vm)
            h = ColoredGraph.from_edges(
                g.n, g.k, ((vm[u], vm[v], c) for u, v, c in g.edges()))
            cert = are_isomorphic(g, h)
            assert cert is not None and apply_certificate(g, cert) == h
        # family pairs at brute-checkable size
        fams = [mono_clique(4, 1), mono_clique(4, 2), alternating_c4(),
                h_m_plus(1), h_m(1), h_m(2), h_m_k(2, 2), mono_clique(6, 1)]
        for a in fams:
            for b in fams:
                if a.n != b.n or a.k != b.k:
                    continue
                assert (canonical_key(a) == canonical_key(b)) == \
                    brute_isomorphic(a, b)
        for m in range(1, 6):
            cert = are_isomorphic(h_m_k(m, 2), h_m(m))
            assert cert is not None
            assert apply_certificate(h_m_k(m, 2), cert) == h_m(m)
            assert canonical_key(h_m_k(m, 2)) == canonical_key(h_m(m))
        assert canonical_key(alternating_c4()) != canonical_key(h_m_plus(1))


def test_criterion_9_determinism():
    with criterion(9, "reports byte-identical across shard counts and reruns"):
        import json

        for spec_args in (("theorem", 5, 2), ("tight", 4, 2)):
            snapshots = set()
            for shards in (1, 2, 8):
                for _ in range(2):
                    rep = run_search(SearchSpec(*spec_args, shards=shards))
                    snapshots.add(json.dumps(rep.comparable_dict(), sort_keys=True))
            assert len(snapshots) == 1

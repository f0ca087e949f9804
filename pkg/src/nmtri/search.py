"""Exhaustive colouring sweeps: theorem verification, tight-case
characterization, lemma verification, conjecture hunting, and claim audits.

A sweep enumerates every pair-value vector in ``{0..k}^C(n,2)`` (lexicographic
order) through a kernel backend, optionally sharded by fixing the first
``ceil(log_{k+1}(shards))`` pair values.  Shards own disjoint prefix sets, keep
private tallies, and are merged by an associative fold, so reports are
identical for any shard count and any scheduling order.  Pruning inside the
kernel is count-preserving (see :mod:`nmtri._kernel_py`).

Reports serialize to JSON with the fixed key set ``{spec, enumerated,
premise_hits, conclusion_hits, tight_classes, counterexamples,
wall_time_ms}``; timing and the merge trace are excluded from equality.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Callable

from . import engine
from ._kernel_py import (
    MODE_CLAIMS,
    MODE_CONJ1,
    MODE_CONJ2,
    MODE_LEMMA,
    MODE_THEOREM,
    MODE_TIGHT,
    OPT_CONJ1_BINOMIAL,
    OPT_CONJ2_WEAK,
)
from .formats import emit_ecg
from .graph import ColoredGraph
from .iso import are_isomorphic, canonical_key
from .families import h_m
from .theorems import TightClass, VIOLATION, classify_tight

DEFAULT_BUDGET = 10 ** 9

_MODE_IDS = {
    "theorem": MODE_THEOREM,
    "tight": MODE_TIGHT,
    "lemma": MODE_LEMMA,
    "conj1": MODE_CONJ1,
    "conj2": MODE_CONJ2,
    "claims": MODE_CLAIMS,
}


class BudgetExceededError(ValueError):
    """Raised instead of silently starting an oversized sweep."""


@dataclass(frozen=True)
class SearchSpec:
    """Parameters of one sweep.

    ``mode`` is one of theorem / tight / lemma / conj1 / conj2 / claims.
    ``dedup`` buckets tight colorings by canonical key (else by raw vector).
    ``conj1_binomial`` swaps conjecture 1's threshold for C(n,2);
    ``conj2_weak`` allows equality in conjecture 2.
    """

    mode: str
    n: int
    k: int = 2
    dedup: bool = True
    shards: int = 1
    budget: int = DEFAULT_BUDGET
    prune: bool = True
    conj1_binomial: bool = False
    conj2_weak: bool = False

    def __post_init__(self):
        if self.mode not in _MODE_IDS:
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.n < 1 or self.k < 1 or self.shards < 1:
            raise ValueError("need n >= 1, k >= 1, shards >= 1")
        forced = {"theorem": 2, "tight": 2, "claims": 2, "lemma": 1}.get(self.mode)
        if forced is not None and self.k != forced:
            raise ValueError(f"mode {self.mode!r} requires k={forced}")

    @property
    def domain_size(self) -> int:
        return (self.k + 1) ** comb(self.n, 2)

    @property
    def options(self) -> int:
        return ((OPT_CONJ1_BINOMIAL if self.conj1_binomial else 0)
                | (OPT_CONJ2_WEAK if self.conj2_weak else 0))

    def to_dict(self) -> dict:
        # The shard count is a scheduling detail: it never changes any count,
        # so it lives in the trace, keeping reports byte-comparable.
        d = {"mode": self.mode, "n": self.n, "k": self.k, "dedup": self.dedup,
             "budget": self.budget, "prune": self.prune}
        if self.mode == "conj1":
            d["threshold"] = "binomial" if self.conj1_binomial else "square"
        if self.mode == "conj2":
            d["inequality"] = "weak" if self.conj2_weak else "strict"
        if self.k > 2 and self.mode in ("conj1", "conj2"):
            d["note"] = "k>2 premise: extension beyond the two-color statement"
        return d


@dataclass
class SearchReport:
    """Deterministic, mergeable tally of one sweep."""

    spec: dict
    enumerated: int = 0
    premise_hits: int = 0
    conclusion_hits: int = 0
    tight_classes: list[tuple[str, str, int]] = field(default_factory=list)
    counterexamples: list[str] = field(default_factory=list)
    wall_time_ms: float = 0.0
    trace: list[str] = field(default_factory=list)
    extras: dict = field(default_factory=dict)

    @property
    def verified(self) -> bool:
        """True when the sweep produced no counterexample and no Violation class."""
        if self.counterexamples:
            return False
        return all(label != VIOLATION for _, label, _ in self.tight_classes)

    def to_json_dict(self) -> dict:
        return {
            "spec": self.spec,
            "enumerated": self.enumerated,
            "premise_hits": self.premise_hits,
            "conclusion_hits": self.conclusion_hits,
            "tight_classes": [list(t) for t in self.tight_classes],
            "counterexamples": self.counterexamples,
            "wall_time_ms": self.wall_time_ms,
        }

    def comparable_dict(self) -> dict:
        """JSON dict minus timing; equal across shard counts and backends."""
        d = self.to_json_dict()
        del d["wall_time_ms"]
        return d


def merge_reports(a: SearchReport, b: SearchReport) -> SearchReport:
    """Associative, commutative fold of two shard reports (same spec)."""
    if a.spec != b.spec:
        raise ValueError("cannot merge reports with different specs")
    buckets: dict[tuple[str, str], int] = {}
    for key, label, mult in a.tight_classes + b.tight_classes:
        buckets[(key, label)] = buckets.get((key, label), 0) + mult
    merged = SearchReport(
        spec=a.spec,
        enumerated=a.enumerated + b.enumerated,
        premise_hits=a.premise_hits + b.premise_hits,
        conclusion_hits=a.conclusion_hits + b.conclusion_hits,
        tight_classes=sorted((key, label, mult)
                             for (key, label), mult in buckets.items()),
        counterexamples=sorted(a.counterexamples + b.counterexamples),
        wall_time_ms=a.wall_time_ms + b.wall_time_ms,
        trace=a.trace + b.trace,
    )
    extras = dict(a.extras)
    for key, val in b.extras.items():
        extras[key] = extras.get(key, 0) + val
    merged.extras = extras
    return merged


def _shard_prefixes(n: int, k: int, shards: int) -> list[list[bytes]]:
    """Prefix groups per shard: fix the first ceil(log_{k+1}(shards)) pairs."""
    npairs = comb(n, 2)
    t = 0
    while (k + 1) ** t < shards:
        t += 1
    t = min(t, npairs)
    prefixes: list[bytes] = []

    def grow(prefix: list[int]) -> None:
        if len(prefix) == t:
            prefixes.append(bytes(prefix))
            return
        for c in range(k + 1):
            grow(prefix + [c])

    grow([])
    groups: list[list[bytes]] = [[] for _ in range(shards)]
    for i, pre in enumerate(prefixes):
        groups[i % shards].append(pre)
    return groups


def _vec_to_graph(n: int, k: int, vec: bytes) -> ColoredGraph:
    return ColoredGraph.from_pair_values(n, k, vec)


def run_search(spec: SearchSpec, backend: str | None = None) -> SearchReport:
    """Run one sweep and post-process the kernel tallies into a report."""
    if spec.domain_size > spec.budget:
        raise BudgetExceededError(
            f"domain (k+1)^C(n,2) = {spec.domain_size} exceeds budget "
            f"{spec.budget}; pass a budget of at least {spec.domain_size} "
            "to run this sweep")
    kern = engine.get_kernel(backend)
    mode_id = _MODE_IDS[spec.mode]
    start = time.perf_counter()
    groups = _shard_prefixes(spec.n, spec.k, spec.shards)

    def run_shard(prefixes: list[bytes]) -> dict:
        agg: dict | None = None
        for pre in prefixes:
            res = kern.run(mode_id, spec.n, spec.k, pre, spec.prune, spec.options)
            if agg is None:
                agg = res
            else:
                for key in ("enumerated", "premise_hits", "conclusion_hits",
                            "claim2_checked", "claim4_checked", "claim4_tight"):
                    agg[key] += res[key]
                for key in ("qualifying", "counterexamples", "tight_pairs"):
                    agg[key].extend(res[key])
        assert agg is not None
        return agg

    if spec.shards == 1:
        shard_results = [run_shard(groups[0])]
    else:
        with ThreadPoolExecutor(max_workers=min(spec.shards, 16)) as pool:
            shard_results = list(pool.map(run_shard, groups))

    report = SearchReport(spec=spec.to_dict())
    report.trace.append(f"backend={engine.BACKEND if backend is None else backend} "
                        f"shards={spec.shards}")
    qualifying: list[bytes] = []
    tight_pairs: list[tuple[bytes, tuple, tuple]] = []
    raw_cex: list[bytes] = []
    for i, res in enumerate(shard_results):
        report.enumerated += res["enumerated"]
        report.premise_hits += res["premise_hits"]
        report.conclusion_hits += res["conclusion_hits"]
        for key in ("claim2_checked", "claim4_checked", "claim4_tight"):
            if res[key]:
                report.extras[key] = report.extras.get(key, 0) + res[key]
        qualifying.extend(res["qualifying"])
        raw_cex.extend(res["counterexamples"])
        tight_pairs.extend(res["tight_pairs"])
        report.trace.append(
            f"shard {i}: prefixes={len(groups[i])} enumerated={res['enumerated']}")

    if spec.mode == "tight":
        _bucket_tight(spec, qualifying, report)
    if spec.mode == "claims" and tight_pairs:
        _verify_tight_pairs(spec, tight_pairs, raw_cex, report)
    report.counterexamples = sorted(
        emit_ecg(_vec_to_graph(spec.n, spec.k, vec)) for vec in set(raw_cex))
    report.wall_time_ms = (time.perf_counter() - start) * 1000.0
    return report


def _bucket_tight(spec: SearchSpec, qualifying: list[bytes],
                  report: SearchReport) -> None:
    buckets: dict[bytes, int] = {}
    rep_vec: dict[bytes, bytes] = {}
    for vec in qualifying:
        if spec.dedup:
            key = canonical_key(_vec_to_graph(spec.n, spec.k, vec))
        else:
            key = vec
        buckets[key] = buckets.get(key, 0) + 1
        rep_vec.setdefault(key, vec)
    entries = []
    for key, mult in buckets.items():
        cls = classify_tight(_vec_to_graph(spec.n, spec.k, rep_vec[key]))
        entries.append((key.hex(), cls.label, mult))
    report.tight_classes = sorted(entries)


def _verify_tight_pairs(spec: SearchSpec,
                        tight_pairs: list[tuple[bytes, tuple, tuple]],
                        raw_cex: list[bytes], report: SearchReport) -> None:
    """r+b = 6 seagull pairs must induce a copy of h_m(2)."""
    target = h_m(2)
    checked = 0
    for vec, s1, s2 in tight_pairs:
        g = _vec_to_graph(spec.n, spec.k, vec)
        sub = g.induced(sorted(s1 + s2))
        checked += 1
        if are_isomorphic(sub, target) is None:
            raw_cex.append(vec)
    report.extras["claim4_tight_verified"] = (
        report.extras.get("claim4_tight_verified", 0) + checked)


# -- convenience wrappers ------------------------------------------------------


def enumerate_colorings(n: int, k: int, visitor: Callable[[ColoredGraph], None],
                        budget: int = DEFAULT_BUDGET) -> None:
    """Call ``visitor`` once per coloring, lexicographic by pair-value vector.

    This is the slow, auditable reference enumeration; the sweeps go through
    the kernel instead.
    """
    import itertools

    npairs = comb(n, 2)
    if (k + 1) ** npairs > budget:
        raise BudgetExceededError(
            f"domain (k+1)^C(n,2) = {(k + 1) ** npairs} exceeds budget {budget}")
    for vec in itertools.product(range(k + 1), repeat=npairs):
        visitor(ColoredGraph.from_pair_values(n, k, vec))


def verify_theorem(n: int, **kw) -> SearchReport:
    """Sweep all 2-colorings of n vertices for strict-premise counterexamples."""
    return run_search(SearchSpec("theorem", n, 2, **kw))


def characterize_tight(n: int, **kw) -> SearchReport:
    """Bucket the weak-premise, no-non-mono-triangle colorings by iso class."""
    return run_search(SearchSpec("tight", n, 2, **kw))


def verify_lemma(n_max: int, **kw) -> SearchReport:
    """Check the density-2/3 component lemma on every graph with 2..n_max vertices."""
    report: SearchReport | None = None
    for n in range(2, n_max + 1):
        stratum = run_search(SearchSpec("lemma", n, 1, **kw))
        stratum.spec = {**stratum.spec, "n": n_max, "n_range": f"2..{n_max}"}
        report = stratum if report is None else merge_reports(report, stratum)
    if report is None:
        raise ValueError("n_max must be >= 2")
    return report


def hunt_conjecture(which: int, n: int, k: int, **kw) -> SearchReport:
    """List premise-satisfying colorings with no non-monochromatic triangle."""
    if which not in (1, 2):
        raise ValueError("conjecture index must be 1 or 2")
    return run_search(SearchSpec(f"conj{which}", n, k, **kw))


def audit_claims_sweep(n: int, **kw) -> SearchReport:
    """Audit the seagull claims on every hypothesis-satisfying 2-coloring."""
    return run_search(SearchSpec("claims", n, 2, **kw))


def random_hypothesis_coloring(rng: random.Random, n: int) -> bytes:
    """A random 2-coloring with every triangle monochromatic.

    Draws a random graph, then colors each triangle-connected edge class
    uniformly; every hypothesis-satisfying coloring arises this way.
    """
    npairs = comb(n, 2)
    p = rng.uniform(0.15, 0.85)
    present = [rng.random() < p for _ in range(npairs)]
    idx = {}
    q = 0
    for u in range(n):
        for v in range(u + 1, n):
            idx[(u, v)] = q
            q += 1
    parent = list(range(npairs))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in range(n):
        for b in range(a + 1, n):
            if not present[idx[(a, b)]]:
                continue
            for c in range(b + 1, n):
                if present[idx[(a, c)]] and present[idx[(b, c)]]:
                    ra, rb, rc = find(idx[(a, b)]), find(idx[(a, c)]), find(idx[(b, c)])
                    parent[rb] = ra
                    parent[find(rc)] = find(ra)
    color: dict[int, int] = {}
    vec = bytearray(npairs)
    for q in range(npairs):
        if present[q]:
            root = find(q)
            if root not in color:
                color[root] = rng.randint(1, 2)
            vec[q] = color[root]
    return bytes(vec)


def audit_claims_random(n: int, samples: int, seed: int = 0,
                        backend: str | None = None) -> SearchReport:
    """Audit the seagull claims on random hypothesis-satisfying colorings."""
    kern = engine.get_kernel(backend)
    rng = random.Random(seed)
    start = time.perf_counter()
    report = SearchReport(spec={"mode": "claims_random", "n": n, "k": 2,
                                "samples": samples, "seed": seed})
    target = h_m(2)
    raw_cex: list[bytes] = []
    for _ in range(samples):
        vec = random_hypothesis_coloring(rng, n)
        res = kern.audit_one(n, vec)
        report.enumerated += 1
        report.premise_hits += 1  # hypothesis-satisfying by construction
        for key in ("claim2_checked", "claim4_checked", "claim4_tight"):
            report.extras[key] = report.extras.get(key, 0) + res[key]
        bad = bool(res["violations"])
        for s1, s2 in res["tight_pairs"]:
            g = _vec_to_graph(n, 2, vec)
            if are_isomorphic(g.induced(sorted(s1 + s2)), target) is None:
                bad = True
        if bad:
            raw_cex.append(vec)
        else:
            report.conclusion_hits += 1
    report.counterexamples = sorted(
        emit_ecg(_vec_to_graph(n, 2, vec)) for vec in set(raw_cex))
    report.wall_time_ms = (time.perf_counter() - start) * 1000.0
    return report

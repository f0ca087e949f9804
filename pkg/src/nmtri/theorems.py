"""Premise and conclusion predicates for the extremal statements this library
verifies, the tight-case classifier, and empirical audits of the structural
facts about seagulls.

Every threshold comparison is integer-exact (cross-multiplied); no predicate
touches floating point.  The statements, in library terms:

* ``mantel_premise``        -- 4|E| > n^2 forces a triangle.
* ``main_premise_strict``   -- |E| + min(|E_1|, |E_2|) > C(n,2) forces a
  non-monochromatic triangle (two colors).
* ``main_premise_weak``     -- same with >=; the equality case is classified
  by :func:`classify_tight` into mono cliques, the alternating square, and
  the ``h_m`` / ``h_m_plus`` families.
* ``corollary_premise``     -- both classes above C(n,2)/3.
* ``conjecture1_premise``   -- 2|E| - max|E_i| > n^2/2 (any k); a flag swaps
  in the weaker C(n,2) threshold, which a rainbow 4-cycle defeats.
* ``conjecture2_premise``   -- every |E_i| > n^2/(4k-2); weak variant via flag.
* ``lemma1_check``          -- density >= 2/3 yields a component G' with
  |V(G')| > 2n/3 and alpha(G') + 1 <= 2|V(G')| - n.
* ``claim_audit``           -- with no non-mono triangle, every vertex sends
  at most 2 edges into any seagull; additionally with no alternating square,
  disjoint seagull pairs satisfy r+b <= 6, r+b+max(r,b) <= 9, and r+b = 6
  forces the induced 6-vertex graph to be ``h_m(2)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb

from .families import alternating_c4, h_m, h_m_plus
from .graph import ColoredGraph
from .iso import are_isomorphic, canonical_key
from .patterns import (
    PatternWitness,
    TriangleWitness,
    alternating_squares,
    has_nonmono_triangle,
    is_monochromatic,
    seagulls,
)

HAS_NONMONO_TRIANGLE = "HasNonMonoTriangle"
MONO_CLIQUE = "MonoClique"
ALTERNATING_SQUARE = "AlternatingSquare"
FAMILY_HM = "FamilyHm"
FAMILY_HM_PLUS = "FamilyHmPlus"
VIOLATION = "Violation"


@dataclass(frozen=True)
class TightClass:
    """Outcome of the tight-case classification.

    ``Violation`` is only reachable by a weak-premise graph without a
    non-monochromatic triangle that matches none of the known outcomes,
    i.e. a refutation of the characterization; it must never occur.
    """

    kind: str
    m: int | None = None
    witness: TriangleWitness | None = None

    @property
    def label(self) -> str:
        if self.m is not None:
            return f"{self.kind}({self.m})"
        return self.kind


@dataclass
class LemmaViolation:
    """A graph refuting the density-2/3 component lemma (never expected)."""

    graph: ColoredGraph
    component: tuple[int, ...] | None
    alpha: int | None
    detail: str


@dataclass
class ClaimViolation:
    claim: str
    vertices: tuple[int, ...]
    detail: str


@dataclass
class ClaimAuditReport:
    """Outcome of auditing the seagull claims on one graph.

    Hypotheses are computed from the graph itself; a claim whose hypothesis
    fails is skipped with a zero checked count.
    """

    claim2_hypothesis: bool
    claim4_hypothesis: bool
    checked: dict[str, int] = field(default_factory=dict)
    violations: list[ClaimViolation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


# -- premises -----------------------------------------------------------------


def mantel_premise(g: ColoredGraph) -> bool:
    """4|E| > n^2, the classical edge threshold forcing a triangle."""
    return 4 * g.edge_count > g.n * g.n


def _require_two_colors(g: ColoredGraph) -> None:
    if g.k != 2:
        raise ValueError(f"predicate is stated for k=2 (got k={g.k}); "
                         "see generalized_min_premise for the extension")


def main_premise_strict(g: ColoredGraph) -> bool:
    """|E| + min(|E_1|, |E_2|) > C(n,2); two colors only."""
    _require_two_colors(g)
    return g.edge_count + min(g.class_sizes) > comb(g.n, 2)


def main_premise_weak(g: ColoredGraph) -> bool:
    """|E| + min(|E_1|, |E_2|) >= C(n,2); two colors only."""
    _require_two_colors(g)
    return g.edge_count + min(g.class_sizes) >= comb(g.n, 2)


def generalized_min_premise(g: ColoredGraph, strict: bool = True) -> bool:
    """|E| + min over all k classes compared against C(n,2).

    Extension beyond the two-color statement; reports flag it as such.
    """
    lhs = g.edge_count + min(g.class_sizes)
    rhs = comb(g.n, 2)
    return lhs > rhs if strict else lhs >= rhs


def corollary_premise(g: ColoredGraph) -> bool:
    """Both color classes strictly above one third of all vertex pairs."""
    _require_two_colors(g)
    rhs = comb(g.n, 2)
    return all(3 * s > rhs for s in g.class_sizes)


def conjecture1_premise(g: ColoredGraph, binomial_variant: bool = False) -> bool:
    """2|E| - max|E_i| > n^2/2, for any number of classes.

    ``binomial_variant`` swaps the threshold for C(n,2), the weakening that a
    rainbow 4-cycle is known to defeat.
    """
    lhs = 2 * g.edge_count - max(g.class_sizes)
    if binomial_variant:
        return lhs > comb(g.n, 2)
    return 2 * lhs > g.n * g.n


def conjecture2_premise(g: ColoredGraph, strict: bool = True) -> bool:
    """Every class above n^2/(4k-2); ``strict=False`` allows equality."""
    rhs = g.n * g.n
    f = 4 * g.k - 2
    if strict:
        return all(f * s > rhs for s in g.class_sizes)
    return all(f * s >= rhs for s in g.class_sizes)


# -- tight-case classification --------------------------------------------------


@lru_cache(maxsize=None)
def _tight_candidates(n: int) -> tuple[tuple[bytes, TightClass], ...]:
    cands: list[tuple[bytes, TightClass]] = []
    if n == 4:
        cands.append((canonical_key(alternating_c4()),
                      TightClass(ALTERNATING_SQUARE)))
    if n >= 3 and n % 3 == 0:
        m = n // 3
        cands.append((canonical_key(h_m(m)), TightClass(FAMILY_HM, m=m)))
    if n >= 4 and n % 3 == 1:
        m = (n - 1) // 3
        cands.append((canonical_key(h_m_plus(m)),
                      TightClass(FAMILY_HM_PLUS, m=m)))
    return tuple(cands)


def classify_tight(g: ColoredGraph) -> TightClass:
    """Sort a weak-premise graph into the characterization's outcome list.

    Raises ``ValueError`` when the graph has more than two classes or fails
    the weak premise.  Family matching goes through canonical keys against
    generated candidates of the same vertex count.
    """
    _require_two_colors(g)
    if not main_premise_weak(g):
        raise ValueError("graph does not satisfy |E| + min|E_i| >= C(n,2)")
    w = has_nonmono_triangle(g)
    if w is not None:
        return TightClass(HAS_NONMONO_TRIANGLE, witness=w)
    if g.edge_count == comb(g.n, 2) and is_monochromatic(g):
        return TightClass(MONO_CLIQUE)
    key = canonical_key(g)
    for cand_key, cls in _tight_candidates(g.n):
        if key == cand_key:
            return cls
    return TightClass(VIOLATION)


# -- density lemma ---------------------------------------------------------------


def lemma1_check(g: ColoredGraph) -> LemmaViolation | None:
    """Check the component lemma on a graph of density >= 2/3.

    Ignores colors.  Requires n >= 2 and 3|E| >= n(n-1).  Returns None when
    some component G' has 3|V(G')| > 2n and alpha(G') + 1 <= 2|V(G')| - n;
    otherwise a violation witness (which should never occur).
    """
    n = g.n
    if n < 2:
        raise ValueError("lemma requires at least 2 vertices")
    if 3 * g.edge_count < n * (n - 1):
        raise ValueError("lemma requires density >= 2/3 (3|E| >= n(n-1))")
    big = None
    for compo in g.components():
        if 3 * len(compo) > 2 * n:
            big = compo
            break
    if big is None:
        return LemmaViolation(g, None, None, "no component larger than 2n/3")
    alpha = g.induced(big).independence_number()
    if alpha + 1 <= 2 * len(big) - n:
        return None
    return LemmaViolation(g, big, alpha,
                          f"alpha(G')+1 = {alpha + 1} > 2|V(G')|-n = {2 * len(big) - n}")


# -- seagull claim audits ----------------------------------------------------------


def claim_audit(g: ColoredGraph) -> ClaimAuditReport:
    """Audit the seagull claims with hypotheses computed from the graph.

    Claim 2 (needs: no non-monochromatic triangle): every vertex outside a
    seagull sends at most 2 edges into it.  Claim 4 (needs additionally: two
    colors and no alternating square): for disjoint seagulls with r and b
    cross edges of either color, r+b <= 6, r+b+max(r,b) <= 9, and r+b = 6
    forces the induced subgraph on the six vertices to be ``h_m(2)``.
    """
    hyp2 = has_nonmono_triangle(g) is None
    hyp4 = hyp2 and g.k == 2 and next(alternating_squares(g), None) is None
    report = ClaimAuditReport(hyp2, hyp4,
                              {"claim2": 0, "claim4_pairs": 0, "claim4_tight": 0})
    if not hyp2:
        return report
    gulls = list(seagulls(g))
    for s in gulls:
        for v in range(g.n):
            if v in s.vertices:
                continue
            report.checked["claim2"] += 1
            if g.edges_between([v], s.vertices) > 2:
                report.violations.append(ClaimViolation(
                    "claim2", s.vertices + (v,),
                    f"vertex {v} sends 3 edges into seagull {s.vertices}"))
    if not hyp4:
        return report
    for s1, s2 in combinations(gulls, 2):
        if set(s1.vertices) & set(s2.vertices):
            continue
        report.checked["claim4_pairs"] += 1
        r = g.edges_between(s1.vertices, s2.vertices, color=1)
        b = g.edges_between(s1.vertices, s2.vertices, color=2)
        pair = s1.vertices + s2.vertices
        if r + b > 6:
            report.violations.append(ClaimViolation(
                "claim4", pair, f"r+b = {r + b} > 6"))
            continue
        if r + b + max(r, b) > 9:
            report.violations.append(ClaimViolation(
                "claim4", pair, f"r+b+max = {r + b + max(r, b)} > 9"))
            continue
        if r + b == 6:
            report.checked["claim4_tight"] += 1
            sub = g.induced(sorted(pair))
            if are_isomorphic(sub, h_m(2)) is None:
                report.violations.append(ClaimViolation(
                    "claim4", pair,
                    "r+b = 6 but induced subgraph is not h_m(2)"))
    return report


def _seagull_pair_counts(g: ColoredGraph, s1: PatternWitness,
                         s2: PatternWitness) -> tuple[int, int]:
    """(r, b) cross-edge counts between two disjoint seagulls, two colors."""
    return (g.edges_between(s1.vertices, s2.vertices, color=1),
            g.edges_between(s1.vertices, s2.vertices, color=2))

"""Non-monochromatic triangles in edge-colored graphs.

Builds the extremal families meeting |E| + min|E_i| = C(n,2), tests the
premises and conclusions of the associated extremal statements, recovers the
tight-case characterization by exhaustive symmetry-reduced search, and hunts
counterexamples to the many-color conjectures.
"""

from .engine import BACKEND as kernel_backend
from .families import (
    FamilySpec,
    alternating_c4,
    h_m,
    h_m_k,
    h_m_plus,
    mono_clique,
    predicted_class_size,
)
from .formats import EcgParseError, emit_dot, emit_ecg, parse_ecg, parse_graph6
from .graph import ColoredGraph, ColorStats, pair_index, pair_iter
from .iso import IsoCertificate, apply_certificate, are_isomorphic, canonical_key
from .patterns import (
    PatternWitness,
    TriangleWitness,
    alternating_squares,
    has_nonmono_triangle,
    is_monochromatic,
    is_rainbow,
    max_disjoint_seagulls,
    seagulls,
    triangles,
)
from .search import (
    BudgetExceededError,
    SearchReport,
    SearchSpec,
    audit_claims_random,
    audit_claims_sweep,
    characterize_tight,
    enumerate_colorings,
    hunt_conjecture,
    run_search,
    verify_lemma,
    verify_theorem,
)
from .theorems import (
    ClaimAuditReport,
    LemmaViolation,
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

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "ClaimAuditReport",
    "ColorStats",
    "ColoredGraph",
    "EcgParseError",
    "FamilySpec",
    "IsoCertificate",
    "LemmaViolation",
    "PatternWitness",
    "SearchReport",
    "SearchSpec",
    "TightClass",
    "TriangleWitness",
    "alternating_c4",
    "alternating_squares",
    "apply_certificate",
    "are_isomorphic",
    "audit_claims_random",
    "audit_claims_sweep",
    "canonical_key",
    "characterize_tight",
    "claim_audit",
    "classify_tight",
    "conjecture1_premise",
    "conjecture2_premise",
    "corollary_premise",
    "emit_dot",
    "emit_ecg",
    "enumerate_colorings",
    "generalized_min_premise",
    "h_m",
    "h_m_k",
    "h_m_plus",
    "has_nonmono_triangle",
    "hunt_conjecture",
    "is_monochromatic",
    "is_rainbow",
    "kernel_backend",
    "lemma1_check",
    "main_premise_strict",
    "main_premise_weak",
    "mantel_premise",
    "max_disjoint_seagulls",
    "mono_clique",
    "pair_index",
    "pair_iter",
    "parse_ecg",
    "parse_graph6",
    "predicted_class_size",
    "run_search",
    "seagulls",
    "triangles",
    "verify_lemma",
    "verify_theorem",
]

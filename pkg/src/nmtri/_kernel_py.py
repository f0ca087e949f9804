"""Pure-Python sweep kernel.

Walks the space of pair-value vectors ``{0..k}^C(n,2)`` depth-first in
lexicographic order, maintaining edge/class counters and the number of
non-monochromatic triangles incrementally (assigning pair ``(u, v)`` with
``u < v`` completes exactly the triangles ``{w, u, v}`` with ``w < u``).

Pruning never changes reported counts: a subtree cut because a
non-monochromatic triangle already exists contributes its premise-satisfying
completions by a closed-form multinomial count, and a subtree cut because the
premise is unreachable contributes zero premise hits by construction.

The compiled twin in ``_kernel_cy`` implements the same contract; both are
selected through :mod:`nmtri.engine`.
"""

from __future__ import annotations

from math import comb

MODE_THEOREM = 0
MODE_TIGHT = 1
MODE_LEMMA = 2
MODE_CONJ1 = 3
MODE_CONJ2 = 4
MODE_CLAIMS = 5

OPT_CONJ1_BINOMIAL = 1
OPT_CONJ2_WEAK = 2

_MODE_KS = {MODE_THEOREM: 2, MODE_TIGHT: 2, MODE_LEMMA: 1, MODE_CLAIMS: 2}


def _pair_tables(n: int):
    """Pair list, index matrix, and per-pair triangle-completion index pairs."""
    idx = [[-1] * n for _ in range(n)]
    pu, pv = [], []
    p = 0
    for u in range(n):
        for v in range(u + 1, n):
            idx[u][v] = idx[v][u] = p
            pu.append(u)
            pv.append(v)
            p += 1
    tri = []
    for q in range(p):
        u, v = pu[q], pv[q]
        tri.append(tuple((idx[w][u], idx[w][v]) for w in range(u)))
    return p, pu, pv, idx, tri


def _triples(n: int, idx):
    return [(idx[a][b], idx[a][c], idx[b][c], a, b, c)
            for a in range(n) for b in range(a + 1, n) for c in range(b + 1, n)]


def _quad_cycles(n: int, idx):
    """For each 4-set, its three perfect pairings as (miss1, miss2, cycle edges)."""
    out = []
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                for d in range(c + 1, n):
                    out.append((
                        (idx[a][b], idx[c][d],
                         idx[a][c], idx[c][b], idx[b][d], idx[d][a]),
                        (idx[a][c], idx[b][d],
                         idx[a][b], idx[b][c], idx[c][d], idx[d][a]),
                        (idx[a][d], idx[b][c],
                         idx[a][b], idx[b][d], idx[d][c], idx[c][a]),
                    ))
    return out


def _has_alternating_square(vals, quads) -> bool:
    for pairings in quads:
        for m1, m2, e1, e2, e3, e4 in pairings:
            if vals[m1] == 0 and vals[m2] == 0:
                c1 = vals[e1]
                if c1 == 0 or vals[e3] != c1:
                    continue
                c2 = vals[e2]
                if c2 == 0 or c2 == c1 or vals[e4] != c2:
                    continue
                return True
    return False


def _find_seagulls(vals, triples):
    out = []
    for iab, iac, ibc, a, b, c in triples:
        cab, cac, cbc = vals[iab], vals[iac], vals[ibc]
        present = (cab > 0) + (cac > 0) + (cbc > 0)
        if present != 2:
            continue
        if cab == 0:
            x, y = cac, cbc
        elif cac == 0:
            x, y = cab, cbc
        else:
            x, y = cab, cac
        if x != y:
            out.append((a, b, c))
    return out


def _alpha_of_mask(adj, mask: int) -> int:
    best = 0
    sub = mask
    while True:
        m = sub
        ok = True
        while m:
            b = m & -m
            m ^= b
            if adj[b.bit_length() - 1] & sub:
                ok = False
                break
        if ok:
            pc = sub.bit_count()
            if pc > best:
                best = pc
        if sub == 0:
            return best
        sub = (sub - 1) & mask


def _lemma_holds(n: int, adj) -> bool:
    seen = 0
    best_mask, best_size = 0, 0
    full = (1 << n) - 1
    for v0 in range(n):
        bit = 1 << v0
        if seen & bit:
            continue
        mask = 0
        frontier = bit
        while frontier:
            mask |= frontier
            nxt = 0
            m = frontier
            while m:
                b = m & -m
                m ^= b
                nxt |= adj[b.bit_length() - 1]
            frontier = nxt & ~mask
        seen |= mask
        size = mask.bit_count()
        if size > best_size:
            best_mask, best_size = mask, size
        if seen == full:
            break
    if 3 * best_size <= 2 * n:
        return False
    return _alpha_of_mask(adj, best_mask) + 1 <= 2 * best_size - n


def run(mode: int, n: int, k: int, prefix: bytes = b"", prune: bool = True,
        opts: int = 0) -> dict:
    """Sweep all completions of ``prefix`` and tally the mode's counts."""
    forced_k = _MODE_KS.get(mode)
    if forced_k is not None and k != forced_k:
        raise ValueError(f"mode {mode} requires k={forced_k}, got {k}")
    if k < 1 or n < 0:
        raise ValueError("need k >= 1 and n >= 0")
    P, pu, pv, idx, tri = _pair_tables(n)
    if len(prefix) > P:
        raise ValueError("prefix longer than the pair vector")
    if any(c > k for c in prefix):
        raise ValueError("prefix value out of range")
    if (k + 1) ** P >= 1 << 62:
        raise ValueError("domain exceeds the kernel's counting range")

    T = comb(n, 2)
    nn = n * n
    kk1 = k + 1
    pow_f = [kk1 ** f for f in range(P + 1)]
    weak = mode == MODE_TIGHT
    conj1_binomial = bool(opts & OPT_CONJ1_BINOMIAL)
    conj2_weak = bool(opts & OPT_CONJ2_WEAK)
    track_adj = mode in (MODE_LEMMA, MODE_CLAIMS)
    need_k2_count = mode in (MODE_THEOREM, MODE_TIGHT)
    need_conj_count = mode in (MODE_CONJ1, MODE_CONJ2)

    vals = bytearray(P)
    cls = [0] * (kk1)
    adj = [0] * n
    enumerated = 0
    premise_hits = 0
    conclusion_hits = 0
    qualifying: list[bytes] = []
    counterexamples: list[bytes] = []
    claim2_checked = 0
    claim4_checked = 0
    claim4_tight = 0
    tight_pairs: list[tuple[bytes, tuple, tuple]] = []

    triples = _triples(n, idx) if mode == MODE_CLAIMS else ()
    quads = _quad_cycles(n, idx) if mode == MODE_CLAIMS else ()

    count_cache: dict[tuple, int] = {}

    def count_premise_k2(E: int, r: int, b: int, f: int) -> int:
        key = (E, r, b, f)
        got = count_cache.get(key)
        if got is not None:
            return got
        total = 0
        bound = T if weak else T + 1
        for a in range(f + 1):
            ca = comb(f, a)
            for b2 in range(f - a + 1):
                if E + a + b2 + min(r + a, b + b2) >= bound:
                    total += ca * comb(f - a, b2)
        count_cache[key] = total
        return total

    def conj_premise(E: int) -> bool:
        if mode == MODE_CONJ1:
            lhs = 2 * E - max(cls[1:])
            return lhs > T if conj1_binomial else 2 * lhs > nn
        fac = 4 * k - 2
        if conj2_weak:
            return all(fac * cls[c] >= nn for c in range(1, kk1))
        return all(fac * cls[c] > nn for c in range(1, kk1))

    def count_premise_conj(f: int) -> int:
        key = (f, tuple(cls[1:]))
        got = count_cache.get(key)
        if got is not None:
            return got
        base = cls[1:]
        E0 = sum(base)
        fac = 4 * k - 2
        total = 0

        def rec(i: int, left: int, weight: int, extra: int, minv: int, maxv: int):
            nonlocal total
            if i == k:
                E = E0 + extra
                if mode == MODE_CONJ1:
                    lhs = 2 * E - maxv
                    ok = lhs > T if conj1_binomial else 2 * lhs > nn
                else:
                    ok = fac * minv >= nn if conj2_weak else fac * minv > nn
                if ok:
                    total += weight
                return
            for a in range(left + 1):
                s = base[i] + a
                rec(i + 1, left - a, weight * comb(left, a), extra + a,
                    min(minv, s), max(maxv, s))

        rec(0, f, 1, 0, 1 << 60, 0)
        count_cache[key] = total
        return total

    def unreachable(E: int, f: int) -> bool:
        if mode in (MODE_THEOREM, MODE_TIGHT):
            r, b = cls[1], cls[2]
            best_min = min((r + b + f) // 2, r + f, b + f)
            top = E + f + best_min
            return top < T if weak else top <= T
        if mode == MODE_LEMMA:
            return 3 * (E + f) < 2 * T
        if mode == MODE_CONJ1:
            if conj1_binomial:
                return 2 * (E + f) - max(cls[1:]) <= T
            return 4 * (E + f) - 2 * max(cls[1:]) <= nn
        if mode == MODE_CONJ2:
            top = (4 * k - 2) * (min(cls[1:]) + f)
            return top < nn if conj2_weak else top <= nn
        return False  # claims: the only prune is the triangle one

    def audit_claims_leaf() -> None:
        nonlocal premise_hits, conclusion_hits, claim2_checked, claim4_checked, claim4_tight
        premise_hits += 1
        violated = False
        gulls = _find_seagulls(vals, triples)
        full = (1 << n) - 1
        gull_masks = []
        for (a, b, c) in gulls:
            mask = (1 << a) | (1 << b) | (1 << c)
            gull_masks.append(mask)
            claim2_checked += n - 3
            if adj[a] & adj[b] & adj[c] & ~mask & full:
                violated = True
        if not _has_alternating_square(vals, quads):
            m = len(gulls)
            for i in range(m):
                mi = gull_masks[i]
                a1, b1, c1 = gulls[i]
                for j in range(i + 1, m):
                    if mi & gull_masks[j]:
                        continue
                    claim4_checked += 1
                    r = b = 0
                    for x in gulls[i]:
                        row = idx[x]
                        for y in gulls[j]:
                            v = vals[row[y]]
                            if v == 1:
                                r += 1
                            elif v == 2:
                                b += 1
                    if r + b > 6 or r + b + (r if r > b else b) > 9:
                        violated = True
                    elif r + b == 6:
                        claim4_tight += 1
                        tight_pairs.append((bytes(vals), gulls[i], gulls[j]))
        if violated:
            counterexamples.append(bytes(vals))
        else:
            conclusion_hits += 1

    def leaf() -> None:
        nonlocal enumerated, premise_hits, conclusion_hits
        enumerated += 1
        if mode == MODE_THEOREM or mode == MODE_TIGHT:
            E = cls[1] + cls[2]
            hit = (E + min(cls[1], cls[2])) >= (T if weak else T + 1)
            if hit:
                premise_hits += 1
                if state[1] > 0:
                    conclusion_hits += 1
                elif mode == MODE_THEOREM:
                    counterexamples.append(bytes(vals))
                else:
                    qualifying.append(bytes(vals))
        elif mode == MODE_LEMMA:
            if 3 * cls[1] >= 2 * T:
                premise_hits += 1
                if _lemma_holds(n, adj):
                    conclusion_hits += 1
                else:
                    counterexamples.append(bytes(vals))
        elif mode in (MODE_CONJ1, MODE_CONJ2):
            E = sum(cls[1:])
            if conj_premise(E):
                premise_hits += 1
                if state[1] > 0:
                    conclusion_hits += 1
                else:
                    counterexamples.append(bytes(vals))
        else:  # claims
            if state[1] == 0:
                audit_claims_leaf()

    # state[0] = edge count, state[1] = live non-mono triangle count
    state = [0, 0]

    def assign(p: int, c: int) -> int:
        delta = 0
        if c:
            cls[c] += 1
            state[0] += 1
            for e1, e2 in tri[p]:
                c1 = vals[e1]
                if c1 and vals[e2] and not (c1 == c and vals[e2] == c):
                    delta += 1
            if track_adj:
                u, v = pu[p], pv[p]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        vals[p] = c
        state[1] += delta
        return delta

    def unassign(p: int, c: int, delta: int) -> None:
        vals[p] = 0
        state[1] -= delta
        if c:
            cls[c] -= 1
            state[0] -= 1
            if track_adj:
                u, v = pu[p], pv[p]
                adj[u] &= ~(1 << v)
                adj[v] &= ~(1 << u)

    def prune_subtree(f: int) -> None:
        """Account a subtree whose every completion has a non-mono triangle."""
        nonlocal enumerated, premise_hits, conclusion_hits
        enumerated += pow_f[f]
        if need_k2_count:
            c = count_premise_k2(state[0], cls[1], cls[2], f)
            premise_hits += c
            conclusion_hits += c
        elif need_conj_count:
            c = count_premise_conj(f)
            premise_hits += c
            conclusion_hits += c
        # lemma: unreachable (k=1 has no non-mono triangles); claims: zero hits

    def dfs(p: int) -> None:
        nonlocal enumerated
        f = P - 1 - p
        last = p == P - 1
        for c in range(kk1):
            delta = assign(p, c)
            if prune and state[1] > 0:
                prune_subtree(f)
            elif prune and unreachable(state[0], f):
                enumerated += pow_f[f]
            elif last:
                leaf()
            else:
                dfs(p + 1)
            unassign(p, c, delta)

    # Assign the shard prefix through the same incremental machinery, then
    # apply the prune checks once for the whole owned subtree.
    for p, c in enumerate(prefix):
        assign(p, c)
    t = len(prefix)
    f = P - t
    if prune and state[1] > 0:
        prune_subtree(f)
    elif prune and unreachable(state[0], f):
        enumerated += pow_f[f]
    elif t == P:
        leaf()
    else:
        dfs(t)

    return {
        "enumerated": enumerated,
        "premise_hits": premise_hits,
        "conclusion_hits": conclusion_hits,
        "qualifying": qualifying,
        "counterexamples": counterexamples,
        "claim2_checked": claim2_checked,
        "claim4_checked": claim4_checked,
        "claim4_tight": claim4_tight,
        "tight_pairs": tight_pairs,
    }


def audit_one(n: int, vals: bytes) -> dict:
    """Run the claims audit on a single two-color pair vector."""
    P, pu, pv, idx, tri = _pair_tables(n)
    if len(vals) != P:
        raise ValueError(f"expected {P} pair values, got {len(vals)}")
    triples = _triples(n, idx)
    quads = _quad_cycles(n, idx)
    adj = [0] * n
    nonmono = 0
    for iab, iac, ibc, a, b, c in triples:
        cab, cac, cbc = vals[iab], vals[iac], vals[ibc]
        if cab and cac and cbc and not (cab == cac == cbc):
            nonmono += 1
    for p in range(P):
        if vals[p]:
            u, v = pu[p], pv[p]
            adj[u] |= 1 << v
            adj[v] |= 1 << u

    out = {
        "claim2_hypothesis": nonmono == 0,
        "claim4_hypothesis": False,
        "claim2_checked": 0,
        "claim4_checked": 0,
        "claim4_tight": 0,
        "violations": [],
        "tight_pairs": [],
    }
    if nonmono:
        return out
    gulls = _find_seagulls(vals, triples)
    full = (1 << n) - 1
    masks = []
    for (a, b, c) in gulls:
        mask = (1 << a) | (1 << b) | (1 << c)
        masks.append(mask)
        out["claim2_checked"] += n - 3
        bad = adj[a] & adj[b] & adj[c] & ~mask & full
        while bad:
            bit = bad & -bad
            bad ^= bit
            out["violations"].append(("claim2", (a, b, c, bit.bit_length() - 1)))
    altfree = not _has_alternating_square(vals, quads)
    out["claim4_hypothesis"] = altfree
    if not altfree:
        return out
    m = len(gulls)
    for i in range(m):
        for j in range(i + 1, m):
            if masks[i] & masks[j]:
                continue
            out["claim4_checked"] += 1
            r = b = 0
            for x in gulls[i]:
                row = idx[x]
                for y in gulls[j]:
                    v = vals[row[y]]
                    if v == 1:
                        r += 1
                    elif v == 2:
                        b += 1
            if r + b > 6:
                out["violations"].append(("claim4_rb", gulls[i] + gulls[j]))
            elif r + b + max(r, b) > 9:
                out["violations"].append(("claim4_rbmax", gulls[i] + gulls[j]))
            elif r + b == 6:
                out["claim4_tight"] += 1
                out["tight_pairs"].append((gulls[i], gulls[j]))
    return out

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled sweep kernel; same contract as nmtri._kernel_py.

The depth-first walk, the incremental triangle counter and the
count-preserving prunes mirror the pure-Python twin line for line; the hot
recursion runs without the GIL so shards scale across threads, re-acquiring
it only for the rare event captures (counterexamples, qualifying vectors,
tight seagull pairs).
"""

from libc.stdlib cimport calloc, free

cdef enum:
    _THEOREM = 0
    _TIGHT = 1
    _LEMMA = 2
    _CONJ1 = 3
    _CONJ2 = 4
    _CLAIMS = 5

MODE_THEOREM = _THEOREM
MODE_TIGHT = _TIGHT
MODE_LEMMA = _LEMMA
MODE_CONJ1 = _CONJ1
MODE_CONJ2 = _CONJ2
MODE_CLAIMS = _CLAIMS

OPT_CONJ1_BINOMIAL = 1
OPT_CONJ2_WEAK = 2

_MODE_KS = {0: 2, 1: 2, 2: 1, 5: 2}


cdef class _Sweep:
    cdef int n, k, P, mode, opts, T, nn, kk1
    cdef bint prune, weak, conj1_binomial, conj2_weak, track_adj
    cdef bint need_k2, need_conj
    cdef unsigned char *vals
    cdef unsigned int *adj
    cdef int *pu
    cdef int *pv
    cdef int *pidx          # n*n pair index matrix
    cdef int *tri_e1        # flattened completion lists, row stride n
    cdef int *tri_e2
    cdef long long *pow_f   # (k+1)^f for f in 0..P
    cdef long long *binom   # (P+1) x (P+1)
    cdef long long cls[8]
    cdef long long E, nonmono
    cdef long long enumerated, premise_hits, conclusion_hits
    cdef long long claim2_checked, claim4_checked, claim4_tight
    # claims tables
    cdef int n3, n4
    cdef int *tri3          # 6 ints per triple: iab iac ibc a b c
    cdef int *quad          # 18 ints per quad: three pairings x 6 indexes
    cdef int *sg_a
    cdef int *sg_b
    cdef int *sg_c
    cdef unsigned int *sg_mask
    cdef object qualifying, counterexamples, tight_pairs

    def __cinit__(self, int mode, int n, int k, bint prune, int opts):
        cdef int u, v, w, p, q, a, b, c, d, f
        cdef long long dom
        if k < 1 or k >= 8 or n < 0 or n > 24:
            raise ValueError("kernel supports 1 <= k < 8 and n <= 24")
        self.mode = mode
        self.n = n
        self.k = k
        self.prune = prune
        self.opts = opts
        self.P = n * (n - 1) // 2
        self.T = self.P
        self.nn = n * n
        self.kk1 = k + 1
        dom = 1
        for p in range(self.P):
            if dom > (<long long>1 << 62) // self.kk1:
                raise ValueError("domain exceeds the kernel's counting range")
            dom *= self.kk1
        self.weak = mode == _TIGHT
        self.conj1_binomial = (opts & OPT_CONJ1_BINOMIAL) != 0
        self.conj2_weak = (opts & OPT_CONJ2_WEAK) != 0
        self.track_adj = mode == _LEMMA or mode == _CLAIMS or mode == -1
        self.need_k2 = mode == _THEOREM or mode == _TIGHT
        self.need_conj = mode == _CONJ1 or mode == _CONJ2

        self.vals = <unsigned char*>calloc(self.P + 1, 1)
        self.adj = <unsigned int*>calloc(n + 1, sizeof(unsigned int))
        self.pu = <int*>calloc(self.P + 1, sizeof(int))
        self.pv = <int*>calloc(self.P + 1, sizeof(int))
        self.pidx = <int*>calloc(n * n + 1, sizeof(int))
        self.tri_e1 = <int*>calloc(self.P * n + 1, sizeof(int))
        self.tri_e2 = <int*>calloc(self.P * n + 1, sizeof(int))
        self.pow_f = <long long*>calloc(self.P + 1, sizeof(long long))
        self.binom = <long long*>calloc((self.P + 1) * (self.P + 1),
                                        sizeof(long long))
        if (self.vals == NULL or self.adj == NULL or self.pu == NULL
                or self.pv == NULL or self.pidx == NULL or self.tri_e1 == NULL
                or self.tri_e2 == NULL or self.pow_f == NULL
                or self.binom == NULL):
            raise MemoryError()
        p = 0
        for u in range(n):
            for v in range(u + 1, n):
                self.pidx[u * n + v] = p
                self.pidx[v * n + u] = p
                self.pu[p] = u
                self.pv[p] = v
                p += 1
        for p in range(self.P):
            u = self.pu[p]
            v = self.pv[p]
            for w in range(u):
                self.tri_e1[p * n + w] = self.pidx[w * n + u]
                self.tri_e2[p * n + w] = self.pidx[w * n + v]
        self.pow_f[0] = 1
        for f in range(1, self.P + 1):
            self.pow_f[f] = self.pow_f[f - 1] * self.kk1
        for f in range(self.P + 1):
            self.binom[f * (self.P + 1)] = 1
            for q in range(1, f + 1):
                self.binom[f * (self.P + 1) + q] = (
                    self.binom[(f - 1) * (self.P + 1) + q - 1]
                    + (self.binom[(f - 1) * (self.P + 1) + q] if q <= f - 1 else 0))
        for q in range(8):
            self.cls[q] = 0
        self.E = 0
        self.nonmono = 0
        self.enumerated = 0
        self.premise_hits = 0
        self.conclusion_hits = 0
        self.claim2_checked = 0
        self.claim4_checked = 0
        self.claim4_tight = 0
        self.qualifying = []
        self.counterexamples = []
        self.tight_pairs = []

        self.n3 = 0
        self.n4 = 0
        self.tri3 = NULL
        self.quad = NULL
        self.sg_a = NULL
        self.sg_b = NULL
        self.sg_c = NULL
        self.sg_mask = NULL
        if mode == _CLAIMS or mode == -1:  # -1: standalone audit
            self.n3 = n * (n - 1) * (n - 2) // 6
            self.n4 = n * (n - 1) * (n - 2) * (n - 3) // 24
            self.tri3 = <int*>calloc(self.n3 * 6 + 1, sizeof(int))
            self.quad = <int*>calloc(self.n4 * 18 + 1, sizeof(int))
            self.sg_a = <int*>calloc(self.n3 + 1, sizeof(int))
            self.sg_b = <int*>calloc(self.n3 + 1, sizeof(int))
            self.sg_c = <int*>calloc(self.n3 + 1, sizeof(int))
            self.sg_mask = <unsigned int*>calloc(self.n3 + 1, sizeof(unsigned int))
            if (self.tri3 == NULL or self.quad == NULL or self.sg_a == NULL
                    or self.sg_b == NULL or self.sg_c == NULL
                    or self.sg_mask == NULL):
                raise MemoryError()
            q = 0
            for a in range(n):
                for b in range(a + 1, n):
                    for c in range(b + 1, n):
                        self.tri3[q * 6 + 0] = self.pidx[a * n + b]
                        self.tri3[q * 6 + 1] = self.pidx[a * n + c]
                        self.tri3[q * 6 + 2] = self.pidx[b * n + c]
                        self.tri3[q * 6 + 3] = a
                        self.tri3[q * 6 + 4] = b
                        self.tri3[q * 6 + 5] = c
                        q += 1
            q = 0
            for a in range(n):
                for b in range(a + 1, n):
                    for c in range(b + 1, n):
                        for d in range(c + 1, n):
                            self._fill_pairing(q, 0, a, b, c, d)
                            self._fill_pairing(q, 1, a, c, b, d)
                            self._fill_pairing(q, 2, a, d, b, c)
                            q += 1

    cdef void _fill_pairing(self, int q, int slot, int x1, int y1,
                            int x2, int y2):
        # Missing diagonal pairs {x1,y1}, {x2,y2}; cycle x1-x2-y1-y2-x1.
        cdef int n = self.n
        cdef int base = q * 18 + slot * 6
        self.quad[base + 0] = self.pidx[x1 * n + y1]
        self.quad[base + 1] = self.pidx[x2 * n + y2]
        self.quad[base + 2] = self.pidx[x1 * n + x2]
        self.quad[base + 3] = self.pidx[x2 * n + y1]
        self.quad[base + 4] = self.pidx[y1 * n + y2]
        self.quad[base + 5] = self.pidx[y2 * n + x1]

    def __dealloc__(self):
        free(self.vals)
        free(self.adj)
        free(self.pu)
        free(self.pv)
        free(self.pidx)
        free(self.tri_e1)
        free(self.tri_e2)
        free(self.pow_f)
        free(self.binom)
        free(self.tri3)
        free(self.quad)
        free(self.sg_a)
        free(self.sg_b)
        free(self.sg_c)
        free(self.sg_mask)

    cdef inline long long _bin(self, int f, int a) noexcept nogil:
        return self.binom[f * (self.P + 1) + a]

    cdef int assign(self, int p, int c) noexcept nogil:
        cdef int delta = 0, w, u, base
        cdef unsigned char c1, c2
        if c:
            self.cls[c] += 1
            self.E += 1
            u = self.pu[p]
            base = p * self.n
            for w in range(u):
                c1 = self.vals[self.tri_e1[base + w]]
                if c1:
                    c2 = self.vals[self.tri_e2[base + w]]
                    if c2 and not (c1 == c and c2 == c):
                        delta += 1
            if self.track_adj:
                self.adj[u] |= <unsigned int>1 << self.pv[p]
                self.adj[self.pv[p]] |= <unsigned int>1 << u
        self.vals[p] = <unsigned char>c
        self.nonmono += delta
        return delta

    cdef void unassign(self, int p, int c, int delta) noexcept nogil:
        cdef int u, v
        self.vals[p] = 0
        self.nonmono -= delta
        if c:
            self.cls[c] -= 1
            self.E -= 1
            if self.track_adj:
                u = self.pu[p]
                v = self.pv[p]
                self.adj[u] &= ~(<unsigned int>1 << v)
                self.adj[v] &= ~(<unsigned int>1 << u)

    cdef long long count_premise_k2(self, int f) noexcept nogil:
        cdef long long total = 0, E = self.E, r = self.cls[1], b = self.cls[2]
        cdef long long bound = self.T if self.weak else self.T + 1
        cdef int a, b2
        cdef long long mn
        for a in range(f + 1):
            for b2 in range(f - a + 1):
                mn = r + a if r + a < b + b2 else b + b2
                if E + a + b2 + mn >= bound:
                    total += self._bin(f, a) * self._bin(f - a, b2)
        return total

    cdef long long count_premise_conj(self, int f) noexcept nogil:
        return self._conj_rec(0, f, 1, 0, <long long>1 << 60, 0)

    cdef long long _conj_rec(self, int i, int left, long long weight,
                             int extra, long long minv, long long maxv) noexcept nogil:
        cdef long long total = 0, E, lhs, s
        cdef int a, c
        cdef bint ok
        if i == self.k:
            E = self.E + extra
            if self.mode == _CONJ1:
                lhs = 2 * E - maxv
                ok = lhs > self.T if self.conj1_binomial else 2 * lhs > self.nn
            else:
                if self.conj2_weak:
                    ok = (4 * self.k - 2) * minv >= self.nn
                else:
                    ok = (4 * self.k - 2) * minv > self.nn
            return weight if ok else 0
        for a in range(left + 1):
            s = self.cls[i + 1] + a
            total += self._conj_rec(
                i + 1, left - a, weight * self._bin(left, a), extra + a,
                minv if minv < s else s, maxv if maxv > s else s)
        return total

    cdef bint unreachable(self, int f) noexcept nogil:
        cdef long long r, b, best_min, top, mx, mn
        cdef int c
        if self.need_k2:
            r = self.cls[1]
            b = self.cls[2]
            best_min = (r + b + f) // 2
            if r + f < best_min:
                best_min = r + f
            if b + f < best_min:
                best_min = b + f
            top = self.E + f + best_min
            return top < self.T if self.weak else top <= self.T
        if self.mode == _LEMMA:
            return 3 * (self.E + f) < 2 * self.T
        if self.mode == _CONJ1:
            mx = 0
            for c in range(1, self.k + 1):
                if self.cls[c] > mx:
                    mx = self.cls[c]
            if self.conj1_binomial:
                return 2 * (self.E + f) - mx <= self.T
            return 4 * (self.E + f) - 2 * mx <= self.nn
        if self.mode == _CONJ2:
            mn = self.cls[1]
            for c in range(2, self.k + 1):
                if self.cls[c] < mn:
                    mn = self.cls[c]
            top = (4 * self.k - 2) * (mn + f)
            return top < self.nn if self.conj2_weak else top <= self.nn
        return False

    cdef void prune_subtree(self, int f) noexcept nogil:
        cdef long long c
        self.enumerated += self.pow_f[f]
        if self.need_k2:
            c = self.count_premise_k2(f)
            self.premise_hits += c
            self.conclusion_hits += c
        elif self.need_conj:
            c = self.count_premise_conj(f)
            self.premise_hits += c
            self.conclusion_hits += c

    # -- lemma leaf ---------------------------------------------------------

    cdef long long _alpha_of_mask(self, unsigned int mask) noexcept nogil:
        cdef long long best = 0, pc
        cdef unsigned int sub = mask, m, b
        cdef bint ok
        while True:
            m = sub
            ok = True
            while m:
                b = m & (~m + 1)
                m ^= b
                if self.adj[_bit_index(b)] & sub:
                    ok = False
                    break
            if ok:
                pc = _popcount(sub)
                if pc > best:
                    best = pc
            if sub == 0:
                return best
            sub = (sub - 1) & mask

    cdef bint lemma_holds(self) noexcept nogil:
        cdef unsigned int seen = 0, mask, frontier, nxt, m, b, best_mask = 0
        cdef unsigned int full = (<unsigned int>1 << self.n) - 1
        cdef int v0, size, best_size = 0
        for v0 in range(self.n):
            if seen & (<unsigned int>1 << v0):
                continue
            mask = 0
            frontier = <unsigned int>1 << v0
            while frontier:
                mask |= frontier
                nxt = 0
                m = frontier
                while m:
                    b = m & (~m + 1)
                    m ^= b
                    nxt |= self.adj[_bit_index(b)]
                frontier = nxt & ~mask
            seen |= mask
            size = _popcount(mask)
            if size > best_size:
                best_mask = mask
                best_size = size
            if seen == full:
                break
        if 3 * best_size <= 2 * self.n:
            return False
        return self._alpha_of_mask(best_mask) + 1 <= 2 * best_size - self.n

    # -- claims leaf ---------------------------------------------------------

    cdef bint has_alternating_square(self) noexcept nogil:
        cdef int q, slot, base
        cdef unsigned char c1, c2
        for q in range(self.n4):
            for slot in range(3):
                base = q * 18 + slot * 6
                if self.vals[self.quad[base]] == 0 and \
                        self.vals[self.quad[base + 1]] == 0:
                    c1 = self.vals[self.quad[base + 2]]
                    if c1 == 0 or self.vals[self.quad[base + 4]] != c1:
                        continue
                    c2 = self.vals[self.quad[base + 3]]
                    if c2 == 0 or c2 == c1 or self.vals[self.quad[base + 5]] != c2:
                        continue
                    return True
        return False

    cdef void audit_claims_leaf(self) noexcept nogil:
        cdef int q, ngull = 0, i, j, a, b, c, x, y, r, bb, mx
        cdef unsigned char cab, cac, cbc, e1, e2, v
        cdef unsigned int mask, full = (<unsigned int>1 << self.n) - 1
        cdef bint violated = False
        self.premise_hits += 1
        for q in range(self.n3):
            cab = self.vals[self.tri3[q * 6]]
            cac = self.vals[self.tri3[q * 6 + 1]]
            cbc = self.vals[self.tri3[q * 6 + 2]]
            if (cab != 0) + (cac != 0) + (cbc != 0) != 2:
                continue
            if cab == 0:
                e1, e2 = cac, cbc
            elif cac == 0:
                e1, e2 = cab, cbc
            else:
                e1, e2 = cab, cac
            if e1 == e2:
                continue
            a = self.tri3[q * 6 + 3]
            b = self.tri3[q * 6 + 4]
            c = self.tri3[q * 6 + 5]
            self.sg_a[ngull] = a
            self.sg_b[ngull] = b
            self.sg_c[ngull] = c
            mask = (<unsigned int>1 << a) | (<unsigned int>1 << b) | \
                   (<unsigned int>1 << c)
            self.sg_mask[ngull] = mask
            ngull += 1
            self.claim2_checked += self.n - 3
            if self.adj[a] & self.adj[b] & self.adj[c] & ~mask & full:
                violated = True
        if not self.has_alternating_square():
            for i in range(ngull):
                for j in range(i + 1, ngull):
                    if self.sg_mask[i] & self.sg_mask[j]:
                        continue
                    self.claim4_checked += 1
                    r = 0
                    bb = 0
                    for x in range(3):
                        a = self.sg_a[i] if x == 0 else (
                            self.sg_b[i] if x == 1 else self.sg_c[i])
                        for y in range(3):
                            b = self.sg_a[j] if y == 0 else (
                                self.sg_b[j] if y == 1 else self.sg_c[j])
                            v = self.vals[self.pidx[a * self.n + b]]
                            if v == 1:
                                r += 1
                            elif v == 2:
                                bb += 1
                    mx = r if r > bb else bb
                    if r + bb > 6 or r + bb + mx > 9:
                        violated = True
                    elif r + bb == 6:
                        self.claim4_tight += 1
                        with gil:
                            self.tight_pairs.append((
                                self.vals[:self.P],
                                (self.sg_a[i], self.sg_b[i], self.sg_c[i]),
                                (self.sg_a[j], self.sg_b[j], self.sg_c[j])))
        if violated:
            with gil:
                self.counterexamples.append(self.vals[:self.P])
        else:
            self.conclusion_hits += 1

    # -- leaf dispatch --------------------------------------------------------

    cdef void leaf(self) noexcept nogil:
        cdef long long E, mn, mx, lhs, fac
        cdef int c
        cdef bint hit
        self.enumerated += 1
        if self.mode == _THEOREM or self.mode == _TIGHT:
            E = self.E
            mn = self.cls[1] if self.cls[1] < self.cls[2] else self.cls[2]
            hit = E + mn >= (self.T if self.weak else self.T + 1)
            if hit:
                self.premise_hits += 1
                if self.nonmono > 0:
                    self.conclusion_hits += 1
                elif self.mode == _THEOREM:
                    with gil:
                        self.counterexamples.append(self.vals[:self.P])
                else:
                    with gil:
                        self.qualifying.append(self.vals[:self.P])
        elif self.mode == _LEMMA:
            if 3 * self.E >= 2 * self.T:
                self.premise_hits += 1
                if self.lemma_holds():
                    self.conclusion_hits += 1
                else:
                    with gil:
                        self.counterexamples.append(self.vals[:self.P])
        elif self.mode == _CONJ1 or self.mode == _CONJ2:
            if self.mode == _CONJ1:
                mx = 0
                for c in range(1, self.k + 1):
                    if self.cls[c] > mx:
                        mx = self.cls[c]
                lhs = 2 * self.E - mx
                hit = lhs > self.T if self.conj1_binomial else 2 * lhs > self.nn
            else:
                fac = 4 * self.k - 2
                hit = True
                for c in range(1, self.k + 1):
                    if self.conj2_weak:
                        if fac * self.cls[c] < self.nn:
                            hit = False
                            break
                    else:
                        if fac * self.cls[c] <= self.nn:
                            hit = False
                            break
            if hit:
                self.premise_hits += 1
                if self.nonmono > 0:
                    self.conclusion_hits += 1
                else:
                    with gil:
                        self.counterexamples.append(self.vals[:self.P])
        else:
            if self.nonmono == 0:
                self.audit_claims_leaf()

    cdef void dfs(self, int p) noexcept nogil:
        cdef int c, delta, f = self.P - 1 - p
        cdef bint last = p == self.P - 1
        for c in range(self.kk1):
            delta = self.assign(p, c)
            if self.prune and self.nonmono > 0:
                self.prune_subtree(f)
            elif self.prune and self.unreachable(f):
                self.enumerated += self.pow_f[f]
            elif last:
                self.leaf()
            else:
                self.dfs(p + 1)
            self.unassign(p, c, delta)

    def result(self) -> dict:
        return {
            "enumerated": self.enumerated,
            "premise_hits": self.premise_hits,
            "conclusion_hits": self.conclusion_hits,
            "qualifying": self.qualifying,
            "counterexamples": self.counterexamples,
            "claim2_checked": self.claim2_checked,
            "claim4_checked": self.claim4_checked,
            "claim4_tight": self.claim4_tight,
            "tight_pairs": self.tight_pairs,
        }


cdef inline int _popcount(unsigned int x) noexcept nogil:
    cdef int count = 0
    while x:
        x &= x - 1
        count += 1
    return count


cdef inline int _bit_index(unsigned int b) noexcept nogil:
    cdef int i = 0
    while b > 1:
        b >>= 1
        i += 1
    return i


def run(int mode, int n, int k, prefix: bytes = b"", prune: bool = True,
        opts: int = 0) -> dict:
    """Sweep all completions of ``prefix`` and tally the mode's counts."""
    forced = _MODE_KS.get(mode)
    if forced is not None and k != forced:
        raise ValueError(f"mode {mode} requires k={forced}, got {k}")
    if mode < 0 or mode > 5:
        raise ValueError(f"unknown mode {mode}")
    cdef _Sweep sw = _Sweep(mode, n, k, prune, opts)
    if len(prefix) > sw.P:
        raise ValueError("prefix longer than the pair vector")
    cdef int p, c, t, f
    for p in range(len(prefix)):
        c = prefix[p]
        if c > k:
            raise ValueError("prefix value out of range")
        sw.assign(p, c)
    t = len(prefix)
    f = sw.P - t
    if prune and sw.nonmono > 0:
        sw.prune_subtree(f)
    elif prune and sw.unreachable(f):
        sw.enumerated += sw.pow_f[f]
    elif t == sw.P:
        sw.leaf()
    else:
        with nogil:
            sw.dfs(t)
    return sw.result()


def audit_one(int n, vals: bytes) -> dict:
    """Run the claims audit on a single two-color pair vector."""
    cdef _Sweep sw = _Sweep(-1, n, 2, True, 0)
    if len(vals) != sw.P:
        raise ValueError(f"expected {sw.P} pair values, got {len(vals)}")
    cdef int p
    for p in range(sw.P):
        sw.assign(p, vals[p])

    out = {
        "claim2_hypothesis": sw.nonmono == 0,
        "claim4_hypothesis": False,
        "claim2_checked": 0,
        "claim4_checked": 0,
        "claim4_tight": 0,
        "violations": [],
        "tight_pairs": [],
    }
    if sw.nonmono:
        return out
    cdef int q, ngull = 0, i, j, a, b, c, x, y, r, bb
    cdef unsigned char cab, cac, cbc, e1, e2, v
    cdef unsigned int mask, bad, bit
    cdef unsigned int full = (<unsigned int>1 << n) - 1
    for q in range(sw.n3):
        cab = sw.vals[sw.tri3[q * 6]]
        cac = sw.vals[sw.tri3[q * 6 + 1]]
        cbc = sw.vals[sw.tri3[q * 6 + 2]]
        if (cab != 0) + (cac != 0) + (cbc != 0) != 2:
            continue
        if cab == 0:
            e1, e2 = cac, cbc
        elif cac == 0:
            e1, e2 = cab, cbc
        else:
            e1, e2 = cab, cac
        if e1 == e2:
            continue
        a = sw.tri3[q * 6 + 3]
        b = sw.tri3[q * 6 + 4]
        c = sw.tri3[q * 6 + 5]
        sw.sg_a[ngull] = a
        sw.sg_b[ngull] = b
        sw.sg_c[ngull] = c
        mask = (<unsigned int>1 << a) | (<unsigned int>1 << b) | \
               (<unsigned int>1 << c)
        sw.sg_mask[ngull] = mask
        ngull += 1
        out["claim2_checked"] += n - 3
        bad = sw.adj[a] & sw.adj[b] & sw.adj[c] & ~mask & full
        while bad:
            bit = bad & (~bad + 1)
            bad ^= bit
            out["violations"].append(("claim2", (a, b, c, _bit_index(bit))))
    altfree = not sw.has_alternating_square()
    out["claim4_hypothesis"] = altfree
    if not altfree:
        return out
    for i in range(ngull):
        for j in range(i + 1, ngull):
            if sw.sg_mask[i] & sw.sg_mask[j]:
                continue
            out["claim4_checked"] += 1
            r = 0
            bb = 0
            for x in range(3):
                a = sw.sg_a[i] if x == 0 else (sw.sg_b[i] if x == 1 else sw.sg_c[i])
                for y in range(3):
                    b = sw.sg_a[j] if y == 0 else (sw.sg_b[j] if y == 1 else sw.sg_c[j])
                    v = sw.vals[sw.pidx[a * n + b]]
                    if v == 1:
                        r += 1
                    elif v == 2:
                        bb += 1
            g1 = (sw.sg_a[i], sw.sg_b[i], sw.sg_c[i])
            g2 = (sw.sg_a[j], sw.sg_b[j], sw.sg_c[j])
            if r + bb > 6:
                out["violations"].append(("claim4_rb", g1 + g2))
            elif r + bb + (r if r > bb else bb) > 9:
                out["violations"].append(("claim4_rbmax", g1 + g2))
            elif r + bb == 6:
                out["claim4_tight"] += 1
                out["tight_pairs"].append((g1, g2))
    return out

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the search kernels in ``_pykernels``.

Bitsets are fixed-width structs of ``MAXW`` 64-bit words, so graphs are
limited to ``MAX_VERTICES`` vertices; the dispatcher in ``kernels`` falls
back to the Python versions above that.  Search order matches the Python
code bit for bit, so both return identical witnesses.
"""

from libc.stdint cimport uint64_t

from .errors import BudgetExceeded

cdef extern from *:
    """
    static inline int sl_popcount(unsigned long long x) { return __builtin_popcountll(x); }
    static inline int sl_ctz(unsigned long long x) { return __builtin_ctzll(x); }
    """
    int sl_popcount(unsigned long long x) nogil
    int sl_ctz(unsigned long long x) nogil

cdef enum:
    MAXW = 4
    MAXN = 256

MAX_VERTICES = MAXN

ctypedef struct bs:
    uint64_t w[MAXW]


cdef inline bs bs_zero() noexcept nogil:
    cdef bs r
    cdef int k
    for k in range(MAXW):
        r.w[k] = 0
    return r


cdef inline bs bs_and(bs a, bs b, int nw) noexcept nogil:
    cdef int k
    for k in range(nw):
        a.w[k] &= b.w[k]
    return a


cdef inline bs bs_andnot(bs a, bs b, int nw) noexcept nogil:
    cdef int k
    for k in range(nw):
        a.w[k] &= ~b.w[k]
    return a


cdef inline bs bs_or(bs a, bs b, int nw) noexcept nogil:
    cdef int k
    for k in range(nw):
        a.w[k] |= b.w[k]
    return a


cdef inline int bs_count(bs* a, int nw) noexcept nogil:
    cdef int k, c = 0
    for k in range(nw):
        c += sl_popcount(a.w[k])
    return c


cdef inline bint bs_empty(bs* a, int nw) noexcept nogil:
    cdef int k
    for k in range(nw):
        if a.w[k]:
            return False
    return True


cdef inline int bs_lowest(bs* a, int nw) noexcept nogil:
    cdef int k
    for k in range(nw):
        if a.w[k]:
            return k * 64 + sl_ctz(a.w[k])
    return -1


cdef inline void bs_set(bs* a, int v) noexcept nogil:
    a.w[v >> 6] |= (<uint64_t>1) << (v & 63)


cdef inline void bs_clear(bs* a, int v) noexcept nogil:
    a.w[v >> 6] &= ~((<uint64_t>1) << (v & 63))


cdef inline bint bs_has(bs* a, int v) noexcept nogil:
    return (a.w[v >> 6] >> (v & 63)) & 1


cdef inline bs bs_single(int v) noexcept nogil:
    cdef bs r = bs_zero()
    bs_set(&r, v)
    return r


cdef bs to_bs(object mask, int nw):
    cdef bs r = bs_zero()
    cdef int k
    m = int(mask)
    for k in range(nw):
        r.w[k] = <uint64_t>(m & 0xFFFFFFFFFFFFFFFF)
        m >>= 64
    return r


cdef object from_bs(bs* a, int nw):
    out = 0
    cdef int k
    for k in range(nw - 1, -1, -1):
        out = (out << 64) | <object>a.w[k]
    return out


cdef int words_for(int n) except -1:
    if n > MAXN:
        raise ValueError(f"compiled kernels support at most {MAXN} vertices")
    return max(1, (n + 63) // 64)


# -- maximum independent set -------------------------------------------------

ctypedef struct MisCtx:
    int nw
    long long nodes
    long long budget
    bint over
    int best
    int stop_at
    bs best_set
    bs adj[MAXN]


cdef bint cover_exceeds(MisCtx* c, bs p, int limit) noexcept nogil:
    cdef int count = 0
    cdef int v, u
    cdef bs cand
    while not bs_empty(&p, c.nw):
        count += 1
        if count > limit:
            return True
        v = bs_lowest(&p, c.nw)
        bs_clear(&p, v)
        cand = bs_and(p, c.adj[v], c.nw)
        while not bs_empty(&cand, c.nw):
            u = bs_lowest(&cand, c.nw)
            bs_clear(&p, u)
            cand = bs_and(cand, c.adj[u], c.nw)
    return False


cdef bint mis_rec(MisCtx* c, bs p, int size, bs chosen) noexcept nogil:
    cdef int pick, maxdeg, maxv, d, k, v
    cdef uint64_t x
    cdef bs tmp, inc, chosen2
    c.nodes += 1
    if c.nodes > c.budget:
        c.over = True
        return True
    while not bs_empty(&p, c.nw):
        pick = -1
        maxdeg = -1
        maxv = -1
        for k in range(c.nw):
            x = p.w[k]
            while x:
                v = k * 64 + sl_ctz(x)
                x &= x - 1
                tmp = bs_and(c.adj[v], p, c.nw)
                d = bs_count(&tmp, c.nw)
                if d <= 1:
                    pick = v
                    break
                if d > maxdeg:
                    maxdeg = d
                    maxv = v
            if pick >= 0:
                break
        if pick < 0:
            break
        bs_set(&chosen, pick)
        size += 1
        bs_clear(&p, pick)
        p = bs_andnot(p, c.adj[pick], c.nw)
    if bs_empty(&p, c.nw):
        if size > c.best:
            c.best = size
            c.best_set = chosen
        return size >= c.stop_at
    if not cover_exceeds(c, p, c.best - size):
        return False
    inc = bs_andnot(p, c.adj[maxv], c.nw)
    bs_clear(&inc, maxv)
    chosen2 = chosen
    bs_set(&chosen2, maxv)
    if mis_rec(c, inc, size + 1, chosen2):
        return True
    bs_clear(&p, maxv)
    return mis_rec(c, p, size, chosen)


def mis_search(adj, cand, int floor, int stop_at, long long budget):
    cdef int n = len(adj)
    cdef int nw = words_for(n)
    cdef MisCtx* c
    cdef MisCtx ctx
    cdef int i
    c = &ctx
    c.nw = nw
    c.nodes = 0
    c.budget = budget
    c.over = False
    c.best = floor
    c.stop_at = stop_at
    c.best_set = bs_zero()
    for i in range(n):
        c.adj[i] = to_bs(adj[i], nw)
    cdef bs p = to_bs(cand, nw)
    with nogil:
        mis_rec(c, p, 0, bs_zero())
    if c.over:
        raise BudgetExceeded(c.nodes, "independent set")
    if c.best == floor:
        return floor, -1, c.nodes
    return c.best, from_bs(&c.best_set, nw), c.nodes


# -- minimum dominating set --------------------------------------------------

ctypedef struct DsCtx:
    int n
    int nw
    long long nodes
    long long budget
    bint over
    int best
    bs best_set
    bs closed[MAXN]


cdef void ds_rec(DsCtx* c, bs u, bs allow, int size, bs chosen) noexcept nogil:
    cdef int room, maxcov, cnt, need, fewest, k, v, i, j, m, key
    cdef uint64_t x
    cdef bs tmp, target_opts
    cdef int order_v[MAXN]
    cdef int order_k[MAXN]
    c.nodes += 1
    if c.nodes > c.budget:
        c.over = True
        return
    if bs_empty(&u, c.nw):
        if size < c.best:
            c.best = size
            c.best_set = chosen
        return
    room = c.best - 1 - size
    if room <= 0:
        return
    maxcov = 0
    for k in range(c.nw):
        x = allow.w[k]
        while x:
            v = k * 64 + sl_ctz(x)
            x &= x - 1
            tmp = bs_and(c.closed[v], u, c.nw)
            cnt = bs_count(&tmp, c.nw)
            if cnt > maxcov:
                maxcov = cnt
    if maxcov == 0:
        return
    cnt = bs_count(&u, c.nw)
    need = (cnt + maxcov - 1) // maxcov
    if need > room:
        return
    fewest = c.n + 1
    target_opts = bs_zero()
    for k in range(c.nw):
        x = u.w[k]
        while x:
            v = k * 64 + sl_ctz(x)
            x &= x - 1
            tmp = bs_and(c.closed[v], allow, c.nw)
            cnt = bs_count(&tmp, c.nw)
            if cnt < fewest:
                fewest = cnt
                target_opts = tmp
                if cnt <= 1:
                    break
        if fewest <= 1:
            break
    if fewest == 0:
        return
    # order options by coverage (descending), then label
    m = 0
    for k in range(c.nw):
        x = target_opts.w[k]
        while x:
            v = k * 64 + sl_ctz(x)
            x &= x - 1
            tmp = bs_and(c.closed[v], u, c.nw)
            key = -bs_count(&tmp, c.nw)
            j = m
            while j > 0 and (order_k[j - 1] > key or (order_k[j - 1] == key and order_v[j - 1] > v)):
                order_k[j] = order_k[j - 1]
                order_v[j] = order_v[j - 1]
                j -= 1
            order_k[j] = key
            order_v[j] = v
            m += 1
    for i in range(m):
        v = order_v[i]
        tmp = allow
        bs_clear(&tmp, v)
        target_opts = chosen
        bs_set(&target_opts, v)
        ds_rec(c, bs_andnot(u, c.closed[v], c.nw), tmp, size + 1, target_opts)
        if c.over:
            return
        bs_clear(&allow, v)
        if c.best - 1 - size <= 0:
            return


def ds_search(closed, universe, allowed, int limit, long long budget):
    cdef int n = len(closed)
    cdef int nw = words_for(n)
    cdef DsCtx ctx
    cdef DsCtx* c = &ctx
    cdef int i
    c.n = n
    c.nw = nw
    c.nodes = 0
    c.budget = budget
    c.over = False
    c.best = limit + 1
    c.best_set = bs_zero()
    for i in range(n):
        c.closed[i] = to_bs(closed[i], nw)
    cdef bs u = to_bs(universe, nw)
    cdef bs a = to_bs(allowed, nw)
    with nogil:
        ds_rec(c, u, a, 0, bs_zero())
    if c.over:
        raise BudgetExceeded(c.nodes, "dominating set")
    if c.best == limit + 1:
        return limit + 1, -1, c.nodes
    return c.best, from_bs(&c.best_set, nw), c.nodes


# -- semi-induced patterns ---------------------------------------------------

ctypedef struct PatCtx:
    int nw
    int h
    int kind
    long long nodes
    int a_list[MAXN]
    int b_list[MAXN]
    bs adj[MAXN]


cdef bint half_rec(PatCtx* c, int i, bs used, bs ca, bs cb) noexcept nogil:
    cdef int left, ai, bi, k, kb
    cdef uint64_t x, y
    cdef bs used_a, cb2, used_ab, ca2, qa, tmp
    c.nodes += 1
    if i == c.h:
        return True
    left = c.h - i
    qa = bs_andnot(ca, used, c.nw)
    for k in range(c.nw):
        x = qa.w[k]
        while x:
            ai = k * 64 + sl_ctz(x)
            x &= x - 1
            used_a = used
            bs_set(&used_a, ai)
            cb2 = bs_andnot(bs_and(cb, c.adj[ai], c.nw), used_a, c.nw)
            if bs_count(&cb2, c.nw) < left:
                continue
            tmp = bs_andnot(ca, used_a, c.nw)
            if bs_count(&tmp, c.nw) < left - 1:
                return False
            for kb in range(c.nw):
                y = cb2.w[kb]
                while y:
                    bi = kb * 64 + sl_ctz(y)
                    y &= y - 1
                    used_ab = used_a
                    bs_set(&used_ab, bi)
                    ca2 = bs_andnot(bs_andnot(ca, c.adj[bi], c.nw), used_ab, c.nw)
                    if bs_count(&ca2, c.nw) < left - 1:
                        continue
                    tmp = cb2
                    bs_clear(&tmp, bi)
                    if bs_count(&tmp, c.nw) < left - 1:
                        continue
                    c.a_list[i] = ai
                    c.b_list[i] = bi
                    if half_rec(c, i + 1, used_ab, ca2, tmp):
                        return True
    return False


cdef bint match_rec(PatCtx* c, int i, bs used, bs ca, bs cb, bs floor_b) noexcept nogil:
    cdef int left, ai, bi, k, kb, j
    cdef uint64_t x, y
    cdef bs qa, fb, later_b, ca_rest, qb, used2, ca2, cb2, nai, nbi
    cdef bint comat = c.kind == 1
    c.nodes += 1
    if i == c.h:
        return True
    left = c.h - i
    qa = bs_andnot(ca, used, c.nw)
    for k in range(c.nw):
        x = qa.w[k]
        while x:
            ai = k * 64 + sl_ctz(x)
            x &= x - 1
            bs_clear(&qa, ai)
            if i:
                fb = floor_b
            else:
                fb = bs_zero()
                for j in range(c.nw):
                    fb.w[j] = 0xFFFFFFFFFFFFFFFF
                for j in range(ai + 1):
                    bs_clear(&fb, j)
            nai = c.adj[ai]
            if comat:
                later_b = bs_andnot(cb, nai, c.nw)
            else:
                later_b = bs_and(cb, nai, c.nw)
            ca_rest = bs_andnot(qa, used, c.nw)
            if bs_count(&ca_rest, c.nw) < left - 1:
                return False
            qb = bs_andnot(bs_and(later_b, fb, c.nw), used, c.nw)
            bs_clear(&qb, ai)
            for kb in range(c.nw):
                y = qb.w[kb]
                while y:
                    bi = kb * 64 + sl_ctz(y)
                    y &= y - 1
                    nbi = c.adj[bi]
                    used2 = used
                    bs_set(&used2, ai)
                    bs_set(&used2, bi)
                    if comat:
                        ca2 = bs_and(ca_rest, nbi, c.nw)
                        cb2 = bs_andnot(bs_and(bs_and(cb, nai, c.nw), fb, c.nw), used2, c.nw)
                    else:
                        ca2 = bs_andnot(ca_rest, nbi, c.nw)
                        cb2 = bs_andnot(bs_and(bs_andnot(cb, nai, c.nw), fb, c.nw), used2, c.nw)
                    bs_clear(&ca2, bi)
                    if bs_count(&ca2, c.nw) < left - 1 or bs_count(&cb2, c.nw) < left - 1:
                        continue
                    c.a_list[i] = ai
                    c.b_list[i] = bi
                    if match_rec(c, i + 1, used2, ca2, cb2, fb):
                        return True
    return False


def semi_induced_search(adj, int n, int kind, int h):
    cdef int nw = words_for(n)
    cdef PatCtx ctx
    cdef PatCtx* c = &ctx
    cdef int i
    cdef bint found
    if h > MAXN:
        return None, None, 0
    c.nw = nw
    c.h = h
    c.kind = kind
    c.nodes = 0
    for i in range(n):
        c.adj[i] = to_bs(adj[i], nw)
    cdef bs full = bs_zero()
    for i in range(n):
        bs_set(&full, i)
    with nogil:
        if kind == 2:
            found = half_rec(c, 0, bs_zero(), full, full)
        else:
            found = match_rec(c, 0, bs_zero(), full, full, full)
    if found:
        return [c.a_list[i] for i in range(h)], [c.b_list[i] for i in range(h)], c.nodes
    return None, None, c.nodes

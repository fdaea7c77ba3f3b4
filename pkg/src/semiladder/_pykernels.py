"""Pure-Python search kernels over bitset adjacency.

All functions take ``adj`` as a list of ints where bit ``j`` of ``adj[i]``
marks edge ``ij`` (0-based), and return plain Python data.  The compiled
module ``_ckernels`` exposes the same functions with the same results.
"""

from __future__ import annotations

from .errors import BudgetExceeded

KIND_MATCHING = 0
KIND_COMATCHING = 1
KIND_HALFGRAPH = 2


def _clique_cover_exceeds(adj, p: int, limit: int) -> bool:
    """True iff a greedy clique partition of ``p`` needs more than ``limit``
    cliques.  The partition size bounds the independence number of G[p]."""
    count = 0
    rest = p
    while rest:
        count += 1
        if count > limit:
            return True
        low = rest & -rest
        rest ^= low
        cand = rest & adj[low.bit_length() - 1]
        while cand:
            u = cand & -cand
            rest ^= u
            cand &= adj[u.bit_length() - 1]
    return False


def mis_search(adj, cand: int, floor: int, stop_at: int, budget: int):
    """Largest independent set inside ``cand`` with more than ``floor``
    vertices.  Stops as soon as one of size ``stop_at`` is found.

    Returns ``(size, mask, nodes)``; ``mask`` is -1 when nothing beats
    ``floor``.
    """
    best = [floor, -1]
    nodes = [0]

    def rec(p: int, size: int, chosen: int) -> bool:
        nodes[0] += 1
        if nodes[0] > budget:
            raise BudgetExceeded(nodes[0], "independent set")
        # absorb isolated and degree-1 vertices; both are in some optimum
        while p:
            pick = 0
            maxdeg = -1
            maxv = 0
            q = p
            while q:
                low = q & -q
                q ^= low
                d = (adj[low.bit_length() - 1] & p).bit_count()
                if d <= 1:
                    pick = low
                    break
                if d > maxdeg:
                    maxdeg = d
                    maxv = low
            if not pick:
                break
            chosen |= pick
            size += 1
            p &= ~(pick | adj[pick.bit_length() - 1])
        if not p:
            if size > best[0]:
                best[0] = size
                best[1] = chosen
            return size >= stop_at
        if not _clique_cover_exceeds(adj, p, best[0] - size):
            return False
        v = maxv.bit_length() - 1
        if rec(p & ~(maxv | adj[v]), size + 1, chosen | maxv):
            return True
        return rec(p & ~maxv, size, chosen)

    rec(cand, 0, 0)
    return best[0], best[1], nodes[0]


def ds_search(closed, universe: int, allowed: int, limit: int, budget: int):
    """Smallest set ``S`` of allowed vertices whose closed neighborhoods
    cover ``universe``, provided ``|S| <= limit``.

    ``closed[i]`` is the closed-neighborhood mask of vertex ``i``.  Returns
    ``(size, mask, nodes)`` with ``mask == -1`` if no cover fits the limit.
    """
    n = len(closed)
    best = [limit + 1, -1]
    nodes = [0]

    def rec(u: int, allow: int, size: int, chosen: int) -> None:
        nodes[0] += 1
        if nodes[0] > budget:
            raise BudgetExceeded(nodes[0], "dominating set")
        if not u:
            if size < best[0]:
                best[0] = size
                best[1] = chosen
            return
        room = best[0] - 1 - size
        if room <= 0:
            return
        # lower bound: undominated count over the best single coverage
        maxcov = 0
        q = allow
        while q:
            low = q & -q
            q ^= low
            c = (closed[low.bit_length() - 1] & u).bit_count()
            if c > maxcov:
                maxcov = c
        if maxcov == 0:
            return
        need = -(-u.bit_count() // maxcov)
        if need > room:
            return
        # branch on the undominated vertex with fewest available dominators
        target_opts = 0
        fewest = n + 1
        q = u
        while q:
            low = q & -q
            q ^= low
            opts = closed[low.bit_length() - 1] & allow
            c = opts.bit_count()
            if c < fewest:
                fewest = c
                target_opts = opts
                if c <= 1:
                    break
        if fewest == 0:
            return
        order = []
        q = target_opts
        while q:
            low = q & -q
            q ^= low
            i = low.bit_length() - 1
            order.append((-(closed[i] & u).bit_count(), i))
        order.sort()
        for _, i in order:
            bit = 1 << i
            rec(u & ~closed[i], allow & ~bit, size + 1, chosen | bit)
            allow &= ~bit
            if best[0] - 1 - size <= 0:
                return

    rec(universe, allowed, 0, 0)
    return best[0], best[1], nodes[0]


def semi_induced_search(adj, n: int, kind: int, h: int):
    """First semi-induced pattern of order ``h`` in search order.

    Pairs ``(a_i, b_i)`` are fixed in turn.  For matchings and co-matchings
    the pairs are ordered by increasing ``a_i`` and every ``b`` exceeds
    ``a_1`` (both are symmetries of those patterns).  Returns
    ``(a_list, b_list, nodes)`` or ``(None, None, nodes)``.
    """
    full = (1 << n) - 1
    a_list = [0] * h
    b_list = [0] * h
    nodes = [0]

    if kind == KIND_HALFGRAPH:
        # ca: allowed for every later a (non-adjacent to all chosen b)
        # cb: allowed for every later b (adjacent to all chosen a)
        def rec(i: int, used: int, ca: int, cb: int) -> bool:
            nodes[0] += 1
            if i == h:
                return True
            left = h - i
            qa = ca & ~used
            while qa:
                abit = qa & -qa
                qa ^= abit
                ai = abit.bit_length() - 1
                used_a = used | abit
                cb2 = cb & adj[ai] & ~used_a
                if cb2.bit_count() < left:
                    continue
                if (ca & ~used_a).bit_count() < left - 1:
                    break
                qb = cb2
                while qb:
                    bbit = qb & -qb
                    qb ^= bbit
                    bi = bbit.bit_length() - 1
                    used_ab = used_a | bbit
                    ca2 = ca & ~adj[bi] & ~used_ab
                    if ca2.bit_count() < left - 1:
                        continue
                    if (cb2 & ~bbit).bit_count() < left - 1:
                        continue
                    a_list[i] = ai
                    b_list[i] = bi
                    if rec(i + 1, used_ab, ca2, cb2 & ~bbit):
                        return True
            return False

        found = rec(0, 0, full, full)
    else:
        comat = kind == KIND_COMATCHING

        # ca/cb: candidates for later a / b given all earlier choices
        def rec(i: int, used: int, ca: int, cb: int, floor_b: int) -> bool:
            nodes[0] += 1
            if i == h:
                return True
            left = h - i
            qa = ca & ~used
            while qa:
                abit = qa & -qa
                qa ^= abit
                ai = abit.bit_length() - 1
                fb = floor_b if i else ~((abit << 1) - 1)
                nai = adj[ai]
                later_b = cb & ~nai if comat else cb & nai
                ca_rest = qa & ~used
                if ca_rest.bit_count() < left - 1:
                    break
                qb = later_b & fb & ~used & ~abit
                while qb:
                    bbit = qb & -qb
                    qb ^= bbit
                    bi = bbit.bit_length() - 1
                    nbi = adj[bi]
                    used2 = used | abit | bbit
                    if comat:
                        # later a: adjacent to b_i; later b: adjacent to a_i
                        ca2 = ca_rest & nbi & ~bbit
                        cb2 = cb & nai & fb & ~used2
                    else:
                        ca2 = ca_rest & ~nbi & ~bbit
                        cb2 = cb & ~nai & fb & ~used2
                    if ca2.bit_count() < left - 1 or cb2.bit_count() < left - 1:
                        continue
                    a_list[i] = ai
                    b_list[i] = bi
                    if rec(i + 1, used2, ca2, cb2, fb):
                        return True
            return False

        found = rec(0, 0, full, full, full)

    if found:
        return list(a_list), list(b_list), nodes[0]
    return None, None, nodes[0]

"""Branching approximation for Independent Set whose depth is bounded by the
half-graph index.

For an edge ``uv`` the graph ``G[N(v) \\ N[u]]`` has strictly smaller
half-graph index than ``G``, so recursing into these graphs terminates
after at most ``h`` levels and the best of the greedy set and the
branches has size at least ``alpha ** (1 / h)``.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

from .graph import Graph, bits


def _greedy(adj, mask: int) -> int:
    chosen = 0
    avail = mask
    while avail:
        low = avail & -avail
        v = low.bit_length() - 1
        chosen |= low
        avail &= ~adj[v] & ~low
    return chosen


def greedy_maximal_is(g: Graph) -> list[int]:
    """Scan vertices in ascending order, keeping each one not adjacent to a
    kept vertex."""
    return [v + 1 for v in bits(_greedy(g.adj, g.full_mask))]


@dataclass(frozen=True)
class BranchReport:
    result: list[int]
    depth_reached: int
    nodes_explored: int
    cap_hit: bool = False

    def to_text(self) -> str:
        return f"is {len(self.result)} : " + " ".join(map(str, self.result))


def _key(mask: int) -> tuple[int, list[int]]:
    # larger sets first, then lexicographically smallest sorted vertex list
    return (-mask.bit_count(), list(bits(mask)))


def approx_is_halfgraph(g: Graph, depth_cap: int | None = None, memo: bool = True) -> BranchReport:
    """Run the branching algorithm.

    ``depth_cap`` limits the recursion depth; when it binds, the greedy set
    is used at the cut-off and the report is flagged.  ``memo`` caches
    results per vertex set, which never changes the output.
    """
    adj = g.adj
    cache: dict[tuple[int, int], tuple[int, int]] = {}
    nodes = 0
    cap_hit = False

    def rec(mask: int, depth: int) -> tuple[int, int]:
        """Best set inside ``mask`` and the height of its recursion tree."""
        nonlocal nodes, cap_hit
        key = (mask, depth if depth_cap is not None else 0)
        if memo and key in cache:
            return cache[key]
        nodes += 1
        edged = [u for u in bits(mask) if adj[u] & mask]
        if not edged:
            out = (mask, 0)
        elif depth_cap is not None and depth >= depth_cap:
            cap_hit = True
            out = (_greedy(adj, mask), 0)
        else:
            best = _greedy(adj, mask)
            best_key = _key(best)
            height = 0
            for u in edged:
                closed_u = adj[u] | 1 << u
                for v in bits(adj[u] & mask):
                    sub, h = rec(adj[v] & mask & ~closed_u, depth + 1)
                    height = max(height, h + 1)
                    cand = sub | 1 << u
                    ck = _key(cand)
                    if ck < best_key:
                        best, best_key = cand, ck
            out = (best, height)
        if memo:
            cache[key] = out
        return out

    need = 4 * g.n + 200
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)
    best, height = rec(g.full_mask, 0)
    return BranchReport([v + 1 for v in bits(best)], height, nodes, cap_hit)

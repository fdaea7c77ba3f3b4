"""Clique / induced path / coloring trichotomy and the log-approximations
for clique and independent set built on it.

``gyarfas(g, k, t)`` returns an induced ``K_k``, an induced ``P_t`` or a
proper coloring with at most ``f_colors(k, t) < t**k`` colors.  Every
arbitrary choice is resolved to the smallest label, so results are
deterministic.
"""

from __future__ import annotations

import logging
import sys
from dataclasses import dataclass, field

from .errors import PreconditionError
from .graph import Graph, bits, complement, component_masks

log = logging.getLogger(__name__)

CLIQUE = "clique"
PATH = "path"
COLORING = "coloring"
ENDPOINT_PATH = "endpoint-path"


def f_colors(k: int, t: int) -> int:
    if k < 1 or t < 1:
        raise PreconditionError("k and t must be positive")
    f = 0
    for _ in range(k - 1):
        f = (t - 1) * (f + 1)
    return f


def g_colors(k: int, t: int, l: int) -> int:
    if k < 1 or t < 1 or l < 1:
        raise PreconditionError("k, t and l must be positive")
    return (l - 1) * (f_colors(k - 1, t) + 1) if k > 1 else 0


@dataclass(frozen=True)
class GyarfasOutcome:
    """One of: ``clique`` (vertex tuple), ``path`` (vertex sequence) or
    ``coloring`` (vertex -> color).  ``endpoint-path`` only appears as a
    sub-result and starts at the designated vertex."""

    kind: str
    vertices: tuple[int, ...] = ()
    colors: dict[int, int] = field(default_factory=dict)

    @property
    def color_count(self) -> int:
        return len(set(self.colors.values()))

    def to_text(self, n: int | None = None) -> str:
        if self.kind == COLORING:
            order = range(1, n + 1) if n is not None else sorted(self.colors)
            cs = " ".join(str(self.colors[v]) for v in order)
            return f"coloring {self.color_count} : {cs}"
        tag = "clique" if self.kind == CLIQUE else "path"
        vs = sorted(self.vertices) if self.kind == CLIQUE else self.vertices
        return f"{tag} {len(self.vertices)} : " + " ".join(map(str, vs))


def _gyarfas(adj, mask: int, k: int, t: int) -> GyarfasOutcome:
    colors: dict[int, int] = {}
    for comp in component_masks(adj, mask):
        v = (comp & -comp).bit_length() - 1
        r = _sub(adj, comp, k, t, v, t)
        if r.kind == ENDPOINT_PATH:
            return GyarfasOutcome(PATH, r.vertices)
        if r.kind != COLORING:
            return r
        colors.update(r.colors)
    return GyarfasOutcome(COLORING, colors=colors)


def _sub(adj, mask: int, k: int, t: int, v: int, l: int) -> GyarfasOutcome:
    if t == 1:
        return GyarfasOutcome(PATH, (v,))
    if k == 1:
        return GyarfasOutcome(CLIQUE, (v,))
    if l == 1:
        return GyarfasOutcome(ENDPOINT_PATH, (v,))
    vbit = 1 << v
    if mask == vbit:
        return GyarfasOutcome(COLORING, colors={v: 1})
    inner_mask = adj[v] & mask
    r = _gyarfas(adj, inner_mask, k - 1, t)
    if r.kind == PATH:
        return r
    if r.kind == CLIQUE:
        return GyarfasOutcome(CLIQUE, r.vertices + (v,))
    inner = r.colors
    rest = mask & ~inner_mask & ~vbit
    outer: dict[int, int] = {}
    for comp in component_masks(adj, rest):
        touching = 0
        for x in bits(comp):
            touching |= adj[x]
        touching &= inner_mask
        w = (touching & -touching).bit_length() - 1
        r2 = _sub(adj, comp | 1 << w, k, t, w, l - 1)
        if r2.kind == ENDPOINT_PATH:
            return GyarfasOutcome(ENDPOINT_PATH, (v,) + r2.vertices)
        if r2.kind != COLORING:
            return r2
        for x, c in r2.colors.items():
            if x != w:
                outer[x] = c
    base = g_colors(k, t, l - 1)
    colors = outer
    for x, c in inner.items():
        colors[x] = base + c
    colors[v] = base + f_colors(k - 1, t) + 1
    return GyarfasOutcome(COLORING, colors=colors)


def _relabel(r: GyarfasOutcome) -> GyarfasOutcome:
    return GyarfasOutcome(
        r.kind,
        tuple(x + 1 for x in r.vertices),
        {x + 1: c for x, c in r.colors.items()},
    )


def _ensure_depth(n: int) -> None:
    need = 8 * n + 200
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)


def gyarfas(g: Graph, k: int, t: int) -> GyarfasOutcome:
    if g.n == 0:
        raise PreconditionError("graph must be nonempty")
    if k < 1 or t < 1:
        raise PreconditionError("k and t must be positive")
    _ensure_depth(g.n)
    return _relabel(_gyarfas(g.adj, g.full_mask, k, t))


def gyarfas_sub(g: Graph, k: int, t: int, v: int, l: int) -> GyarfasOutcome:
    if not 1 <= v <= g.n:
        raise PreconditionError(f"vertex {v} outside 1..{g.n}")
    if not 1 <= l <= t:
        raise PreconditionError("need 1 <= l <= t")
    if len(component_masks(g.adj, g.full_mask)) != 1:
        raise PreconditionError("graph must be connected")
    _ensure_depth(g.n)
    return _relabel(_sub(g.adj, g.full_mask, k, t, v - 1, l))


class IndexBoundExceeded(PreconditionError):
    """The supplied index bound is wrong; ``path`` is an induced path that
    certifies it."""

    def __init__(self, message: str, path: tuple[int, ...]):
        self.path = path
        super().__init__(message)


def approx_clique(g: Graph, m: int) -> list[int]:
    """Clique ``C`` with ``(2m + 2) ** (len(C) + 2) >= omega(g)`` for graphs
    of matching index at most ``m``.

    Bisects over the clique size ``k'`` keeping ``lo`` at a size whose call
    returned a clique and ``hi`` at one whose call returned a coloring.  A
    coloring at ``lo + 1`` bounds ``omega`` by ``f(lo + 1, t) < t**(lo + 1)``,
    so the bracket alone certifies the guarantee.
    """
    if m < 0:
        raise PreconditionError("m must be non-negative")
    t = 2 * m + 2
    best = gyarfas(g, 1, t)
    lo, hi = 1, g.n + 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        r = gyarfas(g, mid, t)
        if r.kind == PATH:
            raise IndexBoundExceeded(
                f"matching index exceeds {m}: found an induced path on {t} vertices",
                r.vertices,
            )
        if r.kind == CLIQUE:
            lo, best = mid, r
        else:
            hi = mid
    return sorted(best.vertices)


def approx_is_comatching(g: Graph, m: int) -> list[int]:
    try:
        return approx_clique(complement(g), m)
    except IndexBoundExceeded as exc:
        raise IndexBoundExceeded(
            f"co-matching index exceeds {m}: the complement has an induced path "
            f"on {2 * m + 2} vertices",
            exc.path,
        ) from None

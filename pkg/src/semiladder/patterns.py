"""Semi-induced matchings, co-matchings and half-graphs.

A pattern of order ``h`` is a pair of disjoint vertex tuples
``a_1..a_h`` and ``b_1..b_h`` where the adjacency of ``a_i`` and ``b_j``
is dictated by the pattern's predicate on ``(i, j)``; edges inside either
side are unconstrained.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from . import kernels
from .errors import GraphFormatError, PreconditionError
from .graph import Graph, Verdict, bits, twin_classes

MAX_PATTERN_VERTICES = 12


class PatternKind(enum.Enum):
    MATCHING = "matching"
    COMATCHING = "comatching"
    HALFGRAPH = "halfgraph"

    def predicate(self, i: int, j: int) -> bool:
        if self is PatternKind.MATCHING:
            return i == j
        if self is PatternKind.COMATCHING:
            return i != j
        return i <= j


_KERNEL_CODE = {
    PatternKind.MATCHING: kernels.KIND_MATCHING,
    PatternKind.COMATCHING: kernels.KIND_COMATCHING,
    PatternKind.HALFGRAPH: kernels.KIND_HALFGRAPH,
}


@dataclass(frozen=True)
class PatternWitness:
    kind: PatternKind
    a_side: tuple[int, ...]
    b_side: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.a_side)

    def to_text(self) -> str:
        a = " ".join(map(str, self.a_side))
        b = " ".join(map(str, self.b_side))
        return f"pattern {self.kind.value} {self.order} : a = {a} ; b = {b}"

    @classmethod
    def from_text(cls, line: str) -> PatternWitness:
        try:
            head, body = line.split(":", 1)
            tag, kind, order = head.split()
            a_part, b_part = body.split(";")
            a_key, a_vals = a_part.split("=")
            b_key, b_vals = b_part.split("=")
            if tag != "pattern" or a_key.strip() != "a" or b_key.strip() != "b":
                raise ValueError
            w = cls(
                PatternKind(kind),
                tuple(int(x) for x in a_vals.split()),
                tuple(int(x) for x in b_vals.split()),
            )
            if w.order != int(order):
                raise ValueError
        except ValueError:
            raise GraphFormatError(f"malformed pattern witness {line!r}") from None
        return w


def verify_pattern_witness(g: Graph, w: PatternWitness) -> Verdict:
    """Check a witness from scratch, independently of the search."""
    if len(w.a_side) != len(w.b_side) or not w.a_side:
        return Verdict(False, "sides must be nonempty and of equal length")
    everything = list(w.a_side) + list(w.b_side)
    for v in everything:
        if not 1 <= v <= g.n:
            return Verdict(False, f"vertex {v} outside 1..{g.n}")
    if len(set(everything)) != len(everything):
        return Verdict(False, "vertices are not pairwise distinct")
    for i, a in enumerate(w.a_side, start=1):
        for j, b in enumerate(w.b_side, start=1):
            if g.adjacent(a, b) != w.kind.predicate(i, j):
                want = "edge" if w.kind.predicate(i, j) else "non-edge"
                return Verdict(False, f"a_{i}={a}, b_{j}={b} should be a {want}")
    return Verdict(True)


def find_semi_induced(g: Graph, kind: PatternKind, h: int) -> PatternWitness | None:
    """Exhaustive search; ``None`` certifies that no witness of order ``h``
    exists."""
    if h < 1:
        raise PreconditionError("order must be at least 1")
    if 2 * h > g.n:
        return None
    a, b, _ = kernels.semi_induced_search(g.adj, g.n, _KERNEL_CODE[kind], h)
    if a is None:
        return None
    return PatternWitness(kind, tuple(x + 1 for x in a), tuple(x + 1 for x in b))


@dataclass(frozen=True)
class IndexValue:
    """An index that is either exact or known only to reach ``value``."""

    value: int
    exact: bool
    witness: PatternWitness | None = None

    def __str__(self) -> str:
        return str(self.value) if self.exact else f">={self.value}"


def pattern_index(g: Graph, kind: PatternKind, cap: int = 8) -> IndexValue:
    if cap < 1:
        raise PreconditionError("cap must be at least 1")
    best = None
    for h in range(1, cap + 1):
        w = find_semi_induced(g, kind, h)
        if w is None:
            # every sub-pattern of a witness is a witness, so absence at h
            # rules out all larger orders
            return IndexValue(h - 1, True, best)
        best = w
    return IndexValue(cap, False, best)


@dataclass(frozen=True)
class IndexReport:
    matching: IndexValue
    comatching: IndexValue
    halfgraph: IndexValue
    neighborhood_diversity: int
    twin_classes: list[list[int]] = field(default_factory=list)

    def index(self, kind: PatternKind) -> IndexValue:
        return {
            PatternKind.MATCHING: self.matching,
            PatternKind.COMATCHING: self.comatching,
            PatternKind.HALFGRAPH: self.halfgraph,
        }[kind]

    def to_text(self) -> str:
        rows = [
            ("matching", self.matching),
            ("comatching", self.comatching),
            ("halfgraph", self.halfgraph),
        ]
        lines = [f"{'index':<22}{'value':>6}  witness"]
        for name, iv in rows:
            wit = iv.witness.to_text() if iv.witness else "-"
            lines.append(f"{name:<22}{str(iv):>6}  {wit}")
        lines.append(f"{'neighborhood_diversity':<22}{self.neighborhood_diversity:>6}")
        return "\n".join(lines) + "\n"


def index_report(g: Graph, cap: int = 8) -> IndexReport:
    classes = twin_classes(g)
    return IndexReport(
        matching=pattern_index(g, PatternKind.MATCHING, cap),
        comatching=pattern_index(g, PatternKind.COMATCHING, cap),
        halfgraph=pattern_index(g, PatternKind.HALFGRAPH, cap),
        neighborhood_diversity=len(classes),
        twin_classes=classes,
    )


# -- small induced patterns ---------------------------------------------------


def _pattern_order(pattern: Graph) -> list[int]:
    """Vertex order for matching: each next vertex has the most already
    placed neighbors, so constraints bite early."""
    order: list[int] = []
    placed = 0
    remaining = set(range(pattern.n))
    while remaining:
        nxt = max(
            sorted(remaining),
            key=lambda v: ((pattern.adj[v] & placed).bit_count(), pattern.adj[v].bit_count()),
        )
        order.append(nxt)
        placed |= 1 << nxt
        remaining.discard(nxt)
    return order


def contains_induced(g: Graph, pattern: Graph) -> dict[int, int] | None:
    """Find an induced copy of ``pattern`` in ``g``.

    Returns a map from pattern vertices to ``g`` vertices preserving edges
    and non-edges, or ``None`` when none exists.
    """
    if pattern.n > MAX_PATTERN_VERTICES:
        raise PreconditionError(
            f"pattern has {pattern.n} vertices; at most {MAX_PATTERN_VERTICES} supported"
        )
    if pattern.n > g.n:
        return None
    order = _pattern_order(pattern)
    full = g.full_mask
    image = [0] * pattern.n

    def rec(depth: int, used: int) -> bool:
        if depth == len(order):
            return True
        p = order[depth]
        cand = full & ~used
        for q in order[:depth]:
            gq = g.adj[image[q]]
            cand &= gq if pattern.adj[p] >> q & 1 else ~gq
            if not cand:
                return False
        need = pattern.adj[p].bit_count()
        for b in bits(cand):
            if g.adj[b].bit_count() < need:
                continue
            image[p] = b
            if rec(depth + 1, used | 1 << b):
                return True
        return False

    if not rec(0, 0):
        return None
    return {p + 1: image[p] + 1 for p in range(pattern.n)}


def star(leaves: int) -> Graph:
    """``K_{1,leaves}`` with center 1."""
    return Graph.from_edges(leaves + 1, [(1, i) for i in range(2, leaves + 2)])


def co_three_k2() -> Graph:
    """Complement of three disjoint edges (the octahedron)."""
    pairs = {(1, 2), (3, 4), (5, 6)}
    edges = [(u, v) for u in range(1, 7) for v in range(u + 1, 7) if (u, v) not in pairs]
    return Graph.from_edges(6, edges)

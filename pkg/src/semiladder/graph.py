"""Simple undirected graphs on vertices 1..n.

Adjacency is stored as one Python integer per vertex, used as a bitset:
bit ``v - 1`` of ``adj[u - 1]`` is set iff ``uv`` is an edge.  Every
algorithm in the package works on these masks directly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import GraphFormatError, PreconditionError


def bits(mask: int) -> Iterator[int]:
    """Yield the 0-based positions of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def vertices_of(mask: int) -> list[int]:
    return [b + 1 for b in bits(mask)]


class Graph:
    """Immutable simple graph with 1-based vertex labels."""

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 0 or len(adj) != n:
            raise ValueError("adjacency length must equal vertex count")
        self.n = n
        self.adj: tuple[int, ...] = tuple(adj)
        self._hash: int | None = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge {u}-{v} outside 1..{n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u - 1] |= 1 << (v - 1)
            adj[v - 1] |= 1 << (u - 1)
        return cls(n, adj)

    @classmethod
    def edgeless(cls, n: int) -> Graph:
        return cls(n, [0] * n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adj[u - 1] >> (v - 1) & 1)

    def neighbor_mask(self, v: int) -> int:
        return self.adj[v - 1]

    def neighbors(self, v: int) -> list[int]:
        return vertices_of(self.adj[v - 1])

    def degree(self, v: int) -> int:
        return self.adj[v - 1].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (u, v) with u < v, sorted lexicographically."""
        out = []
        for u in range(1, self.n + 1):
            higher = self.adj[u - 1] >> u
            for b in bits(higher):
                out.append((u, u + 1 + b))
        return out

    @property
    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


# -- text format -------------------------------------------------------------


def parse_graph(text: str | bytes) -> Graph:
    """Read the ``p edge n m`` / ``e u v`` edge-list format.

    Duplicate ``e`` lines collapse into one edge but still count toward
    the declared ``m``.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    n = None
    declared = 0
    seen = 0
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphFormatError("second header line", lineno)
            if len(parts) != 4 or parts[1] != "edge":
                raise GraphFormatError(f"malformed header {line!r}", lineno)
            try:
                n, declared = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphFormatError(f"malformed header {line!r}", lineno) from None
            if n < 1 or declared < 0:
                raise GraphFormatError("header needs n >= 1 and m >= 0", lineno)
        elif parts[0] == "e":
            if n is None:
                raise GraphFormatError("edge line before header", lineno)
            if len(parts) != 3:
                raise GraphFormatError(f"malformed edge line {line!r}", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError(f"malformed edge line {line!r}", lineno) from None
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}", lineno)
            for x in (u, v):
                if not 1 <= x <= n:
                    raise GraphFormatError(f"vertex {x} outside 1..{n}", lineno)
            edges.append((u, v))
            seen += 1
        else:
            raise GraphFormatError(f"unrecognized line {line!r}", lineno)
    if n is None:
        raise GraphFormatError("missing 'p edge' header")
    if seen != declared:
        raise GraphFormatError(f"header declares {declared} edges, found {seen}")
    return Graph.from_edges(n, edges)


def serialize_graph(g: Graph, comments: Sequence[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    edges = g.edges()
    lines.append(f"p edge {g.n} {len(edges)}")
    lines.extend(f"e {u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def read_comments(text: str) -> list[list[str]]:
    """Tokenized ``c ...`` lines, without the leading ``c``."""
    out = []
    for raw in text.splitlines():
        parts = raw.split()
        if parts and parts[0] == "c":
            out.append(parts[1:])
    return out


# -- transforms --------------------------------------------------------------


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, [full & ~a & ~(1 << i) for i, a in enumerate(g.adj)])


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    """Relabel ``g[s]`` onto 1..|s|.  Returns the graph and the label map
    (``labels[i - 1]`` is the original vertex of new vertex ``i``)."""
    labels = sorted(set(s))
    for v in labels:
        if not 1 <= v <= g.n:
            raise PreconditionError(f"vertex {v} outside 1..{g.n}")
    pos = {v: i for i, v in enumerate(labels)}
    adj = []
    for v in labels:
        m = 0
        for b in bits(g.adj[v - 1]):
            j = pos.get(b + 1)
            if j is not None:
                m |= 1 << j
        adj.append(m)
    return Graph(len(labels), adj), labels


def component_masks(adj: Sequence[int], within: int) -> list[int]:
    """Connected components of the subgraph induced by ``within``, as masks
    over 0-based bit positions, ordered by lowest member."""
    out = []
    rest = within
    while rest:
        frontier = rest & -rest
        comp = 0
        while frontier:
            comp |= frontier
            nxt = 0
            for b in bits(frontier):
                nxt |= adj[b]
            frontier = nxt & within & ~comp
        out.append(comp)
        rest &= ~comp
    return out


def connected_components(g: Graph) -> list[list[int]]:
    return [vertices_of(c) for c in component_masks(g.adj, g.full_mask)]


def twin_classes(g: Graph) -> list[list[int]]:
    """Partition into classes of vertices u, v with N(u) - v == N(v) - u.

    The relation is an equivalence, so each class is collected by comparing
    against its lowest member only.
    """
    classes: list[list[int]] = []
    assigned = [False] * g.n
    for u in range(g.n):
        if assigned[u]:
            continue
        block = [u]
        assigned[u] = True
        ubit = 1 << u
        for v in range(u + 1, g.n):
            if assigned[v]:
                continue
            vbit = 1 << v
            if g.adj[u] & ~vbit == g.adj[v] & ~ubit:
                block.append(v)
                assigned[v] = True
        classes.append([x + 1 for x in block])
    return classes


def neighborhood_diversity(g: Graph) -> int:
    return len(twin_classes(g))


# -- generators --------------------------------------------------------------

PATTERN_FAMILIES = ("halfgraph", "matching", "comatching")
FAMILIES = PATTERN_FAMILIES + ("path", "cycle", "clique", "gnp", "unit-squares")


@dataclass(frozen=True)
class Generated:
    graph: Graph
    roles: dict[int, tuple[str, int]] = field(default_factory=dict)
    centers: list[tuple[float, float]] = field(default_factory=list)

    def comments(self) -> list[str]:
        return [f"role {v} {side} {i}" for v, (side, i) in sorted(self.roles.items())]


def _pattern_graph(kind: str, t: int) -> Generated:
    pred = {
        "halfgraph": lambda i, j: i <= j,
        "matching": lambda i, j: i == j,
        "comatching": lambda i, j: i != j,
    }[kind]
    edges = [(i, t + j) for i in range(1, t + 1) for j in range(1, t + 1) if pred(i, j)]
    roles = {i: ("a", i) for i in range(1, t + 1)}
    roles.update({t + j: ("b", j) for j in range(1, t + 1)})
    return Generated(Graph.from_edges(2 * t, edges), roles)


def unit_square_centers(n: int, side: float, seed: int) -> list[tuple[float, float]]:
    """Square centers for the unit-square family.

    Draws ``x`` then ``y`` for each square in turn from
    ``random.Random(seed).uniform(0, side)`` (Mersenne Twister).
    """
    rng = random.Random(seed)
    pts = []
    for _ in range(n):
        x = rng.uniform(0.0, side)
        y = rng.uniform(0.0, side)
        pts.append((x, y))
    return pts


def unit_square_graph(centers: Sequence[tuple[float, float]]) -> Graph:
    # Open squares: boundaries that only touch do not intersect.
    edges = []
    for i, (xi, yi) in enumerate(centers):
        for j in range(i + 1, len(centers)):
            xj, yj = centers[j]
            if abs(xi - xj) < 1.0 and abs(yi - yj) < 1.0:
                edges.append((i + 1, j + 1))
    return Graph.from_edges(len(centers), edges)


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi graph; pairs (u, v), u < v, are visited in lexicographic
    order, each kept iff ``random.Random(seed).random() < p``."""
    rng = random.Random(seed)
    edges = [
        (u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def generate(family: str, params: Sequence[float], seed: int = 0) -> Generated:
    if family not in FAMILIES:
        raise PreconditionError(f"unknown family {family!r}")
    want = {"gnp": 2, "unit-squares": 2}.get(family, 1)
    if len(params) != want:
        raise PreconditionError(f"{family} takes {want} parameter(s)")
    size = params[0]
    if size != int(size) or size < 1:
        raise PreconditionError(f"{family}: size must be a positive integer")
    size = int(size)
    if family in PATTERN_FAMILIES:
        return _pattern_graph(family, size)
    if family == "path":
        return Generated(Graph.from_edges(size, [(i, i + 1) for i in range(1, size)]))
    if family == "cycle":
        if size < 3:
            raise PreconditionError("cycle needs at least 3 vertices")
        edges = [(i, i + 1) for i in range(1, size)] + [(1, size)]
        return Generated(Graph.from_edges(size, edges))
    if family == "clique":
        full = (1 << size) - 1
        return Generated(Graph(size, [full & ~(1 << i) for i in range(size)]))
    if family == "gnp":
        p = float(params[1])
        if not 0.0 <= p <= 1.0:
            raise PreconditionError("gnp: p must lie in [0, 1]")
        return Generated(gnp(size, p, seed))
    side = float(params[1])
    if side <= 0:
        raise PreconditionError("unit-squares: side length must be positive")
    centers = unit_square_centers(size, side, seed)
    return Generated(unit_square_graph(centers), centers=centers)


# -- witnesses ---------------------------------------------------------------

WITNESS_KINDS = (
    "independent-set",
    "clique",
    "dominating-set",
    "coloring",
    "induced-path",
    "pattern",
)


@dataclass(frozen=True)
class Witness:
    kind: str
    payload: object


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _check_labels(g: Graph, vs: Iterable[int]) -> Verdict | None:
    for v in vs:
        if not isinstance(v, int) or not 1 <= v <= g.n:
            return Verdict(False, f"vertex {v!r} outside 1..{g.n}")
    return None


def verify_witness(g: Graph, w: Witness, target: int | None = None) -> Verdict:
    """Referee a solver output against ``g``."""
    kind, payload = w.kind, w.payload
    if kind not in WITNESS_KINDS:
        raise PreconditionError(f"unknown witness kind {kind!r}")

    if kind == "pattern":
        from .patterns import PatternWitness, verify_pattern_witness

        if not isinstance(payload, PatternWitness):
            raise PreconditionError("pattern witness needs a PatternWitness payload")
        return verify_pattern_witness(g, payload)

    if kind == "coloring":
        if isinstance(payload, Mapping):
            colors = dict(payload)
        elif isinstance(payload, Sequence) and not isinstance(payload, str):
            colors = {i + 1: c for i, c in enumerate(payload)}
        else:
            raise PreconditionError("coloring needs a mapping or a sequence")
        bad = _check_labels(g, colors)
        if bad is not None:
            return bad
        missing = [v for v in g.vertices() if v not in colors]
        if missing:
            return Verdict(False, f"vertex {missing[0]} has no color")
        for u, v in g.edges():
            if colors[u] == colors[v]:
                return Verdict(False, f"edge {u}-{v} is monochromatic")
        if target is not None and len(set(colors.values())) > target:
            return Verdict(False, f"uses {len(set(colors.values()))} > {target} colors")
        return Verdict(True)

    if not isinstance(payload, Iterable) or isinstance(payload, (str, Mapping)):
        raise PreconditionError(f"{kind} needs a vertex collection")
    vs = list(payload)
    bad = _check_labels(g, vs)
    if bad is not None:
        return bad
    if len(set(vs)) != len(vs):
        return Verdict(False, "repeated vertex")

    if kind == "induced-path":
        for i, u in enumerate(vs):
            for j in range(i + 1, len(vs)):
                v = vs[j]
                if j == i + 1 and not g.adjacent(u, v):
                    return Verdict(False, f"consecutive {u}, {v} not adjacent")
                if j > i + 1 and g.adjacent(u, v):
                    return Verdict(False, f"chord {u}-{v}")
        if target is not None and len(vs) != target:
            return Verdict(False, f"path has {len(vs)} vertices, expected {target}")
        return Verdict(True)

    if kind == "dominating-set":
        covered = mask_of(vs)
        for v in vs:
            covered |= g.adj[v - 1]
        if covered != g.full_mask:
            first = next(bits(g.full_mask & ~covered)) + 1
            return Verdict(False, f"vertex {first} not dominated")
        if target is not None and len(vs) > target:
            return Verdict(False, f"size {len(vs)} > {target}")
        return Verdict(True)

    want_edge = kind == "clique"
    for i, u in enumerate(vs):
        for v in vs[i + 1 :]:
            if g.adjacent(u, v) != want_edge:
                what = "non-edge" if want_edge else "edge"
                return Verdict(False, f"{what} {min(u, v)}-{max(u, v)}")
    if target is not None and len(vs) < target:
        return Verdict(False, f"size {len(vs)} < {target}")
    return Verdict(True)

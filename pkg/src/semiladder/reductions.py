"""Hardness constructions with solution lifting in both directions.

``grid_tiling_to_is`` turns a Grid Tiling instance into an Independent Set
instance of target ``4k^2``; ``multicolored_is_to_ds`` turns a
Multicolored Independent Set instance into a Dominating Set instance of
target ``k``.  Vertex numbering is fixed so outputs are byte-stable.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvariantViolation, PreconditionError
from .graph import Graph, serialize_graph, verify_witness, Witness
from .oracles import ColorClassPartition
from .tiling import Cell, GridTilingInstance, Selection, Tile, agreement_violation, below, right_of

DIRECTIONS = ("U", "R", "D", "L")


class ExtractionError(PreconditionError):
    """A claimed solution cannot be mapped back.  ``code`` names the check
    that failed."""

    def __init__(self, code: str, message: str):
        self.code = code
        super().__init__(message)


# -- Grid Tiling -> Independent Set -------------------------------------------


@dataclass(frozen=True)
class TilingReductionOutput:
    graph: Graph
    target: int
    labels: tuple[tuple[str, Cell, Tile], ...]
    index: dict[tuple[str, Cell, Tile], int] = field(repr=False)

    def label(self, v: int) -> tuple[str, Cell, Tile]:
        return self.labels[v - 1]

    def parts(self) -> dict[tuple[str, Cell], list[int]]:
        """The clique partition into U/R/D/L parts of every cell."""
        out: dict[tuple[str, Cell], list[int]] = {}
        for v, (d, cell, _) in enumerate(self.labels, start=1):
            out.setdefault((d, cell), []).append(v)
        return out

    def to_text(self) -> str:
        comments = [
            f"label {v} {d} {cell[0]} {cell[1]} {tile[0]} {tile[1]}"
            for v, (d, cell, tile) in enumerate(self.labels, start=1)
        ]
        comments.append(f"target {self.target}")
        return serialize_graph(self.graph, comments)


def grid_tiling_to_is(inst: GridTilingInstance) -> TilingReductionOutput:
    """Build the four-clique gadget per cell and the agreement edges.

    Vertices are numbered cell by cell in row-major order; within a cell,
    all U vertices, then R, D, L, each in the cell's listed tile order.
    """
    labels: list[tuple[str, Cell, Tile]] = []
    for cell in inst.cells():
        for d in DIRECTIONS:
            for tile in inst.tiles[cell]:
                labels.append((d, cell, tile))
    index = {lab: v for v, lab in enumerate(labels, start=1)}
    edges: list[tuple[int, int]] = []

    def vid(d: str, cell: Cell, tile: Tile) -> int:
        return index[(d, cell, tile)]

    for cell in inst.cells():
        ts = inst.tiles[cell]
        for d in DIRECTIONS:
            for x in range(len(ts)):
                for y in range(x + 1, len(ts)):
                    edges.append((vid(d, cell, ts[x]), vid(d, cell, ts[y])))
        # co-matchings around the gadget: U-R, R-D, D-L, L-U
        for d1, d2 in (("U", "R"), ("R", "D"), ("D", "L"), ("L", "U")):
            for t1 in ts:
                for t2 in ts:
                    if t1 != t2:
                        edges.append((vid(d1, cell, t1), vid(d2, cell, t2)))
        r = right_of(cell)
        if r[1] <= inst.k:
            for t1 in ts:
                for t2 in inst.tiles[r]:
                    if t1[0] != t2[0]:
                        edges.append((vid("R", cell, t1), vid("L", r, t2)))
        b = below(cell)
        if b[0] <= inst.k:
            for t1 in ts:
                for t2 in inst.tiles[b]:
                    if t1[1] != t2[1]:
                        edges.append((vid("D", cell, t1), vid("U", b, t2)))
    g = Graph.from_edges(len(labels), edges)
    return TilingReductionOutput(g, 4 * inst.k * inst.k, tuple(labels), index)


def lift_tiling_solution(
    inst: GridTilingInstance, sel: Selection, out: TilingReductionOutput
) -> list[int]:
    problem = agreement_violation(inst, sel)
    if problem:
        raise ExtractionError("agreement", f"not a Grid Tiling solution: {problem}")
    chosen = sorted(out.index[(d, cell, sel[cell])] for cell in inst.cells() for d in DIRECTIONS)
    verdict = verify_witness(out.graph, Witness("independent-set", chosen), out.target)
    if not verdict:
        raise InvariantViolation(f"lifted set is not independent: {verdict.reason}")
    return chosen


def extract_tiling_solution(
    inst: GridTilingInstance, out: TilingReductionOutput, indep: list[int]
) -> Selection:
    vs = sorted(set(indep))
    if len(vs) != out.target:
        raise ExtractionError("size", f"set has {len(vs)} vertices, need exactly {out.target}")
    verdict = verify_witness(out.graph, Witness("independent-set", vs))
    if not verdict:
        raise ExtractionError("independence", f"not independent: {verdict.reason}")
    per_cell: dict[Cell, dict[str, Tile]] = {}
    for v in vs:
        d, cell, tile = out.label(v)
        slot = per_cell.setdefault(cell, {})
        if d in slot:
            raise ExtractionError("gadget", f"two {d} vertices in cell {cell}")
        slot[d] = tile
    sel: Selection = {}
    for cell in inst.cells():
        slot = per_cell.get(cell, {})
        if len(slot) != 4:
            raise ExtractionError("gadget", f"cell {cell} holds {len(slot)} of 4 directions")
        tiles = set(slot.values())
        if len(tiles) != 1:
            raise ExtractionError("gadget", f"cell {cell} mixes tiles {sorted(tiles)}")
        sel[cell] = tiles.pop()
    problem = agreement_violation(inst, sel)
    if problem:
        raise InvariantViolation(f"extracted selection breaks agreement: {problem}")
    return sel


def tiling_neighbor_parts(out: TilingReductionOutput) -> list[int]:
    """For each vertex, the number of clique parts holding a neighbor."""
    part_of = {}
    for key, members in out.parts().items():
        for v in members:
            part_of[v] = key
    counts = []
    for v in out.graph.vertices():
        counts.append(len({part_of[u] for u in out.graph.neighbors(v)}))
    return counts


def tiling_comatching_defects(out: TilingReductionOutput) -> list[str]:
    """Pairs of parts inside one gadget that share edges but where some
    vertex misses more than one vertex of the other part."""
    problems = []
    parts = out.parts()
    for (d1, c1), xs in parts.items():
        for (d2, c2), ys in parts.items():
            if c1 != c2:
                continue
            if not any(out.graph.adjacent(x, y) for x in xs for y in ys if x != y):
                continue
            for x in xs:
                missing = sum(1 for y in ys if y != x and not out.graph.adjacent(x, y))
                if missing > 1:
                    problems.append(f"vertex {x} in {d1}{c1} misses {missing} of {d2}{c2}")
    return problems


# -- Multicolored Independent Set -> Dominating Set ---------------------------


@dataclass(frozen=True)
class DsReductionOutput:
    graph: Graph
    target: int
    source: Graph
    partition: ColorClassPartition
    labels: tuple[tuple, ...]
    guards: tuple[tuple[int, int], ...]
    edge_vertices: dict[tuple[int, int], int] = field(repr=False)

    def class_sets(self) -> list[list[int]]:
        """``V_i`` together with its two guards, per class."""
        return [
            sorted(list(cls) + list(self.guards[i]))
            for i, cls in enumerate(self.partition.classes)
        ]

    @property
    def w_vertices(self) -> list[int]:
        return sorted(self.edge_vertices.values())

    def to_text(self) -> str:
        comments = []
        for v, lab in enumerate(self.labels, start=1):
            comments.append(f"label {v} " + " ".join(map(str, lab)))
        comments.append(f"target {self.target}")
        return serialize_graph(self.graph, comments)


def multicolored_is_to_ds(g: Graph, p: ColorClassPartition) -> DsReductionOutput:
    """Build ``G'``: classes become cliques, each class gets two private
    guards, and each edge between two classes gets a vertex that sees both
    classes except the edge's endpoints.

    Numbering: original vertices ``1..n``; then ``x_1, y_1, ..., x_k, y_k``;
    then one vertex per cross-class edge in sorted edge order.  Edges inside
    a class constrain nothing (a solution takes one vertex per class) and
    get no vertex.
    """
    p.validate(g.n)
    cls_of = p.class_of()
    n, k = g.n, p.k
    labels: list[tuple] = [("orig", v) for v in g.vertices()]
    guards = []
    for i in range(1, k + 1):
        guards.append((n + 2 * i - 1, n + 2 * i))
        labels.append(("x", i))
        labels.append(("y", i))
    cross = [(u, v) for u, v in g.edges() if cls_of[u] != cls_of[v]]
    edge_vertices = {}
    for e in cross:
        labels.append(("w",) + e)
        edge_vertices[e] = len(labels)
    edges: list[tuple[int, int]] = []
    for i, cls in enumerate(p.classes):
        for a in range(len(cls)):
            for b in range(a + 1, len(cls)):
                edges.append((cls[a], cls[b]))
        x, y = guards[i]
        for v in cls:
            edges.append((x, v))
            edges.append((y, v))
    for (u, v), w in edge_vertices.items():
        for c in (p.classes[cls_of[u]], p.classes[cls_of[v]]):
            for z in c:
                if z != u and z != v:
                    edges.append((w, z))
    gp = Graph.from_edges(len(labels), edges)
    return DsReductionOutput(gp, k, g, p, tuple(labels), tuple(guards), edge_vertices)


def _check_mcis(out: DsReductionOutput, sol: list[int]) -> str | None:
    cls_of = out.partition.class_of()
    if len(sol) != out.target:
        return f"needs {out.target} vertices, got {len(sol)}"
    for v in sol:
        if v not in cls_of:
            return f"vertex {v} is not a source vertex"
    hit = sorted(cls_of[v] for v in sol)
    if hit != list(range(out.partition.k)):
        missing = sorted(set(range(out.partition.k)) - set(hit))
        if missing:
            return f"class {missing[0] + 1} has no vertex"
        return "some class holds two vertices"
    verdict = verify_witness(out.source, Witness("independent-set", sol))
    if not verdict:
        return verdict.reason
    return None


def lift_mcis_to_ds(out: DsReductionOutput, sol: list[int]) -> list[int]:
    sol = sorted(set(sol))
    problem = _check_mcis(out, sol)
    if problem:
        raise ExtractionError("multicolored", f"not a multicolored independent set: {problem}")
    verdict = verify_witness(out.graph, Witness("dominating-set", sol), out.target)
    if not verdict:
        raise InvariantViolation(f"lifted set does not dominate: {verdict.reason}")
    return sol


def extract_ds_to_mcis(out: DsReductionOutput, ds: list[int]) -> list[int]:
    ds = sorted(set(ds))
    if len(ds) != out.target:
        raise ExtractionError("size", f"needs exactly {out.target} vertices, got {len(ds)}")
    verdict = verify_witness(out.graph, Witness("dominating-set", ds))
    if not verdict:
        raise ExtractionError("domination", f"not dominating: {verdict.reason}")
    n = out.source.n
    picks: dict[int, int] = {}
    cls_of = out.partition.class_of()
    for v in ds:
        if v <= n and cls_of[v] not in picks:
            picks[cls_of[v]] = v
    # classes covered only through a guard or an edge vertex get any member
    # that is non-adjacent to the picks so far
    for i, cls in enumerate(out.partition.classes):
        if i in picks:
            continue
        for z in cls:
            if not any(out.source.adjacent(z, q) for q in picks.values()):
                picks[i] = z
                break
        else:
            raise InvariantViolation(f"no compatible vertex for class {i + 1}")
    sol = sorted(picks.values())
    problem = _check_mcis(out, sol)
    if problem:
        raise InvariantViolation(f"extraction produced an invalid solution: {problem}")
    return sol


def ds_structure_violations(out: DsReductionOutput) -> list[str]:
    """Check the facts the half-graph bound rests on.

    Every vertex either has no neighbor in a class set or misses at most 3
    of its other members; no vertex has neighbors in more than two class
    sets; the edge vertices are pairwise non-adjacent.
    """
    g = out.graph
    problems = []
    sets = out.class_sets()
    for v in g.vertices():
        touched = 0
        for i, members in enumerate(sets):
            nb = [z for z in members if g.adjacent(v, z)]
            if not nb:
                continue
            touched += 1
            missing = sum(1 for z in members if z != v and not g.adjacent(v, z))
            if missing > 3:
                problems.append(f"vertex {v} misses {missing} members of class set {i + 1}")
        if touched > 2:
            problems.append(f"vertex {v} has neighbors in {touched} class sets")
    ws = out.w_vertices
    for a in range(len(ws)):
        for b in range(a + 1, len(ws)):
            if g.adjacent(ws[a], ws[b]):
                problems.append(f"edge vertices {ws[a]} and {ws[b]} are adjacent")
    return problems

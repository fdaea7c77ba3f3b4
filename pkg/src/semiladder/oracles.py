"""Exact solvers used as ground truth.

Optimization oracles return the lexicographically smallest optimum (as a
sorted vertex list).  They first compute the optimum value by
branch-and-bound, then fix vertices in ascending order, keeping a vertex
whenever an optimum extending the current choice still exists.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .errors import BudgetExceeded, GraphFormatError, PreconditionError
from .graph import Graph, bits, complement, vertices_of
from .tiling import GridTilingInstance, Selection

DEFAULT_BUDGET = 10**8


class _Budget:
    def __init__(self, total: int, what: str):
        self.left = total
        self.total = total
        self.what = what

    def spend(self, nodes: int) -> None:
        self.left -= nodes
        if self.left < 0:
            raise BudgetExceeded(self.total - self.left, self.what)


def _mis_call(adj, cand: int, floor: int, stop_at: int, budget: _Budget):
    try:
        size, mask, nodes = kernels.mis_search(adj, cand, floor, stop_at, budget.left)
    except BudgetExceeded as exc:
        raise BudgetExceeded(budget.total - budget.left + exc.nodes, budget.what) from None
    budget.spend(nodes)
    return size, mask


def independence_number(g: Graph, budget: int = DEFAULT_BUDGET) -> int:
    size, _ = _mis_call(g.adj, g.full_mask, -1, g.n + 1, _Budget(budget, "independent set"))
    return size


def _lex_min_mis(adj, cand: int, alpha: int, budget: _Budget) -> int:
    chosen = 0
    avail = cand
    need = alpha
    for v in bits(cand):
        if need == 0:
            break
        if not avail >> v & 1:
            continue
        sub = avail & ~adj[v] & ~(1 << v)
        if need == 1:
            ok = True
        else:
            size, _ = _mis_call(adj, sub, need - 2, need - 1, budget)
            ok = size >= need - 1
        if ok:
            chosen |= 1 << v
            avail = sub
            need -= 1
        else:
            avail &= ~(1 << v)
    if need:
        raise AssertionError("lexicographic reconstruction lost the optimum")
    return chosen


def max_independent_set(g: Graph, budget: int = DEFAULT_BUDGET) -> list[int]:
    b = _Budget(budget, "independent set")
    alpha, _ = _mis_call(g.adj, g.full_mask, -1, g.n + 1, b)
    return vertices_of(_lex_min_mis(g.adj, g.full_mask, alpha, b))


def has_independent_set(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> list[int] | None:
    """Lexicographically smallest independent set of size exactly ``k``,
    or ``None`` when the independence number is below ``k``."""
    if k <= 0:
        return []
    b = _Budget(budget, "independent set")
    size, _ = _mis_call(g.adj, g.full_mask, k - 1, k, b)
    if size < k:
        return None
    return vertices_of(_lex_min_mis(g.adj, g.full_mask, k, b))


def max_clique(g: Graph, budget: int = DEFAULT_BUDGET) -> list[int]:
    return max_independent_set(complement(g), budget)


def clique_number(g: Graph, budget: int = DEFAULT_BUDGET) -> int:
    return independence_number(complement(g), budget)


# -- domination --------------------------------------------------------------


def _ds_call(closed, universe: int, allowed: int, limit: int, budget: _Budget):
    try:
        size, mask, nodes = kernels.ds_search(closed, universe, allowed, limit, budget.left)
    except BudgetExceeded as exc:
        raise BudgetExceeded(budget.total - budget.left + exc.nodes, budget.what) from None
    budget.spend(nodes)
    return size, mask


def _closed(g: Graph) -> list[int]:
    return [a | 1 << i for i, a in enumerate(g.adj)]


def domination_number(g: Graph, limit: int | None = None, budget: int = DEFAULT_BUDGET) -> int | None:
    """Minimum dominating set size, or ``None`` if it exceeds ``limit``."""
    limit = g.n if limit is None else limit
    size, mask = _ds_call(_closed(g), g.full_mask, g.full_mask, limit, _Budget(budget, "dominating set"))
    return None if mask == -1 else size


def min_dominating_set(g: Graph, budget: int = DEFAULT_BUDGET) -> list[int]:
    closed = _closed(g)
    b = _Budget(budget, "dominating set")
    gamma, _ = _ds_call(closed, g.full_mask, g.full_mask, g.n, b)
    chosen = 0
    undominated = g.full_mask
    allowed = g.full_mask
    need = gamma
    for v in range(g.n):
        if need == 0:
            break
        rest = undominated & ~closed[v]
        allowed &= ~(1 << v)
        if need == 1:
            ok = rest == 0
        else:
            size, mask = _ds_call(closed, rest, allowed, need - 1, b)
            ok = mask != -1
        if ok:
            chosen |= 1 << v
            undominated = rest
            need -= 1
    if need or undominated:
        raise AssertionError("lexicographic reconstruction lost the optimum")
    return vertices_of(chosen)


# -- multicolored independent set --------------------------------------------


@dataclass(frozen=True)
class ColorClassPartition:
    classes: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.classes)

    def validate(self, n: int) -> None:
        seen: set[int] = set()
        for i, cls in enumerate(self.classes, start=1):
            if not cls:
                raise PreconditionError(f"class {i} is empty")
            for v in cls:
                if not 1 <= v <= n:
                    raise PreconditionError(f"class {i}: vertex {v} outside 1..{n}")
                if v in seen:
                    raise PreconditionError(f"vertex {v} appears in two classes")
                seen.add(v)
        if len(seen) != n:
            missing = min(set(range(1, n + 1)) - seen)
            raise PreconditionError(f"vertex {missing} belongs to no class")

    def class_of(self) -> dict[int, int]:
        return {v: i for i, cls in enumerate(self.classes) for v in cls}

    def to_text(self) -> str:
        lines = [f"colors {self.k}"]
        for i, cls in enumerate(self.classes, start=1):
            lines.append(f"class {i} : " + " ".join(map(str, cls)))
        return "\n".join(lines) + "\n"


def parse_partition(text: str) -> ColorClassPartition:
    k = None
    classes: dict[int, tuple[int, ...]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        try:
            if parts[0] == "colors" and len(parts) == 2 and k is None:
                k = int(parts[1])
            elif parts[0] == "class" and len(parts) >= 3 and parts[2] == ":":
                i = int(parts[1])
                if i in classes:
                    raise GraphFormatError(f"class {i} listed twice", lineno)
                classes[i] = tuple(sorted(int(x) for x in parts[3:]))
            else:
                raise GraphFormatError(f"unrecognized line {raw.strip()!r}", lineno)
        except GraphFormatError:
            raise
        except ValueError:
            raise GraphFormatError(f"non-integer value in {raw.strip()!r}", lineno) from None
    if k is None:
        raise GraphFormatError("missing 'colors' header")
    if sorted(classes) != list(range(1, k + 1)):
        raise GraphFormatError(f"expected classes 1..{k}")
    return ColorClassPartition(tuple(classes[i] for i in range(1, k + 1)))


def multicolored_independent_set(
    g: Graph, p: ColorClassPartition, budget: int = DEFAULT_BUDGET
) -> list[int] | None:
    """One vertex per class, pairwise non-adjacent; first hit in
    class-by-class ascending order."""
    p.validate(g.n)
    masks = [sum(1 << (v - 1) for v in cls) for cls in p.classes]
    picks: list[int] = []
    nodes = 0

    def rec(i: int, allowed: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(nodes, "multicolored independent set")
        if i == len(masks):
            return True
        for b in bits(masks[i] & allowed):
            nxt = allowed & ~g.adj[b]
            if all(masks[j] & nxt for j in range(i + 1, len(masks))):
                picks.append(b + 1)
                if rec(i + 1, nxt):
                    return True
                picks.pop()
        return False

    return sorted(picks) if rec(0, g.full_mask) else None


# -- grid tiling -------------------------------------------------------------


def solve_grid_tiling(inst: GridTilingInstance, budget: int = DEFAULT_BUDGET) -> Selection | None:
    """Cell-by-cell backtracking in row-major order, tiles in listed order;
    each tile must match the chosen tiles of the cells above and to the
    left."""
    cells = inst.cells()
    sel: Selection = {}
    nodes = 0

    def rec(idx: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(nodes, "grid tiling")
        if idx == len(cells):
            return True
        i, j = cells[idx]
        left = sel.get((i, j - 1))
        up = sel.get((i - 1, j))
        for tile in inst.tiles[(i, j)]:
            if left is not None and left[0] != tile[0]:
                continue
            if up is not None and up[1] != tile[1]:
                continue
            sel[(i, j)] = tile
            if rec(idx + 1):
                return True
            del sel[(i, j)]
        return False

    return dict(sel) if rec(0) else None

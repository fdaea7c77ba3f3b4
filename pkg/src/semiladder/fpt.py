"""Kernelization for Independent Set on graphs with small half-graph and
co-matching index.

The reduction rule looks for a homogeneous set ``S`` of size
``K = (k - 1)(2t - 1) + 2``: a clique or independent set such that every
outside vertex has fewer than ``2t`` neighbors in ``S`` or sees all of it.
An independent ``S`` answers yes outright.  For a clique ``S`` any member
can be deleted without changing the answer, because an independent set
through the deleted member can always swap it for another member of ``S``
that none of the remaining vertices see.

The existence threshold for such sets is astronomically large, so here the
set is found by direct search and the rule only fires on graphs of at
least ``threshold`` vertices.  Every deletion is verified, so correctness
never depends on the search succeeding.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field

from . import oracles
from .errors import BudgetExceeded, PreconditionError
from .graph import Graph, bits, induced_subgraph, twin_classes

DEFAULT_THRESHOLD = 64
DEFAULT_SEARCH_BUDGET = 200_000


class Shape(enum.Enum):
    ETA = "eta"
    CHI = "chi"
    CHI_STAR = "chi_star"
    THETA = "theta"
    DELTA = "delta"
    DELTA_STAR = "delta_star"


@dataclass(frozen=True)
class GammaFormula:
    shape: Shape
    t: int = 1

    def __post_init__(self):
        if self.t < 1:
            raise PreconditionError("t must be positive")

    @property
    def arity(self) -> int:
        if self.shape is Shape.ETA:
            return 2
        if self.shape in (Shape.CHI, Shape.CHI_STAR):
            return 2 * self.t
        return 2 * self.t + 1

    def pattern(self) -> tuple[bool, ...]:
        """Required adjacency of the witness ``y`` to each tuple position."""
        t = self.t
        if self.shape is Shape.CHI:
            return (True,) * t + (False,) * t
        if self.shape is Shape.CHI_STAR:
            return (False,) * t + (True,) * t
        if self.shape is Shape.THETA:
            return (True,) * t + (False,) + (True,) * t
        if self.shape is Shape.DELTA:
            return (False,) + (True,) * (2 * t)
        if self.shape is Shape.DELTA_STAR:
            return (True,) * (2 * t) + (False,)
        raise PreconditionError("eta has no witness pattern")

    def __str__(self) -> str:
        return self.shape.value if self.shape is Shape.ETA else f"{self.shape.value}_{2 * self.t}"


def gamma(t: int) -> tuple[GammaFormula, ...]:
    """The full formula family for parameter ``t``."""
    return tuple(GammaFormula(s, t) for s in Shape)


def eval_formula(g: Graph, phi: GammaFormula, tup: tuple[int, ...] | list[int]) -> bool:
    if len(tup) != phi.arity:
        raise PreconditionError(f"{phi} takes {phi.arity} arguments, got {len(tup)}")
    if len(set(tup)) != len(tup):
        raise PreconditionError("tuple entries must be distinct")
    for v in tup:
        if not 1 <= v <= g.n:
            raise PreconditionError(f"vertex {v} outside 1..{g.n}")
    if phi.shape is Shape.ETA:
        return g.adjacent(tup[0], tup[1])
    # y must avoid the tuple, be adjacent where the pattern says so and
    # non-adjacent elsewhere
    cand = g.full_mask
    for x, want in zip(tup, phi.pattern()):
        nx = g.adj[x - 1]
        cand &= nx if want else ~nx
        cand &= ~(1 << (x - 1))
    return cand != 0


@dataclass(frozen=True)
class Indiscernibility:
    ok: bool
    formula: GammaFormula | None = None
    first: tuple[int, ...] = ()
    second: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def is_indiscernible(
    g: Graph,
    seq: list[int] | tuple[int, ...],
    formulas,
    budget: int = 1_000_000,
) -> Indiscernibility:
    """Check that each formula has one truth value over all increasing
    tuples of ``seq``; on failure report two tuples that disagree."""
    if len(set(seq)) != len(seq):
        raise PreconditionError("sequence entries must be distinct")
    spent = 0
    for phi in formulas:
        seen: dict[bool, tuple[int, ...]] = {}
        for tup in itertools.combinations(seq, phi.arity):
            spent += 1
            if spent > budget:
                raise BudgetExceeded(spent, "indiscernibility check")
            val = eval_formula(g, phi, tup)
            if val not in seen:
                seen[val] = tup
                if len(seen) == 2:
                    return Indiscernibility(False, phi, seen[not val], tup)
    return Indiscernibility(True)


# -- homogeneous sets --------------------------------------------------------

CLIQUE = "clique"
INDEPENDENT = "independent"


@dataclass(frozen=True)
class HomogeneousSet:
    members: tuple[int, ...]
    kind: str
    t: int


@dataclass(frozen=True)
class HomogeneityCheck:
    ok: bool
    kind: str | None = None
    violator: int | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _set_kind(adj, mask: int) -> str | None:
    members = list(bits(mask))
    if all(not adj[v] & mask for v in members):
        return INDEPENDENT
    if all(adj[v] & mask == mask & ~(1 << v) for v in members):
        return CLIQUE
    return None


def verify_homogeneous_set(g: Graph, t: int, s) -> HomogeneityCheck:
    """Check that ``s`` is a clique or independent set and that every
    outside vertex has fewer than ``2t`` neighbors in it or sees all of it."""
    s = sorted(set(s))
    if not s:
        return HomogeneityCheck(False, reason="empty set")
    if any(not 1 <= v <= g.n for v in s):
        return HomogeneityCheck(False, reason="vertex out of range")
    mask = sum(1 << (v - 1) for v in s)
    kind = _set_kind(g.adj, mask)
    if kind is None:
        return HomogeneityCheck(False, reason="neither a clique nor an independent set")
    size = len(s)
    for w in bits(g.full_mask & ~mask):
        count = (g.adj[w] & mask).bit_count()
        if count >= 2 * t and count != size:
            return HomogeneityCheck(
                False, kind, w + 1, f"vertex {w + 1} sees {count} of {size} members"
            )
    return HomogeneityCheck(True, kind)


class _Search:
    def __init__(self, g: Graph, t: int, size: int, budget: int):
        self.g = g
        self.t = t
        self.size = size
        self.left = budget

    def tick(self, n: int = 1) -> bool:
        self.left -= n
        return self.left >= 0

    def accept(self, members) -> HomogeneousSet | None:
        if not self.tick(self.g.n):
            return None
        check = verify_homogeneous_set(self.g, self.t, members)
        if check:
            return HomogeneousSet(tuple(sorted(members)), check.kind, self.t)
        return None


def _from_twins(search: _Search) -> HomogeneousSet | None:
    for cls in twin_classes(search.g):
        if len(cls) >= search.size:
            found = search.accept(cls[: search.size])
            if found:
                return found
    return None


def _greedy_growth(search: _Search) -> HomogeneousSet | None:
    g = search.g
    adj = g.adj
    degrees = [a.bit_count() for a in adj]
    for seed in range(g.n):
        order = sorted(range(g.n), key=lambda u: (abs(degrees[u] - degrees[seed]), u))
        for want_clique in (False, True):
            if not search.tick():
                return None
            chosen = 1 << seed
            for u in order:
                if chosen.bit_count() == search.size:
                    break
                if chosen >> u & 1:
                    continue
                if want_clique:
                    ok = adj[u] & chosen == chosen
                else:
                    ok = not adj[u] & chosen
                if ok:
                    chosen |= 1 << u
            if chosen.bit_count() == search.size:
                found = search.accept([v + 1 for v in bits(chosen)])
                if found:
                    return found
            if search.left < 0:
                return None
    return None


def _exhaustive(search: _Search) -> HomogeneousSet | None:
    g = search.g
    adj = g.adj
    full = g.full_mask

    def rec(chosen: int, cand: int, clique: bool):
        if not search.tick():
            raise _OutOfBudget
        if chosen.bit_count() == search.size:
            return search.accept([v + 1 for v in bits(chosen)])
        if (chosen | cand).bit_count() < search.size:
            return None
        for v in bits(cand):
            cand &= ~(1 << v)
            nxt = cand & (adj[v] if clique else ~adj[v])
            found = rec(chosen | 1 << v, nxt, clique)
            if found:
                return found
        return None

    try:
        for clique in (False, True):
            found = rec(0, full, clique)
            if found:
                return found
    except _OutOfBudget:
        return None
    return None


class _OutOfBudget(Exception):
    pass


def find_homogeneous_set(
    g: Graph, t: int, size: int, budget: int = DEFAULT_SEARCH_BUDGET
) -> HomogeneousSet | None:
    """A verified homogeneous set of exactly ``size`` vertices, or ``None``
    when none was found within ``budget`` work units."""
    if size < 1:
        raise PreconditionError("size must be at least 1")
    if g.n < size:
        return None
    search = _Search(g, t, size, budget)
    for stage in (_from_twins, _greedy_growth, _exhaustive):
        found = stage(search)
        if found or search.left < 0:
            return found
    return None


# -- kernel ------------------------------------------------------------------


def kernel_size(k: int, t: int) -> int:
    return (k - 1) * (2 * t - 1) + 2


@dataclass
class KernelState:
    graph: Graph
    labels: list[int]
    k: int
    t: int
    deletions: list[int] = field(default_factory=list)
    early_answer: list[int] | None = None
    stop_reason: str = ""

    def to_text(self) -> str:
        deleted = ",".join(map(str, self.deletions)) or "-"
        early = "yes" if self.early_answer is not None else "none"
        return f"kernel n={self.graph.n} deleted={deleted} early={early}"


def kernel_reduce(
    g: Graph,
    k: int,
    t: int,
    threshold: int = DEFAULT_THRESHOLD,
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> KernelState:
    if k < 1 or t < 1:
        raise PreconditionError("k and t must be positive")
    size = kernel_size(k, t)
    state = KernelState(g, list(range(1, g.n + 1)), k, t)
    while state.graph.n >= threshold:
        found = find_homogeneous_set(state.graph, t, size, budget)
        if found is None:
            state.stop_reason = "no homogeneous set found"
            return state
        if found.kind == INDEPENDENT:
            state.early_answer = sorted(state.labels[v - 1] for v in found.members[:k])
            state.stop_reason = "independent homogeneous set"
            return state
        victim = found.members[0]
        state.deletions.append(state.labels[victim - 1])
        keep = [v for v in state.graph.vertices() if v != victim]
        state.graph, local = induced_subgraph(state.graph, keep)
        state.labels = [state.labels[v - 1] for v in local]
    state.stop_reason = "below threshold"
    return state


@dataclass(frozen=True)
class FptAnswer:
    yes: bool
    witness: list[int] | None
    kernel: KernelState

    def to_text(self) -> str:
        lines = ["yes" if self.yes else "no"]
        if self.witness is not None:
            lines.append(f"is {len(self.witness)} : " + " ".join(map(str, self.witness)))
        lines.append(self.kernel.to_text())
        return "\n".join(lines) + "\n"


def fpt_independent_set(
    g: Graph,
    k: int,
    t: int,
    threshold: int = DEFAULT_THRESHOLD,
    budget: int = DEFAULT_SEARCH_BUDGET,
    oracle_budget: int = oracles.DEFAULT_BUDGET,
) -> FptAnswer:
    """Decide whether ``g`` has an independent set of size ``k``."""
    state = kernel_reduce(g, k, t, threshold, budget)
    if state.early_answer is not None:
        return FptAnswer(True, state.early_answer, state)
    found = oracles.has_independent_set(state.graph, k, oracle_budget)
    if found is None:
        return FptAnswer(False, None, state)
    return FptAnswer(True, sorted(state.labels[v - 1] for v in found), state)

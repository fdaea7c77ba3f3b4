from __future__ import annotations

import itertools
import random
from pathlib import Path

import networkx as nx
import pytest
from hypothesis import strategies as st

from semiladder.graph import Graph

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def diagonal3_text() -> str:
    return (FIXTURES / "diagonal3.gt").read_text()


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices())
    h.add_edges_from(g.edges())
    return h


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    p = rng.random() if p is None else p
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < p]
    return Graph.from_edges(n, edges)


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


# -- brute-force references ----------------------------------------------------


def is_independent(g: Graph, s) -> bool:
    return all(not g.adjacent(u, v) for u, v in itertools.combinations(s, 2))


def brute_alpha(g: Graph) -> int:
    for size in range(g.n, -1, -1):
        if any(is_independent(g, s) for s in itertools.combinations(g.vertices(), size)):
            return size
    return 0


def brute_lexmin_mis(g: Graph) -> list[int]:
    a = brute_alpha(g)
    for s in itertools.combinations(g.vertices(), a):
        if is_independent(g, s):
            return list(s)
    raise AssertionError


def brute_gamma(g: Graph) -> int:
    for size in range(0, g.n + 1):
        for s in itertools.combinations(g.vertices(), size):
            covered = set(s)
            for v in s:
                covered.update(g.neighbors(v))
            if len(covered) == g.n:
                return size
    raise AssertionError


def brute_pattern(g: Graph, pred, h: int) -> bool:
    verts = list(g.vertices())
    for a in itertools.permutations(verts, h):
        rest = [v for v in verts if v not in a]
        for b in itertools.permutations(rest, h):
            if all(
                g.adjacent(a[i], b[j]) == pred(i + 1, j + 1) for i in range(h) for j in range(h)
            ):
                return True
    return False


def brute_index(g: Graph, pred, cap: int = 8) -> int:
    h = 0
    while h < cap and 2 * (h + 1) <= g.n and brute_pattern(g, pred, h + 1):
        h += 1
    return h

from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs, random_graph, to_nx
from semiladder import oracles
from semiladder.errors import PreconditionError
from semiladder.graph import Graph, Witness, complement, generate, verify_witness
from semiladder.gyarfas import (
    CLIQUE,
    COLORING,
    ENDPOINT_PATH,
    PATH,
    IndexBoundExceeded,
    approx_clique,
    approx_is_comatching,
    f_colors,
    g_colors,
    gyarfas,
    gyarfas_sub,
)
from semiladder.patterns import PatternKind, pattern_index


def check_outcome(g: Graph, r, k: int, t: int) -> None:
    if r.kind == CLIQUE:
        assert len(r.vertices) == k
        assert verify_witness(g, Witness("clique", list(r.vertices)))
    elif r.kind == PATH:
        assert len(r.vertices) == t
        assert verify_witness(g, Witness("induced-path", list(r.vertices)), t)
    else:
        assert r.kind == COLORING
        assert verify_witness(g, Witness("coloring", r.colors))
        assert r.color_count <= f_colors(k, t)
        assert max(r.colors.values()) <= f_colors(k, t)


def test_recurrences():
    assert f_colors(1, 5) == 0
    assert f_colors(2, 3) == 2
    assert f_colors(3, 3) == 6
    assert g_colors(3, 3, 2) == 3
    for k in range(1, 6):
        for t in range(1, 6):
            assert g_colors(k, t, t) == f_colors(k, t)
            assert g_colors(k, t, 1) == 0
    for k in range(1, 9):
        for t in range(1, 9):
            assert f_colors(k, t) < t**k
    with pytest.raises(PreconditionError):
        f_colors(0, 3)
    with pytest.raises(PreconditionError):
        g_colors(1, 1, 0)


def test_exact_integers_for_large_arguments():
    assert f_colors(40, 50) < 50**40
    assert isinstance(f_colors(40, 50), int)


def test_examples():
    r = gyarfas(Graph.edgeless(5), 2, 2)
    assert r.kind == COLORING and r.color_count == 1
    c5 = generate("cycle", [5]).graph
    r = gyarfas(c5, 3, 5)
    assert r.kind == COLORING and r.color_count <= 20
    check_outcome(c5, r, 3, 5)
    p5 = generate("path", [5]).graph
    r = gyarfas(p5, 3, 6)
    assert r.kind == COLORING and r.color_count <= 30


def test_sub_examples():
    star = Graph.from_edges(4, [(1, 2), (1, 3), (1, 4)])
    r = gyarfas_sub(star, 3, 4, 1, 4)
    assert r.kind == COLORING
    assert r.color_count == 2
    assert max(r.colors.values()) <= g_colors(3, 4, 4) == 12
    r = gyarfas_sub(star, 3, 4, 2, 1)
    assert r.kind == ENDPOINT_PATH and r.vertices == (2,)
    r = gyarfas_sub(Graph.edgeless(1), 3, 4, 1, 3)
    assert r.kind == COLORING and r.colors == {1: 1}


def test_sub_base_cases_take_precedence():
    single = Graph.edgeless(1)
    assert gyarfas_sub(single, 3, 1, 1, 1).kind == PATH
    assert gyarfas_sub(single, 1, 4, 1, 2).kind == CLIQUE
    assert gyarfas_sub(single, 3, 4, 1, 1).kind == ENDPOINT_PATH


def test_sub_preconditions():
    two = Graph.edgeless(2)
    with pytest.raises(PreconditionError):
        gyarfas_sub(two, 2, 3, 1, 2)
    with pytest.raises(PreconditionError):
        gyarfas_sub(Graph.edgeless(1), 2, 3, 1, 4)
    with pytest.raises(PreconditionError):
        gyarfas_sub(Graph.edgeless(1), 2, 3, 2, 2)


def test_endpoint_paths_start_at_v():
    rng = random.Random(3)
    for _ in range(200):
        g = random_graph(rng, rng.randint(2, 12), 0.3)
        if not nx.is_connected(to_nx(g)):
            continue
        v = rng.randint(1, g.n)
        l = rng.randint(1, 4)
        r = gyarfas_sub(g, 3, 4, v, l)
        if r.kind == ENDPOINT_PATH:
            assert r.vertices[0] == v and len(r.vertices) == l
            assert verify_witness(g, Witness("induced-path", list(r.vertices)))
        elif r.kind == COLORING:
            assert verify_witness(g, Witness("coloring", r.colors))
            assert max(r.colors.values()) <= g_colors(3, 4, l)
        else:
            check_outcome(g, r, 3, 4)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=10))
def test_outcomes_always_valid(g):
    for k in (1, 2, 3, 4):
        for t in (1, 2, 3, 4, 5, 6):
            check_outcome(g, gyarfas(g, k, t), k, t)


def test_deterministic():
    g = random_graph(random.Random(1), 30, 0.3)
    assert gyarfas(g, 3, 4) == gyarfas(g, 3, 4)


def test_long_paths_are_found():
    p = generate("path", [8]).graph
    r = gyarfas(p, 3, 4)
    assert r.kind == PATH and r.vertices == (1, 2, 3, 4)


def test_approx_clique_examples():
    k8 = generate("clique", [8]).graph
    c = approx_clique(k8, 1)
    assert verify_witness(k8, Witness("clique", c))
    assert 4 ** (len(c) + 2) >= 8
    c5 = generate("cycle", [5]).graph
    c = approx_clique(c5, 2)
    assert len(c) >= 1 and verify_witness(c5, Witness("clique", c))


def test_approx_clique_path_certificate():
    p6 = generate("path", [6]).graph
    with pytest.raises(IndexBoundExceeded) as info:
        approx_clique(p6, 1)
    assert "matching index exceeds 1" in str(info.value)
    assert verify_witness(p6, Witness("induced-path", list(info.value.path)), 4)


def test_approx_clique_p4_stays_valid():
    # the recursion colors P4 without ever exposing the path, so the
    # result is an ordinary clique that still meets the bound
    p4 = generate("path", [4]).graph
    c = approx_clique(p4, 1)
    assert verify_witness(p4, Witness("clique", c))
    assert 4 ** (len(c) + 2) >= oracles.clique_number(p4)


def test_approx_is_comatching_examples():
    e8 = Graph.edgeless(8)
    s = approx_is_comatching(e8, 1)
    assert verify_witness(e8, Witness("independent-set", s))
    assert 4 ** (len(s) + 2) >= 8
    assert len(approx_is_comatching(generate("clique", [6]).graph, 1)) == 1
    with pytest.raises(IndexBoundExceeded, match="co-matching"):
        approx_is_comatching(complement(generate("path", [6]).graph), 1)


def test_guarantees_on_random_graphs():
    rng = random.Random(17)
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 12))
        m = pattern_index(g, PatternKind.MATCHING).value
        c = approx_clique(g, m)
        assert verify_witness(g, Witness("clique", c))
        assert (2 * m + 2) ** (len(c) + 2) >= oracles.clique_number(g)
        mc = pattern_index(g, PatternKind.COMATCHING).value
        s = approx_is_comatching(g, mc)
        assert verify_witness(g, Witness("independent-set", s))
        assert (2 * mc + 2) ** (len(s) + 2) >= oracles.independence_number(g)


def test_text_forms():
    c5 = generate("cycle", [5]).graph
    assert gyarfas(c5, 3, 5).to_text(5).startswith("coloring ")
    assert gyarfas(generate("path", [8]).graph, 3, 4).to_text() == "path 4 : 1 2 3 4"
    assert gyarfas(generate("clique", [4]).graph, 3, 9).to_text() == "clique 3 : 1 2 3"

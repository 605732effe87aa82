import json
import random

import pytest

from colorcert import structure
from colorcert.catalog import two_join_catalog
from colorcert.graphs import (
    MultiGraph, SimpleGraph, complete_bipartite, complete_graph,
    complete_multipartite_2t, cycle_graph, join, line_graph, path_graph,
)
from conftest import random_multigraph, random_simple_graph


def test_claw_free_recognizer():
    claw = complete_bipartite(1, 3)
    ok, witness = structure.is_claw_free(claw)
    assert not ok
    c, x, y, z = witness
    assert claw.has_edge(c, x) and claw.has_edge(c, y) and claw.has_edge(c, z)
    assert not claw.has_edge(x, y)
    assert structure.is_claw_free(cycle_graph(5))[0]
    assert structure.is_claw_free(complete_graph(4))[0]


def test_line_graphs_are_claw_free_and_quasi_line(rng):
    for _ in range(10):
        h = random_multigraph(rng, rng.randint(2, 5), rng.randint(1, 6))
        g, _ = line_graph(h)
        assert structure.is_claw_free(g)[0]
        assert structure.is_quasi_line(g)[0]


def test_quasi_line_negative():
    # the 5-wheel is claw-free but not quasi-line (hub neighborhood is C5)
    wheel = join(complete_graph(1), cycle_graph(5))
    assert structure.is_claw_free(wheel)[0]
    ok, v = structure.is_quasi_line(wheel)
    assert not ok and v == 0


def test_recognize_line_graph_roundtrip(rng):
    checked = 0
    while checked < 12:
        h = random_multigraph(rng, rng.randint(2, 5), rng.randint(1, 5))
        g, _ = line_graph(h)
        if g.n > 12 or g.n == 0:
            continue
        root = structure.recognize_line_graph(g)
        assert root is not None
        g2, _ = line_graph(root)
        assert structure._isomorphic(g, g2)
        checked += 1


def test_recognize_line_graph_negative():
    assert structure.recognize_line_graph(complete_bipartite(1, 3)) is None
    # K5 minus a perfect matching-ish: C5 complement is C5, a line graph
    assert structure.recognize_line_graph(cycle_graph(5)) is not None


def test_homogeneous_pairs_in_c4():
    c4 = cycle_graph(4)
    pairs = structure.find_homogeneous_pairs(c4)
    found = {(tuple(sorted(p.a1)), tuple(sorted(p.a2))) for p in pairs}
    assert ((0, 1), (2, 3)) in found or ((2, 3), (0, 1)) in found
    nonlinear = structure.find_homogeneous_pairs(c4, nonlinear_only=True)
    assert nonlinear  # C4 on A1 union A2


def test_linear_and_circular_interval():
    assert structure.is_linear_interval(path_graph(5)) is not None
    assert structure.is_linear_interval(cycle_graph(5)) is None
    assert structure.is_circular_interval(cycle_graph(5)) is not None
    assert structure.is_circular_interval(complete_graph(4)) is not None
    claw = complete_bipartite(1, 3)
    assert structure.is_circular_interval(claw) is None


def test_builtin_strip_instances_verify():
    for tag, name, g, tj in two_join_catalog():
        ok, why = structure.verify_2join(g, tj)
        assert ok, (tag, why)


def test_verify_2join_rejects_stray_edge():
    # P5 strip with an extra edge from the strip interior to the outside
    g = SimpleGraph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 0)])
    _, _, _, tj = two_join_catalog()[1]
    ok, why = structure.verify_2join(g, tj)
    assert not ok and "(iv)" in why


def test_twojoin_json_roundtrip():
    _, _, _, tj = two_join_catalog()[1]
    assert structure.TwoJoin.from_json(tj.to_json()) == tj


def test_reduce_2join_shrinks_and_verifies():
    # reducible strip: a path P5 inside a 7-vertex host
    g = SimpleGraph.from_edges(
        7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6)])
    tj = structure.TwoJoin(
        frozenset({1, 2, 3, 4, 5}), frozenset({1}), frozenset({5}),
        frozenset({0}), frozenset({6}))
    ok, _ = structure.verify_2join(g, tj)
    assert ok
    reduced = structure.reduce_2join(g, tj)
    assert len(reduced.h) < len(tj.h)
    ok, why = structure.verify_2join(g, reduced)
    assert ok, why


def test_reduce_2join_iterates_to_fixpoint(rng):
    # iterated reduction strictly shrinks and keeps verifying
    for length in (4, 5, 6):
        n = length + 2
        edges = [(i, i + 1) for i in range(n - 1)]
        g = SimpleGraph.from_edges(n, edges)
        tj = structure.TwoJoin(
            frozenset(range(1, n - 1)), frozenset({1}),
            frozenset({n - 2}), frozenset({0}), frozenset({n - 1}))
        sizes = [len(tj.h)]
        while True:
            try:
                tj = structure.reduce_2join(g, tj)
            except ValueError:
                break
            ok, why = structure.verify_2join(g, tj)
            assert ok, why
            assert len(tj.h) < sizes[-1]
            sizes.append(len(tj.h))
        assert len(sizes) >= 1


def test_compose_trivial_cases():
    # single hub edge with a K1 strip gives K1
    spec = structure.CompositionSpec(
        hub_n=2, hub_edges=((0, 1),),
        strips=(structure.Strip(complete_graph(1), (0,), (0,)),))
    g = structure.compose(spec)
    assert g.n == 1 and not g.edges

    # triangle hub with K1 strips gives the line graph of the triangle
    spec = structure.CompositionSpec(
        hub_n=3, hub_edges=((0, 1), (1, 2), (2, 0)),
        strips=tuple(structure.Strip(complete_graph(1), (0,), (0,))
                     for _ in range(3)))
    g = structure.compose(spec)
    assert g.n == 3 and len(g.edges) == 3  # K3


def test_compose_matches_line_graph_of_replicated_hub():
    # two parallel hub edges with K2 strips (X = Y = V) behave like a
    # 4-fold multigraph edge
    spec = structure.CompositionSpec(
        hub_n=2, hub_edges=((0, 1), (0, 1)),
        strips=tuple(structure.Strip(complete_graph(2), (0, 1), (0, 1))
                     for _ in range(2)))
    g = structure.compose(spec)
    expect, _ = line_graph(MultiGraph.from_edges(2, [(0, 1, 4)]))
    assert structure._isomorphic(g, expect)


def test_compositions_are_quasi_line(rng):
    # random small compositions of linear interval strips stay quasi-line
    for _ in range(5):
        hub_n = 2
        strips = []
        hub_edges = []
        for _ in range(rng.randint(1, 2)):
            k = rng.randint(1, 3)
            strip = path_graph(k)
            strips.append(structure.Strip(strip, (0,), (k - 1,)))
            hub_edges.append((0, 1))
        spec = structure.CompositionSpec(
            hub_n=hub_n, hub_edges=tuple(hub_edges), strips=tuple(strips))
        g = structure.compose(spec)
        assert structure.is_claw_free(g)[0]
        assert structure.is_quasi_line(g)[0]


def test_bk_free_scan_flags_reducible_join():
    g = join(complete_graph(4), SimpleGraph.from_edges(2, []))
    hits = structure.bk_free_scan(g, delta=6)
    assert hits
    kinds = {kind for _, kind, _ in hits}
    assert "orientation" in kinds
    whole = [h for h in hits if len(h[0]) == g.n]
    assert whole and whole[0][2].check()


def test_bk_free_scan_empty_on_small_clique():
    # a lone triangle with delta 3: f_H values fall below 1 on some
    # subgraphs, nothing is flagged
    g = complete_graph(3)
    hits = structure.bk_free_scan(g, delta=4)
    assert isinstance(hits, list)

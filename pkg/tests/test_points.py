from itertools import product

import numpy as np
import pytest

from toricreg.errors import TooLargeError
from toricreg.field import Field
from toricreg.graph import (
    Multigraph,
    cycle_graph,
    graph_stats,
    parallel_composition,
    path_graph,
)
from toricreg.points import degree_formula, enumerate_points, evaluate_monomial


def test_single_edge_is_one_point():
    ps = enumerate_points(path_graph(1), 3)
    assert ps.as_tuples() == [(0,)]
    assert degree_formula(graph_stats(path_graph(1)), 3) == 1


def test_path2_points_q3():
    ps = enumerate_points(path_graph(2), 3)
    assert ps.as_tuples() == [(0, 0), (0, 1)]


def test_triangle_points_q3():
    ps = enumerate_points(cycle_graph(3), 3)
    assert set(ps.as_tuples()) == {
        (0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1)
    }


def test_degree_formula_branches():
    # odd q, non-bipartite
    assert degree_formula(graph_stats(cycle_graph(3)), 5) == 16
    # even q, non-bipartite
    assert degree_formula(graph_stats(cycle_graph(3)), 4) == 9
    # bipartite, disconnected
    two_edges = Multigraph(4, [(0, 1), (2, 3)])
    assert degree_formula(graph_stats(two_edges), 3) == 2
    # q = 2: single point for connected graphs
    assert degree_formula(graph_stats(cycle_graph(5)), 2) == 1


SMALL_GRAPHS = [
    path_graph(1),
    path_graph(2),
    path_graph(3),
    cycle_graph(3),
    cycle_graph(4),
    cycle_graph(5),
    parallel_composition((1, 1)),
    parallel_composition((1, 2, 2)),
    parallel_composition((2, 3)),
    Multigraph(4, [(0, 1), (2, 3)]),
    Multigraph(5, [(0, 1), (1, 2), (3, 4)]),
]


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_enumeration_matches_degree_formula(q):
    for g in SMALL_GRAPHS:
        ps = enumerate_points(g, q)
        assert ps.size == degree_formula(graph_stats(g), q)


@pytest.mark.parametrize("q", [3, 4])
def test_canonicalization_matches_lambda_scaling(q):
    """Two raw coordinate vectors name the same projective point exactly
    when one is a scalar multiple of the other; in exponent form that is
    adding a constant mod q-1.  The canonical form must agree."""
    for g in (path_graph(2), cycle_graph(3)):
        qm1 = q - 1
        raws = []
        for e in product(range(qm1), repeat=g.n):
            raws.append(
                tuple(
                    (e[u] + e[w]) % qm1 for u, w in g.edges
                )
            )
        def canon(raw):
            return tuple((x - raw[0]) % qm1 for x in raw)

        for r1 in raws:
            for r2 in raws:
                scaled = any(
                    all((x + c) % qm1 == y for x, y in zip(r1, r2))
                    for c in range(qm1)
                )
                assert scaled == (canon(r1) == canon(r2))


def test_points_are_canonical_and_unique():
    for q in (3, 4, 5):
        ps = enumerate_points(parallel_composition((2, 2)), q)
        pts = ps.as_tuples()
        assert all(p[0] == 0 for p in pts)
        assert len(pts) == len(set(pts))


def test_enumeration_cap():
    g = cycle_graph(12)
    with pytest.raises(TooLargeError):
        enumerate_points(g, 5, cap=1000)


def test_evaluate_monomial_examples():
    f3 = Field(3)
    # empty exponent vector: the constant 1
    assert evaluate_monomial((0, 1), (0, 0), f3) == f3.one
    # path(2), q=3, point (1, 2) as exponents (0, 1), monomial t1*t2 -> 2
    val = evaluate_monomial((0, 1), (1, 1), f3)
    assert f3.to_int(val) == 2
    f4 = Field(4)
    assert evaluate_monomial((0, 1, 2), (1, 1, 1), f4) == f4.one  # g^3 = 1
    with pytest.raises(ValueError):
        evaluate_monomial((0, 1), (1, 1, 1), f3)

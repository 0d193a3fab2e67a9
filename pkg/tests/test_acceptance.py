"""Acceptance suite: one test per criterion, exact equality throughout.

Heavy profile computations are memoised at module scope so the sweep
criteria and the structural-property criteria share one run per
(instance, q) pair.  Each test prints a PASS line when it completes
(visible with -s; under plain pytest the test name itself is the line).
"""

import random
from functools import lru_cache
from itertools import combinations, combinations_with_replacement

import numpy as np
import pytest

from toricreg.errors import NotHomogeneousError
from toricreg.field import Field
from toricreg.formulas import (
    block_additive_reg,
    reg_closed_form,
    reg_parallel,
    verify_bounds,
)
from toricreg.graph import (
    Multigraph,
    complete_bipartite,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    graph_stats,
    parallel_composition,
    path_graph,
    simplify,
    star_graph,
)
from toricreg.harness import auto_witnesses, default_catalog
from toricreg.hilbert import monomial_matrix, monomials_of_degree, regularity_rank
from toricreg.ideal import (
    binomial_in_ideal,
    ear_swap,
    parallel_fg_binomial,
    regularity_sieve,
    residue_of,
    same_parity_ear_pair,
)
from toricreg.points import degree_formula, enumerate_points, evaluate_monomial

QS = (3, 4, 5)


def parallel_multisets(parity=None, max_k=5, max_edges=9):
    out = []
    for r in (2, 3):
        for ks in combinations_with_replacement(range(1, max_k + 1), r):
            if sum(ks) > max_edges:
                continue
            if parity == "odd" and any(k % 2 == 0 for k in ks):
                continue
            if parity == "even" and (any(k % 2 for k in ks) or any(k > 4 for k in ks)):
                continue
            out.append(ks)
    return out


@lru_cache(maxsize=None)
def parallel_profile(ks, q):
    return regularity_rank(parallel_composition(ks), q)


@lru_cache(maxsize=None)
def parallel_sieve(ks, q, edge=0):
    return regularity_sieve(parallel_composition(ks), q, edge=edge)


@lru_cache(maxsize=None)
def graph_profile_by_label(label, q):
    entry = {e.label: e for e in default_catalog()}[label]
    return regularity_rank(entry.graph, q)


def _report(criterion, detail):
    print(f"ACCEPTANCE {criterion}: PASS  {detail}")


def test_criterion_01_parallel_all_odd_lengths():
    specs = parallel_multisets("odd")
    assert (3, 3, 3) in specs and (1, 3, 5) in specs
    checked = 0
    for ks in specs:
        expected_scale = sum(k // 2 for k in ks)
        for q in QS:
            expected = expected_scale * (q - 2)
            prof = parallel_profile(ks, q)
            assert prof.regularity == expected, (ks, q, prof.regularity, expected)
            assert parallel_sieve(ks, q) == expected, (ks, q)
            checked += 1
    _report(1, f"{checked} odd-length instances")


def test_criterion_02_parallel_all_even_lengths():
    specs = parallel_multisets("even")
    assert (2, 2) in specs and (2, 2, 4) in specs
    checked = 0
    for ks in specs:
        expected_scale = sum(k // 2 for k in ks) - 1
        for q in QS:
            expected = expected_scale * (q - 2)
            prof = parallel_profile(ks, q)
            assert prof.regularity == expected, (ks, q, prof.regularity, expected)
            assert parallel_sieve(ks, q) == expected, (ks, q)
            checked += 1
    _report(2, f"{checked} even-length instances")


MIXED_PINNED = [
    # one instance per mixed/known row, with pinned expected values
    ((1, 2), 3, 2),
    ((1, 2, 2), 3, 2),
    ((3, 2, 2), 3, 4),
    ((3, 5, 2), 3, 5),
    ((2, 4), 3, 2),  # all even row cross-check
    ((3, 3), 3, 2),  # all odd row cross-check
    ((2, 2, 3, 3), 3, 4),  # several odd and several even paths
]


def test_criterion_03_mixed_parity_rows():
    for ks, q, expected in MIXED_PINNED:
        assert reg_parallel(ks, q) == expected, (ks, q)
        prof = parallel_profile(tuple(sorted(ks)), q)
        assert prof.regularity == expected, (ks, q, prof.regularity)
        assert parallel_sieve(tuple(sorted(ks)), q) == expected
    _report(3, f"{len(MIXED_PINNED)} pinned rows incl. every dispatch case")


def test_criterion_04_degree_formula_vs_enumeration():
    checked = 0
    for entry in default_catalog():
        stats = graph_stats(entry.graph)
        for q in (2, 3, 4, 5):
            expected = degree_formula(stats, q)
            assert enumerate_points(entry.graph, q).size == expected, (entry.label, q)
            checked += 1
    # pinned non-bipartite and disconnected values
    assert degree_formula(graph_stats(cycle_graph(3)), 5) == 16
    assert degree_formula(graph_stats(cycle_graph(3)), 4) == 9
    two_edges = Multigraph(4, [(0, 1), (2, 3)])
    assert enumerate_points(two_edges, 3).size == 2
    _report(4, f"{checked} (instance, q) pairs")


def test_criterion_05_closed_form_table_rows():
    trees = [path_graph(2), path_graph(3), path_graph(4), star_graph(3), star_graph(4)]
    for g in trees:
        for q in QS:
            assert regularity_rank(g, q).regularity == (g.s - 1) * (q - 2)
    for length in (4, 6):
        for q in QS:
            expected = (length // 2 - 1) * (q - 2)
            assert regularity_rank(cycle_graph(length), q).regularity == expected
    assert regularity_rank(complete_bipartite(2, 3), 3).regularity == 2
    assert regularity_rank(complete_multipartite(1, 1, 2), 3).regularity == 2
    # complete graph on 4 vertices: ceil((n-1)(q-2)/2) = 2 at q = 3
    k4 = regularity_rank(complete_graph(4), 3).regularity
    assert k4 == 2 == reg_closed_form("complete", (4,), 3).value
    # informational: at n = 3 the complete-graph row (q-2) disagrees with
    # the odd-cycle/torus value 2(q-2); the rank method settles it
    k3 = regularity_rank(complete_graph(3), 3).regularity
    assert k3 == 2 * (3 - 2)
    assert not reg_closed_form("complete", (3,), 3).applicable
    _report(5, "trees, even cycles, bicliques, multipartite, complete")


def _partition_labels(rows):
    _, inverse = np.unique(rows, axis=0, return_inverse=True)
    return inverse


def test_criterion_06_congruence_vs_point_evaluation_exhaustive():
    graphs = [
        path_graph(2),
        path_graph(3),
        path_graph(4),
        path_graph(5),
        star_graph(3),
        star_graph(4),
        cycle_graph(3),
        cycle_graph(4),
        cycle_graph(5),
        parallel_composition((1, 1)),
        parallel_composition((1, 1, 1)),
        parallel_composition((1, 2, 2)),
        parallel_composition((1, 1, 3)),
        complete_bipartite(2, 2),
    ]
    checked_pairs = 0
    for g in graphs:
        assert g.s <= 5
        for q in (3, 4):
            field = Field(q)
            ps = enumerate_points(g, q)
            pts = np.asarray(ps.points, dtype=np.int64)
            for d in range(5):
                mons = monomial_matrix(g.s, d)
                residues = np.array(
                    [residue_of(g, q, a) for a in mons], dtype=np.int64
                )
                evals = (mons @ pts.T) % (q - 1)
                res_labels = _partition_labels(residues)
                eval_labels = _partition_labels(evals)
                # identical partitions <=> identical verdict on every
                # homogeneous pair of degree-d monomials
                pairing = {}
                for r_lab, e_lab in zip(res_labels, eval_labels):
                    assert pairing.setdefault(r_lab, e_lab) == e_lab
                assert len(set(res_labels.tolist())) == len(
                    set(eval_labels.tolist())
                )
                checked_pairs += len(mons) * (len(mons) - 1) // 2
    # spot-check the public operations on a sample of explicit pairs
    rng = random.Random(6)
    g = parallel_composition((1, 2, 2))
    field = Field(3)
    ps = enumerate_points(g, 3)
    for _ in range(200):
        d = rng.randint(1, 4)
        mons = monomials_of_degree(g.s, d)
        a, b = rng.choice(mons), rng.choice(mons)
        direct = all(
            evaluate_monomial(p, a, field) == evaluate_monomial(p, b, field)
            for p in ps.as_tuples()
        )
        assert binomial_in_ideal(g, 3, a, b) == direct
    _report(6, f"{checked_pairs} homogeneous pairs, zero discrepancies")


def test_criterion_07_structural_bounds_on_catalog():
    rows_by_name = {}
    checked = 0
    for entry in default_catalog():
        g = entry.graph
        reg = regularity_rank(g, 3).regularity
        witnesses = auto_witnesses(g, entry.kind, entry.params)
        rows = verify_bounds(g, 3, reg, witnesses)
        for row in rows:
            assert row.satisfied, (entry.label, row)
            rows_by_name.setdefault(row.name, 0)
            rows_by_name[row.name] += 1
            if row.name == "pendant":
                assert row.relation == "==" and row.lhs == row.rhs
            checked += 1
    for name in (
        "pendant",
        "contraction",
        "cover",
        "independent_set",
        "bipartite_bound",
        "parity_split",
    ):
        assert rows_by_name.get(name, 0) > 0, f"no {name} rows generated"
    # pendant equality at q = 4 as well: adding a leaf adds exactly q-2
    for g, v in ((path_graph(3), 0), (star_graph(3), 1)):
        reg = regularity_rank(g, 4).regularity
        from toricreg.formulas import PendantWitness

        (row,) = verify_bounds(g, 4, reg, [PendantWitness(v)])
        assert row.satisfied and row.relation == "=="
    _report(7, f"{checked} satisfied bound rows: {rows_by_name}")


def test_criterion_08_block_additivity_on_bipartite_cacti():
    cactus = Multigraph(
        7, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (4, 5), (5, 6), (0, 6)]
    )
    for q, expected in ((3, 3), (4, 6)):
        per_block = [(4 // 2 - 1) * (q - 2)] * 2
        assert block_additive_reg(cactus, q, per_block) == expected
        assert regularity_rank(cactus, q).regularity == expected
    # trees are cacti whose blocks are single edges
    spider = Multigraph(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)])
    for g in (path_graph(2), path_graph(4), spider):
        for q in (3, 4):
            expected = block_additive_reg(g, q, [0] * g.s)
            assert expected == (g.s - 1) * (q - 2)
            assert regularity_rank(g, q).regularity == expected
    _report(8, "two-block cacti and path trees match the rank values")


def test_criterion_09_ear_swaps_and_crossing_products():
    rng = random.Random(20260809)
    graph_count = 0
    for entry in default_catalog():
        g = entry.graph
        pairs = [
            (i, j)
            for i in range(g.s)
            for j in range(i + 1, g.s)
            if same_parity_ear_pair(g, i, j)
        ]
        if not pairs:
            continue
        graph_count += 1
        for _ in range(1000):
            i, j = rng.choice(pairs)
            d = rng.randint(1, 5)
            a = [0] * g.s
            b = [0] * g.s
            for _ in range(d):
                a[rng.randrange(g.s)] += 1
                b[rng.randrange(g.s)] += 1
            before = binomial_in_ideal(g, 3, a, b)
            after = binomial_in_ideal(
                g, 3, ear_swap(g, tuple(a), i, j), ear_swap(g, tuple(b), i, j)
            )
            assert before == after, (entry.label, i, j, a, b)
    assert graph_count >= 10
    fg_checked = 0
    for ks in parallel_multisets() + [(2, 2, 3, 3)]:
        g = parallel_composition(ks)
        for q in (3, 4):
            for i, j in combinations(range(len(ks)), 2):
                a, b = parallel_fg_binomial(ks, i, j)
                if (ks[i] - ks[j]) % 2 == 0:
                    assert binomial_in_ideal(g, q, a, b), (ks, i, j, q)
                    fg_checked += 1
                else:
                    with pytest.raises(NotHomogeneousError):
                        binomial_in_ideal(g, q, a, b)
    _report(9, f"{graph_count} graphs x 1000 swaps; {fg_checked} crossing products")


def test_criterion_10_profiles_edge_choice_and_simplify():
    # Hilbert profiles strictly increasing then constant on every sweep
    # instance computed for criteria 1-3
    profiles = 0
    for ks in parallel_multisets("odd") + parallel_multisets("even"):
        for q in QS:
            prof = parallel_profile(ks, q)
            assert prof.strictly_increasing_then_constant(), (ks, q)
            profiles += 1
    for ks, q, _ in MIXED_PINNED:
        prof = parallel_profile(tuple(sorted(ks)), q)
        assert prof.strictly_increasing_then_constant(), (ks, q)
        profiles += 1
    # sieve value independent of the chosen edge (all edges, s <= 6)
    j_checked = 0
    for entry in default_catalog():
        g = entry.graph
        if g.s > 6:
            continue
        for q in QS:
            values = {regularity_sieve(g, q, edge=j) for j in range(g.s)}
            assert len(values) == 1, (entry.label, q, values)
            j_checked += 1
    # regularity invariant under dropping parallel copies
    for ks in ((1, 1), (1, 1, 1), (1, 1, 2), (1, 1, 3), (1, 1, 4)):
        g = parallel_composition(ks)
        gs = simplify(g)
        for q in (3, 4):
            assert (
                regularity_rank(g, q).regularity
                == regularity_rank(gs, q).regularity
            )
            assert regularity_sieve(g, q) == regularity_sieve(gs, q)
    _report(10, f"{profiles} profiles, {j_checked} edge-independence sweeps")

import pytest

from toricreg.errors import InvalidWitnessError, NotApplicableError
from toricreg.formulas import (
    BipartiteBoundWitness,
    ContractionWitness,
    CoverWitness,
    IndependentSetWitness,
    ParitySplitWitness,
    PendantWitness,
    block_additive_reg,
    detect_closed_form,
    reg_closed_form,
    reg_parallel,
    verify_bounds,
)
from toricreg.graph import (
    Multigraph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    parallel_composition,
    path_graph,
)
from toricreg.hilbert import regularity_rank


def test_reg_parallel_all_six_cases():
    # all even
    assert reg_parallel((2, 4), 3) == 2
    assert reg_parallel((2, 2, 2), 5) == 6
    # all odd
    assert reg_parallel((3, 3, 5), 5) == 12
    assert reg_parallel((1, 1), 7) == 0
    # one odd, two paths
    assert reg_parallel((1, 2), 3) == 2
    assert reg_parallel((3, 4), 4) == 12
    # one odd, more than two paths
    assert reg_parallel((1, 2, 2), 3) == 2
    assert reg_parallel((3, 2, 2), 3) == 4
    # several odd, exactly one even
    assert reg_parallel((3, 5, 2), 3) == 5
    # several odd, several even
    assert reg_parallel((3, 3, 2, 2), 3) == 4


def test_reg_parallel_order_insensitive():
    assert reg_parallel((2, 3, 5), 3) == reg_parallel((5, 3, 2), 3)
    assert reg_parallel((2, 1), 4) == reg_parallel((1, 2), 4)


def test_closed_form_rows():
    assert reg_closed_form("tree", (3,), 4).value == 4
    assert reg_closed_form("biclique", (2, 3), 3).value == 2
    assert reg_closed_form("multipartite", (1, 1, 2), 3).value == 2
    assert reg_closed_form("complete", (4,), 3).value == 2
    assert reg_closed_form("cycle", (6,), 4).value == 4
    assert reg_closed_form("cycle", (5,), 3).value == 4  # odd: torus row
    assert reg_closed_form("star", (4,), 5).value == 9
    assert reg_closed_form("parallel", (1, 2), 3).value == 2


def test_complete_graph_n3_is_flagged():
    res = reg_closed_form("complete", (3,), 3)
    assert not res.applicable
    assert "torus" in res.reason


def test_block_additive_examples():
    cactus = Multigraph(
        7, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (4, 5), (5, 6), (0, 6)]
    )
    assert block_additive_reg(cactus, 3, [1, 1]) == 3
    assert block_additive_reg(path_graph(3), 3, [0, 0, 0]) == 2
    assert block_additive_reg(cycle_graph(6), 4, [4]) == 4  # single block
    with pytest.raises(NotApplicableError):
        block_additive_reg(cycle_graph(3), 3, [2])
    with pytest.raises(NotApplicableError):
        block_additive_reg(parallel_composition((1, 1)), 3, [0])
    with pytest.raises(ValueError):
        block_additive_reg(path_graph(3), 3, [0, 0])


def test_detect_closed_form():
    assert detect_closed_form(path_graph(4), 3).value == 3
    assert detect_closed_form(cycle_graph(5), 3).value == 4
    assert detect_closed_form(cycle_graph(6), 3).value == 2
    cactus = Multigraph(
        7, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (4, 5), (5, 6), (0, 6)]
    )
    assert detect_closed_form(cactus, 3).value == 3
    # simplification happens first: a doubled edge is still a tree
    assert detect_closed_form(parallel_composition((1, 1)), 3).value == 0
    assert not detect_closed_form(Multigraph(4, [(0, 1), (2, 3)]), 3).applicable
    assert not detect_closed_form(complete_graph(4), 3).applicable


def test_verify_bounds_rows():
    g = path_graph(3)
    reg = regularity_rank(g, 3).regularity
    rows = verify_bounds(
        g,
        3,
        reg,
        [
            PendantWitness(0),
            ContractionWitness(0, 2),
            CoverWitness((0, 1), (1, 2)),
            IndependentSetWitness((0,)),
            BipartiteBoundWitness(),
        ],
    )
    assert all(r.satisfied for r in rows)
    pendant = rows[0]
    assert pendant.relation == "==" and pendant.lhs == pendant.rhs == 2


def test_parity_split_bound():
    g = parallel_composition((1, 2, 2))
    reg = regularity_rank(g, 3).regularity
    (row,) = verify_bounds(g, 3, reg, [ParitySplitWitness((1, 2, 2))])
    assert row.satisfied and row.lhs == 2 and row.rhs == 2


def test_independent_set_bound_path5():
    g = path_graph(5)
    reg = regularity_rank(g, 3).regularity
    (row,) = verify_bounds(g, 3, reg, [IndependentSetWitness((1, 4))])
    assert row.satisfied and row.lhs == 4 and row.rhs == 2


def test_invalid_witnesses():
    g = path_graph(3)
    with pytest.raises(InvalidWitnessError):
        verify_bounds(g, 3, 2, [PendantWitness(1)])
    with pytest.raises(InvalidWitnessError):
        verify_bounds(g, 3, 2, [ContractionWitness(0, 1)])
    with pytest.raises(InvalidWitnessError):
        verify_bounds(g, 3, 2, [CoverWitness((0,), (1, 2))])  # no overlap
    with pytest.raises(InvalidWitnessError):
        verify_bounds(g, 3, 2, [CoverWitness((0, 1), (1,))])  # edge 2 uncovered
    with pytest.raises(InvalidWitnessError):
        verify_bounds(g, 3, 2, [IndependentSetWitness((0, 1))])  # adjacent
    with pytest.raises(InvalidWitnessError):
        verify_bounds(g, 3, 2, [IndependentSetWitness((0, 2))])  # no edge left
    with pytest.raises(InvalidWitnessError):
        verify_bounds(cycle_graph(3), 3, 2, [BipartiteBoundWitness()])
    with pytest.raises(InvalidWitnessError):
        verify_bounds(g, 3, 2, [ParitySplitWitness((2, 2))])


def test_bipartite_bound_on_biclique():
    g = complete_bipartite(2, 3)
    reg = regularity_rank(g, 3).regularity
    (row,) = verify_bounds(g, 3, reg, [BipartiteBoundWitness()])
    assert row.satisfied and row.rhs == 2


def test_formula_matches_rank_spot_checks():
    for ks, q in (((1, 3), 3), ((2, 2), 4), ((1, 2, 3), 3), ((3, 3), 4)):
        g = parallel_composition(ks)
        assert reg_parallel(ks, q) == regularity_rank(g, q).regularity

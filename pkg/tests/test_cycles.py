"""Cycle census: enumeration vs subset DP vs subset/Hamiltonian oracle,
budget semantics, witness searches."""

import pytest

from graphsig.cycles import (CycleCensus, census, count_cycles_of_length,
                             count_residue_cycles, cycle_counts_exact,
                             cycles_through_vertex, exact_census,
                             SearchBudgetExceeded)
from graphsig.graphs import (Graph, complete_graph, cycle_graph, delete_edge,
                             path_graph, star_graph)
from graphsig.transforms import power

import oracles


def test_c5_census():
    result = census(cycle_graph(5))
    assert result.by_length == {5: 1}
    assert (result.c3, result.c5, result.c1) == (0, 1, 1)


def test_k4_census_frozen_from_oracle():
    assert oracles.census_bruteforce(complete_graph(4)) == {3: 4, 4: 3}
    result = census(complete_graph(4))
    assert result.by_length == {3: 4, 4: 3}
    assert result.c3 == 4 and result.c5 == 0


def test_k5_census_frozen_from_oracle():
    assert oracles.census_bruteforce(complete_graph(5)) == {3: 10, 4: 15, 5: 12}
    result = census(complete_graph(5))
    assert result.by_length == {3: 10, 4: 15, 5: 12}
    assert result.c3 == 10 and result.c5 == 12


def test_trees_have_no_cycles():
    for n in range(1, 9):
        assert census(path_graph(n)).total == 0
        assert census(star_graph(n)).total == 0


def test_census_matches_bruteforce_exhaustive_small():
    for n in range(6):
        for g in oracles.all_labeled_graphs(n):
            assert census(g).by_length == oracles.census_bruteforce(g)


def test_dp_matches_census_exhaustive_small():
    for n in range(6):
        for g in oracles.all_labeled_graphs(n):
            assert cycle_counts_exact(g) == census(g).by_length


def test_dp_matches_census_connected_6(connected_le6):
    for g in connected_le6:
        assert cycle_counts_exact(g) == census(g).by_length


def test_census_c1_identity():
    result = census(complete_graph(6))
    assert result.c1 == result.c3 + result.c5


def test_budget_exceeded_flag():
    result = census(complete_graph(5), budget=1)
    assert result.budget_exceeded
    assert not result.usable
    ok = census(complete_graph(5), budget=37)
    assert not ok.budget_exceeded and ok.total == 37


def test_budget_zero_on_acyclic_graph_is_usable():
    result = census(path_graph(5), budget=0)
    assert not result.budget_exceeded and result.total == 0


def test_budget_rejects_negative():
    with pytest.raises(ValueError):
        census(cycle_graph(3), budget=-1)


def test_edge_deletion_never_increases_counts():
    g = complete_graph(5)
    base = census(g).by_length
    for e in g.edges():
        smaller = census(delete_edge(g, e)).by_length
        for length, cnt in smaller.items():
            assert cnt <= base.get(length, 0)


def test_bipartite_graphs_have_no_odd_entries():
    for g in (cycle_graph(6), cycle_graph(8), path_graph(7), star_graph(5)):
        assert all(length % 2 == 0 for length in census(g).by_length)


def test_count_cycles_of_length_exact_and_capped():
    k5 = complete_graph(5)
    assert count_cycles_of_length(k5, 3) == 10
    assert count_cycles_of_length(k5, 5) == 12
    assert count_cycles_of_length(k5, 3, cap=4) == 4
    assert count_cycles_of_length(k5, 6) == 0


def test_count_cycles_step_budget():
    with pytest.raises(SearchBudgetExceeded):
        count_cycles_of_length(complete_graph(7), 7, step_budget=10)


def test_count_residue_cycles():
    k5 = complete_graph(5)
    total, exact = count_residue_cycles(k5, 3, threshold=100)
    assert (total, exact) == (10, True)
    lower, exact = count_residue_cycles(k5, 3, threshold=4)
    assert lower >= 4 and not exact
    total5, exact5 = count_residue_cycles(k5, 1, threshold=50)
    assert (total5, exact5) == (12, True)


def test_cycles_through_vertex_power_of_path():
    g = power(path_graph(5), 2)
    hits = cycles_through_vertex(g, 0, lengths=(3, 5))
    assert hits[("length", 3)] and hits[("length", 5)]


def test_cycles_through_vertex_c4_has_neither():
    for v in range(4):
        hits = cycles_through_vertex(cycle_graph(4), v, lengths=(3, 5))
        assert not hits[("length", 3)] and not hits[("length", 5)]


def test_cycles_through_vertex_k4():
    hits = cycles_through_vertex(complete_graph(4), 2, lengths=(3, 5),
                                 residues=(3, 1))
    assert hits[("length", 3)] and not hits[("length", 5)]
    assert hits[("residue", 3)] and not hits[("residue", 1)]


def test_power_tree_vertex_deletion_monotonicity():
    # every vertex of a squared tree on >= 5 vertices sits on a 3- and
    # 5-cycle, so deleting it must drop both residue counts
    from graphsig.graphs import delete_vertices
    for tree in (path_graph(5), path_graph(6), star_graph(5)):
        for k in (2, 3):
            pk = power(tree, k)
            full = exact_census(pk)
            for v in range(pk.n):
                sub = exact_census(delete_vertices(pk, [v]))
                assert sub.c3 <= full.c3 - 1
                assert sub.c5 <= full.c5 - 1


from hypothesis import given, settings, strategies as st


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 9), st.data())
def test_dp_matches_enumeration_random(n, data):
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    picked = data.draw(st.sets(st.sampled_from(pairs)) if pairs else st.just(set()))
    g = Graph.from_edges(n, sorted(picked))
    assert cycle_counts_exact(g) == census(g).by_length


def test_exact_census_dataclass_fields():
    cc = CycleCensus(by_length={3: 2, 5: 1, 7: 4})
    assert cc.c3 == 6 and cc.c5 == 1 and cc.c1 == 7 and cc.total == 7
    assert cc.usable


def test_dp_order_cap():
    with pytest.raises(ValueError):
        cycle_counts_exact(Graph(19, [0] * 19))

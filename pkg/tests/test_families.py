"""Family generators: free trees against the brute-force Pruefer oracle and
the published counts, unicyclic/bicyclic edge counts, sun grids, stream
ingestion."""

import pytest

from graphsig.families import (StreamItem, bicyclic_from_unicyclic,
                               free_tree_count, free_trees, ingest_graph6,
                               sun_grid, tree_canonical_form,
                               unicyclic_from_trees)
from graphsig.graphs import (Graph6ParseError, is_connected, is_tree,
                             to_graph6)

import oracles

# 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159 free trees
FREE_TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]


def test_tree_counts_match_published_sequence():
    for n, expected in enumerate(FREE_TREE_COUNTS, start=1):
        assert free_tree_count(n) == expected


def test_trees_on_four_vertices():
    trees = list(free_trees(4))
    assert len(trees) == 2
    degree_profiles = sorted(tuple(sorted(t.degrees())) for t in trees)
    assert degree_profiles == [(1, 1, 1, 3), (1, 1, 2, 2)]


def test_trees_match_pruefer_oracle_up_to_8():
    for n in range(1, 9):
        expected = {tree_canonical_form(t)
                    for t in oracles.labeled_trees_pruefer(n)}
        got = [tree_canonical_form(t) for t in free_trees(n)]
        assert len(got) == len(set(got)) == len(expected)
        assert set(got) == expected


def test_all_generated_trees_are_trees():
    for n in range(1, 11):
        for t in free_trees(n):
            assert is_tree(t)


def test_free_trees_deterministic_order():
    first = [to_graph6(t) for t in free_trees(9)]
    second = [to_graph6(t) for t in free_trees(9)]
    assert first == second


def test_free_trees_cap():
    with pytest.raises(ValueError):
        list(free_trees(15))
    with pytest.raises(ValueError):
        list(free_trees(0))


def test_unicyclic_smallest_case():
    # the one tree on 3 vertices has a single non-edge
    graphs = list(unicyclic_from_trees(3))
    assert len(graphs) == 1
    assert sorted(graphs[0].degrees()) == [2, 2, 2]


def test_unicyclic_edge_count_and_connected():
    for n in (4, 6, 8):
        for g in unicyclic_from_trees(n):
            assert g.edge_count == g.n == n
            assert is_connected(g)


def test_bicyclic_edge_count():
    for n in (4, 6):
        for g in bicyclic_from_unicyclic(n):
            assert g.edge_count == g.n + 1
            assert is_connected(g)


def test_unicyclic_covers_all_classes_n5():
    # the five unicyclic classes on 5 vertices, told apart by degree
    # sequence plus cycle length
    from graphsig.cycles import cycle_counts_exact
    seen = {(tuple(sorted(g.degrees())),
             tuple(sorted(cycle_counts_exact(g).items())))
            for g in unicyclic_from_trees(5)}
    assert len(seen) == 5


def test_sun_grid_counts():
    assert len(list(sun_grid(3, 1))) == 8
    assert len(list(sun_grid(4, 0))) == 2
    assert len(list(sun_grid(5, 2))) == 3**3 + 3**4 + 3**5


def test_sun_grid_validation():
    with pytest.raises(ValueError):
        list(sun_grid(2, 1))
    with pytest.raises(ValueError):
        list(sun_grid(4, -1))


def test_ingest_three_valid_lines():
    items = list(ingest_graph6(["A_", "Bg", "C~"]))
    assert all(item.ok for item in items)
    assert [item.index for item in items] == [1, 2, 3]
    assert [item.line_no for item in items] == [1, 2, 3]


def test_ingest_lenient_keeps_going():
    items = list(ingest_graph6(["A_", "A", "Bg"]))
    good = [i for i in items if i.ok]
    bad = [i for i in items if not i.ok]
    assert len(good) == 2 and len(bad) == 1
    assert bad[0].line_no == 2
    assert good[1].index == 2


def test_ingest_strict_raises_with_line_number():
    with pytest.raises(Graph6ParseError) as err:
        list(ingest_graph6(["A_", "A"], strict=True))
    assert "line 2" in str(err.value)


def test_ingest_empty_stream():
    assert list(ingest_graph6([])) == []


def test_ingest_skips_comments_and_blanks():
    items = list(ingest_graph6(["# header", "", "A_", "# trailing"]))
    assert len(items) == 1 and items[0].ok and items[0].line_no == 3


def test_stream_item_shape():
    item = StreamItem(line_no=7, text="A_", error="boom")
    assert not item.ok

"""Graph core: structure queries and coalition enumeration."""

import math
from fractions import Fraction

import pytest

from kcutgame.corpora import (
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
    star_graph,
)
from kcutgame.graphs import (
    CoalitionError,
    Graph,
    GraphError,
    as_coalition,
    enumerate_cliques,
    enumerate_coalitions,
    enumerate_x_local_coalitions,
)
from kcutgame.oracles import brute_cliques, brute_girth, brute_x_local_coalitions


def test_degree_triangle_and_isolated():
    tri = complete_graph(3)
    for v in range(3):
        assert tri.degree(v) == 2
    lonely = Graph(2, [])
    assert lonely.degree(0) == 0


def test_degree_weighted_k2():
    g = Graph(2, [(0, 1, 5)])
    assert g.degree(0) == 5 and g.degree(1) == 5
    assert not g.unweighted


def test_max_degree():
    assert star_graph(4).max_degree() == 4
    assert cycle_graph(5).max_degree() == 2
    p3 = Graph(3, [(0, 1, Fraction(1, 2)), (1, 2, 3)])
    assert p3.max_degree() == Fraction(7, 2)
    with pytest.raises(GraphError):
        Graph(0).max_degree()


def test_construction_rejects_bad_edges():
    with pytest.raises(GraphError):
        Graph(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 1, 0)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 1, -2)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 1, 0.5)])


def test_hop_distance():
    p3 = path_graph(3)
    assert p3.hop_distance(0, 2) == 2
    assert p3.hop_distance(1, 1) == 0
    two_parts = Graph(4, [(0, 1), (2, 3)])
    assert two_parts.hop_distance(0, 3) == math.inf
    with pytest.raises(GraphError):
        p3.hop_distance(0, 5)


def test_girth():
    assert cycle_graph(5).girth() == 5
    assert path_graph(6).girth() == math.inf
    # Derived via the independent edge-deletion oracle.
    assert brute_girth(petersen_graph()) == 5
    assert petersen_graph().girth() == 5


def test_girth_matches_oracle_on_small_graphs():
    from kcutgame.corpora import iter_connected_graphs

    for g in iter_connected_graphs(5):
        assert g.girth() == brute_girth(g)


def test_is_acyclic():
    assert path_graph(4).is_acyclic()
    assert not complete_graph(3).is_acyclic()
    assert Graph(3, []).is_acyclic()


def test_induced_subgraph():
    k4 = complete_graph(4)
    tri = k4.induced_subgraph((0, 2, 3))
    assert tri == complete_graph(3)
    p3 = path_graph(3)
    ends = p3.induced_subgraph((0, 2))
    assert ends.edge_count == 0 and ends.node_count == 2
    g = Graph(3, [(0, 1, Fraction(1, 3)), (1, 2, 7)])
    assert g.induced_subgraph((0, 1, 2)) == g


def test_induced_subgraph_preserves_weights_exactly():
    g = Graph(4, [(0, 1, Fraction(1, 3)), (1, 2, Fraction(5, 7)), (2, 3, 2)])
    sub = g.induced_subgraph((1, 2, 3))
    assert sub.weight(0, 1) == Fraction(5, 7)
    assert sub.weight(1, 2) == 2


def test_as_coalition_validation():
    assert as_coalition([0, 2, 5]) == (0, 2, 5)
    with pytest.raises(CoalitionError):
        as_coalition([])
    with pytest.raises(CoalitionError):
        as_coalition([2, 1])
    with pytest.raises(CoalitionError):
        as_coalition([1, 1])
    with pytest.raises(CoalitionError):
        as_coalition([0, 9], node_count=4)


def test_enumerate_coalitions_counts_and_order():
    g = Graph(3, [])
    singles = list(enumerate_coalitions(g, 1))
    assert singles == [(0,), (1,), (2,)]
    everything = list(enumerate_coalitions(g, 3))
    assert len(everything) == 7
    assert everything == sorted(everything)
    g5 = Graph(5, [])
    assert len(list(enumerate_coalitions(g5, 2))) == 15


def test_x_local_coalitions_on_path():
    p3 = path_graph(3)
    assert list(enumerate_x_local_coalitions(p3, 1, 3)) == [
        (0,), (0, 1), (1,), (1, 2), (2,),
    ]
    assert list(enumerate_x_local_coalitions(p3, 2, 3)) == [
        (0,), (0, 1), (0, 1, 2), (0, 2), (1,), (1, 2), (2,),
    ]


def test_x_local_k4_all_subsets():
    k4 = complete_graph(4)
    found = list(enumerate_x_local_coalitions(k4, 1, 4))
    # Derived: brute-force subset filter oracle.
    assert sorted(found) == brute_cliques(k4, 4)
    assert len(found) == 15


def test_cliques_match_oracle_up_to_n8():
    import random

    from kcutgame.corpora import random_connected_graph

    rng = random.Random(4)
    for n in (5, 6, 7, 8):
        g = random_connected_graph(n, rng)
        assert sorted(enumerate_cliques(g, n)) == brute_cliques(g, n)
        assert sorted(enumerate_x_local_coalitions(g, 1, n)) == brute_cliques(g, n)


def test_x_local_matches_oracle():
    import random

    from kcutgame.corpora import random_connected_graph

    rng = random.Random(11)
    for n in (4, 5, 6):
        g = random_connected_graph(n, rng)
        for x in (1, 2, 3):
            assert sorted(enumerate_x_local_coalitions(g, x, n)) == (
                brute_x_local_coalitions(g, x, n)
            )


def test_x_local_with_x_at_diameter_equals_all_subsets_on_connected():
    g = path_graph(4)
    diam = int(g.diameter())
    assert sorted(enumerate_x_local_coalitions(g, diam, 4)) == sorted(
        enumerate_coalitions(g, 4)
    )


def test_disconnected_pairs_never_colocal():
    g = Graph(4, [(0, 1), (2, 3)])
    coalitions = list(enumerate_x_local_coalitions(g, 3, 4))
    assert (0, 2) not in coalitions
    assert all(
        not ({0, 1} & set(c) and {2, 3} & set(c)) for c in coalitions
    )

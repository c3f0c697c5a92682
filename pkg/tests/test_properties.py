"""Property-based invariants across the whole stack."""

import math
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from kcutgame.corpora import DEFAULT_WEIGHT_MENU, all_node_pairs
from kcutgame.deviation import JointMove, apply_move
from kcutgame.game import GameSpec, cost, cut_value, social_welfare, utility
from kcutgame.graphs import Graph, enumerate_coalitions, enumerate_x_local_coalitions
from kcutgame import intcheck
from kcutgame.equilibrium import is_local_strong, is_q_strong


@st.composite
def graphs(draw, max_n=6, weighted=False):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = all_node_pairs(n)
    mask = draw(st.integers(min_value=0, max_value=(1 << len(pairs)) - 1))
    edges = []
    for i, (u, v) in enumerate(pairs):
        if mask >> i & 1:
            if weighted:
                w = draw(st.sampled_from(DEFAULT_WEIGHT_MENU))
                edges.append((u, v, w))
            else:
                edges.append((u, v))
    return Graph(n, edges)


@st.composite
def games(draw, max_n=6, max_k=3, weighted=False):
    graph = draw(graphs(max_n=max_n, weighted=weighted))
    k = draw(st.integers(min_value=2, max_value=max_k))
    spec = GameSpec(graph, k)
    sigma = tuple(
        draw(st.integers(min_value=1, max_value=k)) for _ in range(graph.node_count)
    )
    return spec, sigma


@given(games(weighted=True))
def test_utility_plus_cost_is_degree(game):
    spec, sigma = game
    for v in range(spec.n):
        assert utility(spec, sigma, v) + cost(spec, sigma, v) == spec.graph.degree(v)


@given(games(weighted=True))
def test_welfare_is_twice_cut(game):
    spec, sigma = game
    total = sum((utility(spec, sigma, v) for v in range(spec.n)), Fraction(0))
    assert total == social_welfare(spec, sigma) == 2 * cut_value(spec, sigma)


@given(games(), st.permutations([1, 2, 3]))
def test_cut_invariant_under_color_renaming(game, perm):
    spec, sigma = game
    renaming = {i + 1: perm[i] for i in range(3)}
    renamed = tuple(renaming.get(c, c) for c in sigma)
    if all(1 <= c <= spec.k for c in renamed):
        assert cut_value(spec, renamed) == cut_value(spec, sigma)


@given(games())
def test_unweighted_values_are_integers(game):
    spec, sigma = game
    assert cut_value(spec, sigma).denominator == 1
    for v in range(spec.n):
        assert utility(spec, sigma, v).denominator == 1


@given(graphs())
def test_hop_distance_symmetry_and_triangle(graph):
    dist = graph.distance_matrix()
    n = graph.node_count
    for u in range(n):
        assert dist[u][u] == 0
        for v in range(n):
            assert dist[u][v] == dist[v][u]
            for w in range(n):
                assert dist[u][w] <= dist[u][v] + dist[v][w]


@given(graphs())
def test_girth_infinite_iff_acyclic(graph):
    assert (graph.girth() == math.inf) == graph.is_acyclic()


@given(graphs(max_n=5))
def test_coalition_enumerations_consistent(graph):
    n = graph.node_count
    all_sets = list(enumerate_coalitions(graph, n))
    assert len(all_sets) == 2**n - 1
    assert all_sets == sorted(all_sets)
    local = list(enumerate_x_local_coalitions(graph, n, n))
    assert set(local) <= set(all_sets)
    if graph.is_connected():
        assert set(local) == set(all_sets)


@given(games(max_n=5), st.data())
def test_apply_move_changes_exactly_the_coalition(game, data):
    spec, sigma = game
    if spec.n == 0:
        return
    members = tuple(
        sorted(
            data.draw(
                st.sets(
                    st.integers(min_value=0, max_value=spec.n - 1),
                    min_size=1,
                    max_size=spec.n,
                )
            )
        )
    )
    colors = tuple(
        data.draw(
            st.integers(min_value=1, max_value=spec.k).filter(
                lambda c, v=v: c != sigma[v]
            )
        )
        for v in members
    )
    move = JointMove(members, colors)
    after = apply_move(sigma, move)
    for v in range(spec.n):
        if v in members:
            assert after[v] != sigma[v]
        else:
            assert after[v] == sigma[v]


@settings(deadline=None)
@given(games(max_n=5))
def test_bitset_lane_matches_exact_lane(game):
    spec, sigma = game
    if spec.n == 0:
        return
    adj = intcheck.adj_bits(spec.graph)
    for q in {1, min(2, spec.n), spec.n}:
        fast, _ = intcheck.q_strong(adj, sigma, spec.k, q)
        assert fast == is_q_strong(spec, sigma, q).verdict
    fast_lse, _ = intcheck.local_strong(adj, sigma, spec.k)
    assert fast_lse == is_local_strong(spec, sigma).verdict

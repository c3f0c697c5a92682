"""Payoffs, cut values, color statistics, and the solvers."""

from fractions import Fraction

import pytest

from kcutgame.corpora import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
)
from kcutgame.game import (
    BudgetExceededError,
    ColoringError,
    GameError,
    GameSpec,
    coalition_colors,
    coalition_cost,
    color_class,
    color_degree,
    cost,
    cut_value,
    local_search_coloring,
    optimal_coloring_exact,
    social_welfare,
    utility,
    validate_coloring,
)
from kcutgame.game import _optimal_canonical_dfs
from kcutgame.graphs import Graph
from kcutgame.equilibrium import is_nash
from kcutgame.oracles import brute_optimal


def test_gamespec_validation():
    with pytest.raises(GameError):
        GameSpec(complete_graph(3), 1)
    spec = GameSpec(complete_graph(3), 3)
    with pytest.raises(ColoringError):
        validate_coloring(spec, (1, 2))
    with pytest.raises(ColoringError):
        validate_coloring(spec, (1, 2, 4))


def test_utility_examples():
    tri = GameSpec(complete_graph(3), 3)
    assert utility(tri, (1, 2, 3), 0) == 2
    k2 = GameSpec(Graph(2, [(0, 1, 5)]), 2)
    assert utility(k2, (1, 1), 0) == 0
    assert utility(k2, (1, 1), 1) == 0
    p3 = GameSpec(path_graph(3), 2)
    assert utility(p3, (1, 1, 2), 1) == 1


def test_cost_examples():
    p3 = GameSpec(path_graph(3), 2)
    assert cost(p3, (1, 1, 2), 0) == 1
    assert cost(p3, (1, 1, 2), 1) == 1
    assert cost(p3, (1, 1, 2), 2) == 0
    k4 = GameSpec(complete_graph(4), 2)
    assert all(cost(k4, (1, 1, 1, 1), v) == 3 for v in range(4))
    tri = GameSpec(complete_graph(3), 3)
    assert all(cost(tri, (1, 2, 3), v) == 0 for v in range(3))


def test_cost_is_degree_minus_utility():
    spec = GameSpec(Graph(3, [(0, 1, Fraction(1, 2)), (1, 2, 3)]), 3)
    for sigma in [(1, 1, 1), (1, 2, 1), (3, 2, 1)]:
        for v in range(3):
            assert cost(spec, sigma, v) == spec.graph.degree(v) - utility(spec, sigma, v)


def test_color_degree():
    p3 = GameSpec(path_graph(3), 2)
    assert color_degree(p3, (1, 1, 2), 1, 1) == 1
    assert color_degree(p3, (1, 1, 2), 1, 2) == 1
    assert color_degree(p3, (1, 1, 2), 0, 2) == 0
    spec = GameSpec(complete_graph(4), 3)
    sigma = (1, 2, 2, 3)
    for v in range(4):
        total = sum(
            (color_degree(spec, sigma, v, c) for c in range(1, 4)), Fraction(0)
        )
        assert total == spec.graph.degree(v)
    with pytest.raises(ColoringError):
        color_degree(p3, (1, 1, 2), 0, 9)


def test_cut_value_examples():
    p3 = GameSpec(path_graph(3), 2)
    assert cut_value(p3, (1, 1, 2)) == 1
    assert cut_value(p3, (1, 1, 1)) == 0
    c5 = GameSpec(cycle_graph(5), 2)
    # Derived: exhaustive enumeration of all 2^5 colorings.
    assert brute_optimal(c5)[1] == 4
    assert optimal_coloring_exact(c5)[1] == 4


def test_social_welfare_is_twice_cut():
    spec = GameSpec(complete_graph(4), 3)
    for sigma in [(1, 1, 2, 3), (1, 2, 2, 1), (3, 3, 3, 3)]:
        assert social_welfare(spec, sigma) == 2 * cut_value(spec, sigma)
        total = sum((utility(spec, sigma, v) for v in range(4)), Fraction(0))
        assert total == social_welfare(spec, sigma)


def test_coalition_color_statistics():
    sigma = (3, 1, 1, 2)
    assert coalition_colors(sigma, (0,)) == {3}
    assert coalition_colors(sigma, (0, 1, 3)) == {1, 2, 3}
    assert coalition_colors(sigma, (1, 2)) == {1}
    assert color_class(sigma, (0, 1, 2, 3), 1) == (1, 2)
    assert color_class(sigma, (0, 1, 2, 3), 4) == ()
    classes = [color_class(sigma, (0, 1, 2, 3), c) for c in (1, 2, 3)]
    assert sorted(v for cls in classes for v in cls) == [0, 1, 2, 3]


def test_coalition_cost():
    k4 = GameSpec(complete_graph(4), 2)
    mono = (1, 1, 1, 1)
    assert coalition_cost(k4, mono, 0, (0, 1, 2)) == 2
    assert coalition_cost(k4, mono, 3, (0, 1)) == 2
    proper = GameSpec(complete_bipartite(2, 2), 2)
    sigma = (1, 1, 2, 2)
    for v in range(4):
        assert coalition_cost(proper, sigma, v, (0, 1, 2, 3)) == 0
    far = GameSpec(path_graph(4), 2)
    assert coalition_cost(far, (1, 1, 1, 1), 0, (2, 3)) == 0


def test_optimal_exact_examples():
    k4 = GameSpec(complete_graph(4), 2)
    assert optimal_coloring_exact(k4) == ((1, 1, 2, 2), 4)
    bip = GameSpec(complete_bipartite(2, 3), 2)
    coloring, value = optimal_coloring_exact(bip)
    assert value == bip.graph.total_weight()
    assert cut_value(bip, coloring) == value


def test_optimal_exact_lanes_agree_with_oracle():
    import random

    from kcutgame.corpora import random_connected_graph, random_weighted_graph

    rng = random.Random(2)
    for trial in range(25):
        n = rng.randint(2, 5)
        k = rng.randint(2, 3)
        graph = (
            random_weighted_graph(n, rng)
            if trial % 2
            else random_connected_graph(n, rng)
        )
        spec = GameSpec(graph, k)
        expected = brute_optimal(spec)
        assert optimal_coloring_exact(spec) == expected
        assert _optimal_canonical_dfs(spec) == expected


def test_optimal_budget_guard():
    spec = GameSpec(cycle_graph(8), 3)
    with pytest.raises(BudgetExceededError):
        optimal_coloring_exact(spec, budget=10)


def test_optimal_is_color_permutation_invariant_value():
    spec = GameSpec(cycle_graph(5), 3)
    _, value = optimal_coloring_exact(spec)
    sigma, _ = optimal_coloring_exact(spec)
    swapped = tuple({1: 2, 2: 1, 3: 3}[c] for c in sigma)
    assert cut_value(spec, swapped) == value


def test_local_search_is_nash_and_deterministic():
    for seed in (0, 1, 7):
        spec = GameSpec(cycle_graph(6), 2)
        sigma = local_search_coloring(spec, seed)
        assert sigma == local_search_coloring(spec, seed)
        assert is_nash(spec, sigma).verdict
    bip = GameSpec(complete_bipartite(3, 3), 2)
    sigma = local_search_coloring(bip, 3)
    assert is_nash(bip, sigma).verdict

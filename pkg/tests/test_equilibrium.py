"""Equilibrium checkers, classification, and the sufficient conditions."""

import pytest

from kcutgame.corpora import (
    complete_graph,
    cycle_graph,
    derive_rng,
    path_graph,
    random_coloring,
    random_connected_graph,
    star_graph,
)
from kcutgame.equilibrium import (
    WeightedInputError,
    classify,
    degree_condition_guarantees_se,
    girth_guarantee,
    is_local_strong,
    is_nash,
    is_q_strong,
    is_strong,
    unsaturated_nodes,
)
from kcutgame.game import BudgetExceededError, GameSpec
from kcutgame.graphs import Graph
from kcutgame.oracles import brute_nash, brute_q_strong_lexicographic


def test_is_nash_examples():
    c4 = GameSpec(cycle_graph(4), 2)
    assert is_nash(c4, (1, 2, 1, 2)).verdict
    p3 = GameSpec(path_graph(3), 2)
    report = is_nash(p3, (1, 1, 1))
    assert not report.verdict
    assert report.witness is not None
    assert report.witness.revalidate(p3, (1, 1, 1))
    # Derived: all three unilateral deviations fail.
    k3 = GameSpec(complete_graph(3), 2)
    assert is_nash(k3, (1, 1, 2)).verdict


def test_nash_witness_is_lexicographically_first():
    p3 = GameSpec(path_graph(3), 2)
    report = is_nash(p3, (1, 1, 1))
    # Node 0 flipping to color 2 is the first improving (player, color).
    assert report.witness.move.coalition == (0,)
    assert report.witness.move.new_colors == (2,)


def test_q_strong_examples():
    k3 = GameSpec(complete_graph(3), 2)
    # Derived: enumerate all 7 coalitions, all movers-only recolorings.
    assert is_q_strong(k3, (1, 1, 2), 3).verdict
    c4 = GameSpec(cycle_graph(4), 2)
    assert is_q_strong(c4, (1, 2, 1, 2), 4).verdict
    assert not is_q_strong(c4, (1, 1, 2, 2), 2).verdict
    with pytest.raises(ValueError):
        is_q_strong(c4, (1, 2, 1, 2), 0)
    with pytest.raises(ValueError):
        is_q_strong(c4, (1, 2, 1, 2), 9)


def test_q1_matches_nash_on_random_profiles():
    for index in range(500):
        rng = derive_rng(31, index)
        n = rng.randint(1, 6)
        k = rng.randint(2, 3)
        spec = GameSpec(random_connected_graph(n, rng), k)
        sigma = random_coloring(n, k, rng)
        assert is_q_strong(spec, sigma, 1).verdict == is_nash(spec, sigma).verdict
        assert is_nash(spec, sigma).verdict == brute_nash(spec, sigma)


def test_q_strong_monotone_in_q():
    for index in range(120):
        rng = derive_rng(77, index)
        n = rng.randint(2, 5)
        k = rng.randint(2, 3)
        spec = GameSpec(random_connected_graph(n, rng), k)
        sigma = random_coloring(n, k, rng)
        verdicts = [is_q_strong(spec, sigma, q).verdict for q in range(1, n + 1)]
        # Once false it stays false as q grows.
        for smaller, larger in zip(verdicts, verdicts[1:]):
            assert not (larger and not smaller)


def test_q_strong_matches_oracle_order():
    for index in range(80):
        rng = derive_rng(13, index)
        n = rng.randint(2, 5)
        k = rng.randint(2, 3)
        spec = GameSpec(random_connected_graph(n, rng), k)
        sigma = random_coloring(n, k, rng)
        q = rng.randint(1, n)
        report = is_q_strong(spec, sigma, q)
        verdict, move = brute_q_strong_lexicographic(spec, sigma, q)
        assert report.verdict == verdict
        if not verdict:
            assert report.witness.move == move


def test_local_strong_examples():
    c4 = GameSpec(cycle_graph(4), 2)
    assert is_local_strong(c4, (1, 2, 1, 2)).verdict
    p3 = GameSpec(path_graph(3), 2)
    assert not is_local_strong(p3, (1, 1, 1)).verdict  # singletons are 1-local


def test_lse_equals_2se_on_c4_all_colorings():
    from itertools import product

    c4 = GameSpec(cycle_graph(4), 2)
    for sigma in product((1, 2), repeat=4):
        assert (
            is_local_strong(c4, sigma).verdict
            == is_q_strong(c4, sigma, 2).verdict
        )


def test_local_strong_generic_x():
    # On a path, the endpoints are 2-local but not 1-local: a profile immune
    # to cliques can still fall to a distance-2 coalition.
    from kcutgame.search import search_separation

    w = search_separation("lse-not-kse", k=3, seed=0)
    assert is_local_strong(w.spec, w.coloring, x=1).verdict
    assert not is_local_strong(w.spec, w.coloring, x=2).verdict
    with pytest.raises(ValueError):
        is_local_strong(w.spec, w.coloring, x=0)


def test_is_strong_examples():
    single = GameSpec(Graph(1, []), 4)
    assert is_strong(single, (1,)).verdict
    k2 = GameSpec(Graph(2, [(0, 1)]), 2)
    assert is_strong(k2, (1, 2)).verdict
    k3 = GameSpec(complete_graph(3), 2)
    assert is_strong(k3, (1, 1, 2)).verdict
    with pytest.raises(BudgetExceededError):
        is_strong(GameSpec(cycle_graph(6), 3), (1, 2, 1, 2, 1, 2), budget=5)


def test_report_consistency():
    c4 = GameSpec(cycle_graph(4), 2)
    good = is_strong(c4, (1, 2, 1, 2))
    assert good.verdict and good.witness is None
    assert good.revalidate(c4, (1, 2, 1, 2))
    bad = is_q_strong(c4, (1, 1, 2, 2), 2)
    assert not bad.verdict and bad.witness is not None
    assert bad.revalidate(c4, (1, 1, 2, 2))
    assert bad.coalitions_examined > 0


def test_unsaturated_restriction_is_sound():
    # A saturated node never appears in any improving coalition's witness.
    for index in range(60):
        rng = derive_rng(99, index)
        n = rng.randint(2, 5)
        spec = GameSpec(random_connected_graph(n, rng), 2)
        sigma = random_coloring(n, 2, rng)
        unsat = set(unsaturated_nodes(spec, sigma))
        report = is_strong(spec, sigma)
        if report.witness is not None:
            assert set(report.witness.move.coalition) <= unsat


def test_classify_examples():
    c4 = GameSpec(cycle_graph(4), 2)
    assert classify(c4, (1, 2, 1, 2)) == "se"
    assert classify(c4, (1, 1, 2, 2)) == "ne"
    p3 = GameSpec(path_graph(3), 2)
    assert classify(p3, (1, 1, 1)) == "not-ne"


def test_classify_separation_witnesses():
    from kcutgame.search import search_separation

    w = search_separation("2se-not-lse", k=3, seed=0)
    assert w is not None
    assert classify(w.spec, w.coloring) == "2-se"
    w2 = search_separation("ne-not-2se", k=2, seed=0)
    assert classify(w2.spec, w2.coloring) == "ne"


def test_degree_condition():
    assert degree_condition_guarantees_se(GameSpec(star_graph(3), 2))
    assert not degree_condition_guarantees_se(GameSpec(star_graph(4), 2))
    assert degree_condition_guarantees_se(GameSpec(star_graph(5), 3))
    with pytest.raises(WeightedInputError):
        degree_condition_guarantees_se(GameSpec(Graph(2, [(0, 1, 5)]), 2))


def test_girth_guarantee():
    c5 = girth_guarantee(GameSpec(cycle_graph(5), 2))
    assert c5.q_guaranteed == 7 and c5.se_guaranteed
    c8 = girth_guarantee(GameSpec(cycle_graph(8), 2))
    assert c8.q_guaranteed == 13 and c8.se_guaranteed
    tree = girth_guarantee(GameSpec(path_graph(6), 3))
    assert tree.q_guaranteed == 6 and tree.se_guaranteed
    with pytest.raises(WeightedInputError):
        girth_guarantee(GameSpec(Graph(2, [(0, 1, 5)]), 2))


def test_coalition_scan_counts_reported():
    k3 = GameSpec(complete_graph(3), 2)
    report = is_q_strong(k3, (1, 1, 2), 3)
    assert report.verdict
    # Node 2 is saturated (utility = degree) and can never join an improving
    # coalition; the scan covers the 3 subsets of the unsaturated pool {0, 1}.
    assert report.coalitions_examined == 3
    mono = GameSpec(complete_graph(3), 2)
    report_all = is_q_strong(mono, (1, 1, 1), 3)
    assert not report_all.verdict

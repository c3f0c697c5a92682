"""Verification harness: exhaustive and randomized suites that replay every
proven statement about the game on small-instance corpora.

Each suite runs a corpus through the relevant checkers and returns a
HarnessResult; a non-empty failure list means either a bug or a genuine
falsification of a proven statement, and the CLI exits non-zero on it.
Bulk scans run on the integer lanes (numpy enumeration kernels and bitset
checkers); any failure candidate they produce is re-confirmed through the
exact Fraction lane before being recorded.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Callable, Iterator

import numpy as np

from . import fastscan, intcheck
from .corpora import (
    DEFAULT_WEIGHT_MENU,
    all_node_pairs,
    cycle_graph,
    derive_rng,
    graph_from_mask,
    iter_trees,
    random_coloring,
    random_connected_graph,
    random_weighted_graph,
)
from .deviation import (
    JointMove,
    check_acyclic_two_color_bound,
    check_clique_deviation_conditions,
    check_cut_gain_for_color_counts,
    check_minimal_move_invariants,
    check_unique_vacating_neighbor,
    extract_rotation_subcoalition,
    RotationExtractionError,
    is_minimal,
    is_strong_improvement,
)
from .dynamics import Policy, check_potential_candidate, run
from .equilibrium import (
    degree_condition_guarantees_se,
    girth_guarantee,
    is_local_strong,
    is_nash,
    is_q_strong,
    is_strong,
)
from .game import GameSpec, optimal_coloring_exact
from .game import _optimal_canonical_dfs
from .graphs import Graph
from .io import graph_to_dict, move_to_dict
from .oracles import (
    brute_cliques,
    brute_girth,
    brute_optimal,
    brute_q_strong_lexicographic,
)


@dataclass
class HarnessResult:
    suite: str
    corpus: str
    instances_checked: int
    failures: list[dict[str, Any]] = field(default_factory=list)
    seconds: float = 0.0
    notes: str = ""

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "corpus": self.corpus,
            "instances_checked": self.instances_checked,
            "failures": self.failures,
            "seconds": round(self.seconds, 3),
            "notes": self.notes,
        }


def _fail_record(spec: GameSpec, sigma, kind: str, **extra) -> dict[str, Any]:
    record = {
        "kind": kind,
        "instance": graph_to_dict(spec.graph, spec.k),
        "coloring": list(sigma),
    }
    record.update(extra)
    return record


# -- corpus machinery --------------------------------------------------------

_mask_cache: dict[tuple[int, int | None], np.ndarray] = {}


def connected_masks(n: int, max_degree: int | None = None) -> np.ndarray:
    """Edge-subset masks of connected labeled graphs on n nodes, optionally
    filtered by maximum degree; vectorized over all 2^C(n,2) subsets."""
    key = (n, max_degree)
    if key in _mask_cache:
        return _mask_cache[key]
    pairs = all_node_pairs(n)
    e = len(pairs)
    masks = np.arange(1 << e, dtype=np.int64)
    bits = [((masks >> i) & 1).astype(np.uint8) for i in range(e)]
    ok = np.ones(masks.shape, dtype=bool)
    if max_degree is not None:
        for v in range(n):
            deg = np.zeros(masks.shape, dtype=np.uint8)
            for i, (a, b) in enumerate(pairs):
                if v in (a, b):
                    deg += bits[i]
            ok &= deg <= max_degree
    adj = [np.zeros(masks.shape, dtype=np.uint8) for _ in range(n)]
    for i, (a, b) in enumerate(pairs):
        adj[a] |= bits[i] << b
        adj[b] |= bits[i] << a
    reach = np.ones(masks.shape, dtype=np.uint8)
    for _ in range(n - 1):
        for v in range(n):
            has = ((reach >> v) & 1).astype(bool)
            reach |= np.where(has, adj[v], 0)
    ok &= reach == (1 << n) - 1
    out = masks[ok]
    if n <= 6:
        _mask_cache[key] = out
    return out


def iter_optima(
    masks: np.ndarray, n: int, k: int, batch: int = 2048
) -> Iterator[tuple[int, tuple[int, ...], int]]:
    """(mask, optimal coloring, optimal cut) per unweighted graph, via the
    batched enumeration kernel.  The coloring is the lexicographically
    smallest maximizer (first argmax over the lexicographic enumeration)."""
    pairs = all_node_pairs(n)
    if not pairs:
        for m in masks:
            yield int(m), (1,) * n, 0
        return
    proper = fastscan.proper_matrix(n, k)
    P = np.stack([proper[p] for p in pairs]).astype(np.float32)
    cols = fastscan.colorings_array(n, k)
    shifts = np.arange(len(pairs), dtype=np.int64)
    for start in range(0, len(masks), batch):
        chunk = masks[start : start + batch]
        E = ((chunk[:, None] >> shifts) & 1).astype(np.float32)
        cuts = E @ P
        idx = np.argmax(cuts, axis=1)
        vals = cuts[np.arange(len(chunk)), idx]
        for m, i, v in zip(chunk, idx, vals):
            yield int(m), tuple(int(c) for c in cols[i]), int(v)


def _confirmed_failure(
    spec: GameSpec, sigma, concept: str, q: int | None
) -> dict[str, Any] | None:
    """Re-check a fast-lane failure through the exact lane; None when the
    exact lane disagrees (which would itself be a lane-mismatch bug)."""
    if concept == "lse":
        report = is_local_strong(spec, sigma)
    else:
        report = is_q_strong(spec, sigma, q if q is not None else spec.n)
    if report.verdict:
        return _fail_record(spec, sigma, "lane-mismatch", concept=concept)
    assert report.witness is not None
    return _fail_record(
        spec,
        sigma,
        f"not-{concept}",
        witness_move=move_to_dict(report.witness.move),
    )


# -- suites ------------------------------------------------------------------


def suite_optimal_5se(seed: int = 0, big: bool = False) -> HarnessResult:
    """Exact optima of all connected unweighted graphs (n <= 6, k in {2,3})
    withstand every coalition of size at most 5; a spot sample of n = 7
    joins under big=True."""
    t0 = time.perf_counter()
    failures: list[dict[str, Any]] = []
    checked = 0
    for k in (2, 3):
        for n in range(1, 7):
            pairs = all_node_pairs(n)
            for mask, sigma, _ in iter_optima(connected_masks(n), n, k):
                checked += 1
                adj = intcheck.adj_bits_from_mask(n, pairs, mask)
                verdict, _ = intcheck.q_strong(adj, sigma, k, min(5, n))
                if not verdict:
                    spec = GameSpec(graph_from_mask(n, mask), k)
                    rec = _confirmed_failure(spec, sigma, "5se", min(5, n))
                    if rec:
                        failures.append(rec)
        if big:
            masks7 = connected_masks(7)
            rng = derive_rng(seed, 700 + k)
            sample = sorted(rng.sample(range(len(masks7)), 200))
            pairs = all_node_pairs(7)
            for mask, sigma, _ in iter_optima(masks7[sample], 7, k):
                checked += 1
                adj = intcheck.adj_bits_from_mask(7, pairs, mask)
                verdict, _ = intcheck.q_strong(adj, sigma, k, 5)
                if not verdict:
                    spec = GameSpec(graph_from_mask(7, mask), k)
                    rec = _confirmed_failure(spec, sigma, "5se", 5)
                    if rec:
                        failures.append(rec)
    corpus = "exact optima, all connected unweighted graphs n<=6, k in {2,3}"
    if big:
        corpus += " + 200-graph n=7 sample per k"
    return HarnessResult(
        "optimal-5se", corpus, checked, failures, time.perf_counter() - t0
    )


def suite_optimal_lse(seed: int = 0, big: bool = False) -> HarnessResult:
    """Same corpus: exact optima withstand every clique coalition."""
    t0 = time.perf_counter()
    failures: list[dict[str, Any]] = []
    checked = 0
    for k in (2, 3):
        for n in range(1, 7):
            pairs = all_node_pairs(n)
            for mask, sigma, _ in iter_optima(connected_masks(n), n, k):
                checked += 1
                adj = intcheck.adj_bits_from_mask(n, pairs, mask)
                verdict, _ = intcheck.local_strong(adj, sigma, k)
                if not verdict:
                    spec = GameSpec(graph_from_mask(n, mask), k)
                    rec = _confirmed_failure(spec, sigma, "lse", None)
                    if rec:
                        failures.append(rec)
        if big:
            masks7 = connected_masks(7)
            rng = derive_rng(seed, 700 + k)
            sample = sorted(rng.sample(range(len(masks7)), 200))
            pairs = all_node_pairs(7)
            for mask, sigma, _ in iter_optima(masks7[sample], 7, k):
                checked += 1
                adj = intcheck.adj_bits_from_mask(7, pairs, mask)
                verdict, _ = intcheck.local_strong(adj, sigma, k)
                if not verdict:
                    spec = GameSpec(graph_from_mask(7, mask), k)
                    rec = _confirmed_failure(spec, sigma, "lse", None)
                    if rec:
                        failures.append(rec)
    corpus = "exact optima, all connected unweighted graphs n<=6, k in {2,3}"
    if big:
        corpus += " + 200-graph n=7 sample per k"
    return HarnessResult(
        "optimal-lse", corpus, checked, failures, time.perf_counter() - t0
    )


def _ne_profile_scan(n: int, k: int) -> Iterator[tuple[int, list[int], list]]:
    """(mask, adjacency bitsets, Nash colorings) per connected graph."""
    pairs = all_node_pairs(n)
    cols = fastscan.colorings_array(n, k)
    for mask in connected_masks(n):
        mask = int(mask)
        graph = graph_from_mask(n, mask)
        spec = GameSpec(graph, k)
        ne = fastscan.nash_mask(spec)
        adj = intcheck.adj_bits_from_mask(n, pairs, mask)
        yield mask, adj, [tuple(int(c) for c in cols[i]) for i in np.nonzero(ne)[0]]


def suite_containments(seed: int = 0, big: bool = False) -> HarnessResult:
    """Over all colorings of all connected graphs n <= 5 with k = 3, the
    chain k-SE => LSE => 2-SE never breaks.  Profiles that are not Nash
    equilibria fail all three concepts at once (a singleton deviation is a
    coalition and a clique), so only Nash profiles need the full checks."""
    t0 = time.perf_counter()
    k = 3
    failures: list[dict[str, Any]] = []
    checked = 0
    for n in range(1, 6):
        total_colorings = k**n
        for mask, adj, ne_profiles in _ne_profile_scan(n, k):
            checked += total_colorings
            for sigma in ne_profiles:
                two, _ = intcheck.q_strong(adj, sigma, k, min(2, n))
                lse, _ = intcheck.local_strong(adj, sigma, k)
                kse, _ = intcheck.q_strong(adj, sigma, k, min(k, n))
                if (kse and not lse) or (lse and not two):
                    spec = GameSpec(graph_from_mask(n, mask), k)
                    exact = (
                        is_q_strong(spec, sigma, min(k, n)).verdict,
                        is_local_strong(spec, sigma).verdict,
                        is_q_strong(spec, sigma, min(2, n)).verdict,
                    )
                    if (exact[0] and not exact[1]) or (exact[1] and not exact[2]):
                        failures.append(
                            _fail_record(spec, sigma, "containment-violation",
                                         chain=list(exact))
                        )
    return HarnessResult(
        "containments",
        "all colorings, all connected unweighted graphs n<=5, k=3",
        checked,
        failures,
        time.perf_counter() - t0,
    )


def suite_k2_lse_eq_2se(seed: int = 0, big: bool = False) -> HarnessResult:
    """For k = 2, LSE and 2-SE verdicts coincide on every coloring of every
    connected graph n <= 6.  Non-Nash profiles fail both at once."""
    t0 = time.perf_counter()
    k = 2
    failures: list[dict[str, Any]] = []
    checked = 0
    for n in range(1, 7):
        total_colorings = k**n
        for mask, adj, ne_profiles in _ne_profile_scan(n, k):
            checked += total_colorings
            for sigma in ne_profiles:
                two, _ = intcheck.q_strong(adj, sigma, k, min(2, n))
                lse, _ = intcheck.local_strong(adj, sigma, k)
                if two != lse:
                    spec = GameSpec(graph_from_mask(n, mask), k)
                    e_two = is_q_strong(spec, sigma, min(2, n)).verdict
                    e_lse = is_local_strong(spec, sigma).verdict
                    if e_two != e_lse:
                        failures.append(
                            _fail_record(spec, sigma, "k2-equivalence-violation",
                                         two_se=e_two, lse=e_lse)
                        )
    return HarnessResult(
        "k2-lse-eq-2se",
        "all colorings, all connected unweighted graphs n<=6, k=2",
        checked,
        failures,
        time.perf_counter() - t0,
    )


def suite_degree_se(seed: int = 0, big: bool = False) -> HarnessResult:
    """When the max degree is at most 2k-1, exact optima of all connected
    graphs n <= 7 pass the full strong-equilibrium check."""
    t0 = time.perf_counter()
    failures: list[dict[str, Any]] = []
    checked = 0
    for k in (2, 3):
        dmax = 2 * k - 1
        for n in range(1, 8):
            pairs = all_node_pairs(n)
            masks = connected_masks(n, max_degree=dmax)
            for mask, sigma, _ in iter_optima(masks, n, k):
                checked += 1
                adj = intcheck.adj_bits_from_mask(n, pairs, mask)
                verdict, _ = intcheck.q_strong(adj, sigma, k, n)
                if not verdict:
                    spec = GameSpec(graph_from_mask(n, mask), k)
                    if not degree_condition_guarantees_se(spec):
                        failures.append(
                            _fail_record(spec, sigma, "corpus-filter-bug")
                        )
                        continue
                    rec = _confirmed_failure(spec, sigma, "se", None)
                    if rec:
                        failures.append(rec)
    return HarnessResult(
        "degree-se",
        "exact optima, all connected graphs n<=7 with max degree <= 2k-1, k in {2,3}",
        checked,
        failures,
        time.perf_counter() - t0,
    )


def suite_girth_se(seed: int = 0, big: bool = False) -> HarnessResult:
    """Cycles C3..C8 and all labeled trees n <= 7: exact optima are strong
    equilibria (girth at least (n+3)/2, or acyclic)."""
    t0 = time.perf_counter()
    failures: list[dict[str, Any]] = []
    checked = 0
    for k in (2, 3):
        instances: list[Graph] = [cycle_graph(n) for n in range(3, 9)]
        for n in range(1, 8):
            instances.extend(iter_trees(n))
        for graph in instances:
            spec = GameSpec(graph, k)
            guarantee = girth_guarantee(spec)
            if not (
                guarantee.se_guaranteed
                or min(guarantee.q_guaranteed, spec.n) >= spec.n
            ):
                failures.append(
                    _fail_record(spec, (), "corpus-not-covered-by-guarantee")
                )
                continue
            sigma, _ = optimal_coloring_exact(spec)
            checked += 1
            adj = intcheck.adj_bits(graph)
            verdict, _ = intcheck.q_strong(adj, sigma, k, spec.n)
            if not verdict:
                rec = _confirmed_failure(spec, sigma, "se", None)
                if rec:
                    failures.append(rec)
    return HarnessResult(
        "girth-se",
        "exact optima, cycles C3..C8 and all labeled trees n<=7, k in {2,3}",
        checked,
        failures,
        time.perf_counter() - t0,
    )


def _scan_lemmas_on_profile(
    spec: GameSpec, adj: list[int], sigma: tuple[int, ...]
) -> Iterator[dict[str, Any]]:
    """All lemma checks for one Nash profile: every strong improvement by
    every coalition is enumerated on the bitset lane; minimality is decided
    from the improvability map; the exact lane re-verifies and reports."""
    pool = intcheck.unsaturated(adj, sigma, spec.k)
    improving: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for size in range(1, len(pool) + 1):
        for members in combinations(pool, size):
            moves = list(
                intcheck.iter_improving_colorings(adj, sigma, spec.k, members)
            )
            if moves:
                improving[members] = moves

    def subset_improves(members: tuple[int, ...]) -> bool:
        member_set = set(members)
        return any(
            set(other) < member_set for other in improving if other != members
        )

    for members, color_choices in improving.items():
        minimal_coalition = not subset_improves(members)
        clique = all(adj[a] >> b & 1 for a, b in combinations(members, 2))
        for colors in color_choices:
            move = JointMove(members, colors)
            if not is_strong_improvement(spec, sigma, move):
                yield _fail_record(spec, sigma, "lane-mismatch-improvement",
                                   move=move_to_dict(move))
                continue
            if minimal_coalition:
                if not is_minimal(spec, sigma, move):
                    yield _fail_record(spec, sigma, "lane-mismatch-minimality",
                                       move=move_to_dict(move))
                    continue
                report = check_minimal_move_invariants(spec, sigma, move, validate=False)
                if not report.ok:
                    yield _fail_record(spec, sigma, "minimal-move-invariant",
                                       move=move_to_dict(move),
                                       colors_preserved=report.colors_preserved,
                                       acyclic_cut=report.acyclic_case_cut_increases)
                bound = check_acyclic_two_color_bound(spec, sigma, move, validate=False)
                if bound.applicable and not bound.holds:
                    yield _fail_record(spec, sigma, "acyclic-two-color-bound",
                                       move=move_to_dict(move),
                                       colors_used=bound.colors_used)
                gain = check_cut_gain_for_color_counts(spec, sigma, move, validate=False)
                if gain.applicable and not gain.cut_increased:
                    yield _fail_record(spec, sigma, "cut-gain-by-color-count",
                                       move=move_to_dict(move),
                                       colors_used=gain.colors_used)
                for u in members:
                    for x in members:
                        if u == x:
                            continue
                        vac = check_unique_vacating_neighbor(
                            spec, sigma, move, u, x, validate=False
                        )
                        if vac.applicable and not vac.ok:
                            yield _fail_record(spec, sigma, "unique-vacating-neighbor",
                                               move=move_to_dict(move), u=u, x=x)
            if clique:
                report = check_clique_deviation_conditions(spec, sigma, move, validate=False)
                if not report.ok:
                    yield _fail_record(spec, sigma, "clique-deviation-conditions",
                                       move=move_to_dict(move),
                                       class_sizes=report.class_sizes_preserved,
                                       unit_drop=report.unit_cost_drops,
                                       indifference=report.switch_indifference)
                try:
                    extract_rotation_subcoalition(spec, sigma, move, validate=False)
                except RotationExtractionError as exc:
                    yield _fail_record(spec, sigma, "rotation-extraction",
                                       move=move_to_dict(move), error=str(exc))


def suite_lemma_scan(seed: int = 0, big: bool = False) -> HarnessResult:
    """Exhaustive lemma replication: every Nash profile of every connected
    graph (n <= 5 at k = 3, n <= 6 at k = 2), every strong improvement by
    every coalition, checked against all five deviation lemmas."""
    t0 = time.perf_counter()
    failures: list[dict[str, Any]] = []
    checked = 0
    for k, n_top in ((3, 5), (2, 6)):
        for n in range(2, n_top + 1):
            for mask, adj, ne_profiles in _ne_profile_scan(n, k):
                spec = GameSpec(graph_from_mask(n, mask), k)
                for sigma in ne_profiles:
                    checked += 1
                    failures.extend(_scan_lemmas_on_profile(spec, adj, sigma))
    return HarnessResult(
        "lemma-scan",
        "all (Nash profile, strong improvement) pairs, connected graphs "
        "n<=5 at k=3 and n<=6 at k=2",
        checked,
        failures,
        time.perf_counter() - t0,
    )


def suite_oracle_equivalence(seed: int = 0, big: bool = False) -> HarnessResult:
    """The exact solver, the clique enumerator and the q-SE checker agree
    with naive full-enumeration oracles on 100 random instances (n <= 6),
    and the bitset lane agrees with the exact lane on the same corpus."""
    t0 = time.perf_counter()
    failures: list[dict[str, Any]] = []
    checked = 0
    for index in range(100):
        rng = derive_rng(seed, 9000 + index)
        n = rng.randint(2, 6)
        k = rng.randint(2, 3)
        weighted = rng.random() < 0.4
        graph = (
            random_weighted_graph(n, rng)
            if weighted
            else random_connected_graph(n, rng)
        )
        spec = GameSpec(graph, k)
        checked += 1

        got = optimal_coloring_exact(spec)
        want = brute_optimal(spec)
        dfs = _optimal_canonical_dfs(spec)
        if got != want or dfs != want:
            failures.append(
                _fail_record(spec, got[0], "optimal-oracle-mismatch",
                             expected=list(want[0]), dfs=list(dfs[0]))
            )

        from .graphs import enumerate_x_local_coalitions

        lib_cliques = sorted(enumerate_x_local_coalitions(graph, 1, n))
        if lib_cliques != brute_cliques(graph, n):
            failures.append(_fail_record(spec, (), "clique-oracle-mismatch"))

        if brute_girth(graph) != graph.girth():
            failures.append(_fail_record(spec, (), "girth-oracle-mismatch"))

        sigma = random_coloring(n, k, rng)
        q = rng.randint(1, n)
        report = is_q_strong(spec, sigma, q)
        naive_verdict, naive_move = brute_q_strong_lexicographic(spec, sigma, q)
        if report.verdict != naive_verdict:
            failures.append(
                _fail_record(spec, sigma, "q-strong-oracle-mismatch", q=q)
            )
        elif not report.verdict and report.witness.move != naive_move:
            failures.append(
                _fail_record(spec, sigma, "q-strong-witness-mismatch", q=q,
                             got=move_to_dict(report.witness.move),
                             expected=move_to_dict(naive_move))
            )
        if not weighted:
            adj = intcheck.adj_bits(graph)
            fast, _ = intcheck.q_strong(adj, sigma, k, q)
            if fast != report.verdict:
                failures.append(
                    _fail_record(spec, sigma, "bitset-lane-mismatch", q=q)
                )
    return HarnessResult(
        "oracle-equivalence",
        "100 seeded random instances n<=6, k in {2,3}, mixed weighted/unweighted",
        checked,
        failures,
        time.perf_counter() - t0,
    )


def suite_dynamics_convergence(seed: int = 0, big: bool = False) -> HarnessResult:
    """Unilateral best-response dynamics on 1000 random unweighted
    (graph, start) pairs converges within m steps with strictly increasing
    cut; strong-minimal(5) dynamics on 1000 pairs converges monotonically."""
    t0 = time.perf_counter()
    failures: list[dict[str, Any]] = []
    checked = 0

    unilateral = Policy(mode="unilateral-best-response")
    for index in range(1000):
        rng = derive_rng(seed, 20_000 + index)
        n = rng.randint(2, 7)
        k = rng.randint(2, 3)
        graph = random_connected_graph(n, rng)
        spec = GameSpec(graph, k)
        sigma0 = random_coloring(n, k, rng)
        trace = run(spec, sigma0, unilateral, max_steps=graph.edge_count + 1)
        checked += 1
        potential = check_potential_candidate(spec, trace, unilateral)
        if (
            trace.status != "converged"
            or trace.step_count > graph.edge_count
            or not potential.monotone
            or potential.is_falsification
        ):
            failures.append(
                _fail_record(spec, sigma0, "unilateral-convergence",
                             status=trace.status, steps=trace.step_count,
                             m=graph.edge_count)
            )
            continue
        if index % 50 == 0 and not is_nash(spec, trace.final_state).verdict:
            failures.append(
                _fail_record(spec, trace.final_state, "terminal-not-nash")
            )

    minimal5 = Policy(mode="strong-minimal", max_coalition_size=5)
    for index in range(1000):
        rng = derive_rng(seed, 40_000 + index)
        n = rng.randint(2, 6)
        k = rng.randint(2, 3)
        graph = random_connected_graph(n, rng)
        spec = GameSpec(graph, k)
        sigma0 = random_coloring(n, k, rng)
        bound = k**n + 1
        trace = run(spec, sigma0, minimal5, max_steps=bound)
        checked += 1
        potential = check_potential_candidate(spec, trace, minimal5)
        if trace.status != "converged" or not potential.monotone:
            failures.append(
                _fail_record(spec, sigma0, "strong-minimal-convergence",
                             status=trace.status,
                             decreases=list(trace.potential_decreases))
            )
            continue
        if index % 50 == 0:
            final = is_q_strong(spec, trace.final_state, min(5, n))
            if not final.verdict:
                failures.append(
                    _fail_record(spec, trace.final_state, "terminal-not-5se")
                )
    return HarnessResult(
        "dynamics-convergence",
        "1000 unilateral runs (n<=7) and 1000 strong-minimal(5) runs (n<=6), "
        "random connected unweighted graphs, k in {2,3}",
        checked,
        failures,
        time.perf_counter() - t0,
    )


def suite_optimal_3se_baseline(seed: int = 0, big: bool = False) -> HarnessResult:
    """Exact optima pass the 3-SE check on weighted and unweighted
    instances alike (the baseline the 5-SE result strengthens)."""
    t0 = time.perf_counter()
    failures: list[dict[str, Any]] = []
    checked = 0
    for index in range(200):
        rng = derive_rng(seed, 60_000 + index)
        n = rng.randint(2, 6)
        k = rng.randint(2, 3)
        graph = random_weighted_graph(n, rng, DEFAULT_WEIGHT_MENU)
        spec = GameSpec(graph, k)
        sigma, _ = optimal_coloring_exact(spec)
        checked += 1
        if not is_q_strong(spec, sigma, min(3, n)).verdict:
            failures.append(_fail_record(spec, sigma, "weighted-optimum-not-3se"))
    for k in (2, 3):
        for n in range(1, 6):
            pairs = all_node_pairs(n)
            for mask, sigma, _ in iter_optima(connected_masks(n), n, k):
                checked += 1
                adj = intcheck.adj_bits_from_mask(n, pairs, mask)
                verdict, _ = intcheck.q_strong(adj, sigma, k, min(3, n))
                if not verdict:
                    spec = GameSpec(graph_from_mask(n, mask), k)
                    rec = _confirmed_failure(spec, sigma, "3se", min(3, n))
                    if rec:
                        failures.append(rec)
    return HarnessResult(
        "optimal-3se-baseline",
        "200 seeded weighted instances n<=6 plus all connected unweighted n<=5, "
        "k in {2,3}",
        checked,
        failures,
        time.perf_counter() - t0,
    )


def suite_se_conjecture(seed: int = 0, big: bool = False) -> HarnessResult:
    """Counterexample search for the open conjecture that unweighted optima
    are always strong equilibria: reports findings, asserts nothing."""
    t0 = time.perf_counter()
    checked = 0
    found: list[str] = []
    for k in (2, 3):
        for n in range(1, 6):
            pairs = all_node_pairs(n)
            for mask, sigma, _ in iter_optima(connected_masks(n), n, k):
                checked += 1
                adj = intcheck.adj_bits_from_mask(n, pairs, mask)
                verdict, info = intcheck.q_strong(adj, sigma, k, n)
                if not verdict:
                    spec = GameSpec(graph_from_mask(n, mask), k)
                    exact = is_strong(spec, sigma)
                    if not exact.verdict:
                        found.append(
                            f"n={n} k={k} mask={mask} sigma={sigma} move={info}"
                        )
    notes = (
        "no counterexample found; the conjecture is consistent with this corpus"
        if not found
        else "CANDIDATE COUNTEREXAMPLES (report upstream): " + "; ".join(found)
    )
    return HarnessResult(
        "se-conjecture",
        "exact optima, all connected unweighted graphs n<=5, k in {2,3}",
        checked,
        [],
        time.perf_counter() - t0,
        notes=notes,
    )


SUITES: dict[str, Callable[..., HarnessResult]] = {
    "optimal-5se": suite_optimal_5se,
    "optimal-lse": suite_optimal_lse,
    "containments": suite_containments,
    "k2-lse-eq-2se": suite_k2_lse_eq_2se,
    "degree-se": suite_degree_se,
    "girth-se": suite_girth_se,
    "lemma-scan": suite_lemma_scan,
    "oracle-equivalence": suite_oracle_equivalence,
    "dynamics-convergence": suite_dynamics_convergence,
    "optimal-3se-baseline": suite_optimal_3se_baseline,
    "se-conjecture": suite_se_conjecture,
}


def verify_theorems(suite: str, seed: int = 0, big: bool = False) -> HarnessResult:
    """Run one named verification suite; unknown names raise KeyError."""
    if suite not in SUITES:
        raise KeyError(
            f"unknown suite {suite!r}; known: {', '.join(sorted(SUITES))}"
        )
    return SUITES[suite](seed=seed, big=big)


def verify_all(seed: int = 0, big: bool = False) -> list[HarnessResult]:
    return [fn(seed=seed, big=big) for fn in SUITES.values()]

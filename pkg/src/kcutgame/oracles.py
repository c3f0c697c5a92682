"""Naive reference implementations used as independent oracles.

Everything here is written the dumb, obviously-correct way: full
enumeration, fresh BFS per query, direct utility recomputation, and no
pruning.  These deliberately do not share code paths with the production
implementations they are used to cross-check.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product

from .game import ColorAssignment, GameSpec
from .graphs import Coalition, Graph


def brute_cut_value(spec: GameSpec, sigma: ColorAssignment) -> Fraction:
    total = Fraction(0)
    for u, v, w in spec.graph.edges():
        if sigma[u] != sigma[v]:
            total += w
    return total


def brute_utility(spec: GameSpec, sigma: ColorAssignment, u: int) -> Fraction:
    total = Fraction(0)
    for v, w in spec.graph.adjacency(u).items():
        if sigma[v] != sigma[u]:
            total += w
    return total


def brute_optimal(spec: GameSpec) -> tuple[ColorAssignment, Fraction]:
    """First maximizer over every one of the k**n colorings."""
    best: ColorAssignment | None = None
    best_value = Fraction(-1)
    for sigma in product(range(1, spec.k + 1), repeat=spec.n):
        value = brute_cut_value(spec, sigma)
        if value > best_value:
            best, best_value = sigma, value
    assert best is not None
    return best, best_value


def brute_cliques(graph: Graph, max_size: int) -> list[Coalition]:
    """All non-empty subsets whose members are pairwise adjacent."""
    out = []
    for size in range(1, max_size + 1):
        for subset in combinations(range(graph.node_count), size):
            if all(graph.has_edge(a, b) for a, b in combinations(subset, 2)):
                out.append(subset)
    return sorted(out)


def _bfs_distance(graph: Graph, src: int, dst: int, skip_edge=None) -> float:
    """Fresh BFS, optionally ignoring one edge (for the girth oracle)."""
    if src == dst:
        return 0
    seen = {src}
    frontier = [src]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for x in frontier:
            for y in graph.adjacency(x):
                if skip_edge and {x, y} == set(skip_edge):
                    continue
                if y == dst:
                    return d
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return float("inf")


def brute_x_local_coalitions(graph: Graph, x: int, max_size: int) -> list[Coalition]:
    out = []
    for size in range(1, max_size + 1):
        for subset in combinations(range(graph.node_count), size):
            if all(
                _bfs_distance(graph, a, b) <= x for a, b in combinations(subset, 2)
            ):
                out.append(subset)
    return sorted(out)


def brute_girth(graph: Graph) -> float:
    """Shortest cycle via the edge-deletion identity: the shortest cycle
    through edge {u, v} has length dist(u, v) + 1 in the graph without it."""
    best = float("inf")
    for u, v, _ in graph.edges():
        d = _bfs_distance(graph, u, v, skip_edge=(u, v))
        if d + 1 < best:
            best = d + 1
    return best


def brute_find_strong_improvement(
    spec: GameSpec, sigma: ColorAssignment, coalition: Coalition
):
    """First strongly-improving movers-only recoloring of the coalition in
    lexicographic order, fully enumerated with no pruning."""
    from .deviation import JointMove

    options = [
        [c for c in range(1, spec.k + 1) if c != sigma[v]] for v in coalition
    ]
    before = [brute_utility(spec, sigma, v) for v in coalition]
    for colors in product(*options):
        after = list(sigma)
        for v, c in zip(coalition, colors):
            after[v] = c
        after_t = tuple(after)
        if all(
            brute_utility(spec, after_t, v) > b for v, b in zip(coalition, before)
        ):
            return JointMove(coalition, colors)
    return None


def brute_q_strong(spec: GameSpec, sigma: ColorAssignment, q: int):
    """Verdict plus the first improving move in coalition order, or None."""
    for size in range(1, q + 1):
        for subset in combinations(range(spec.n), size):
            move = brute_find_strong_improvement(spec, sigma, subset)
            if move is not None:
                return False, move
    return True, None


def brute_q_strong_lexicographic(spec: GameSpec, sigma: ColorAssignment, q: int):
    """Same verdict, scanning coalitions in pure lexicographic (not
    size-first) order, matching the production scan order."""

    def subsets(prefix: tuple[int, ...], start: int):
        for v in range(start, spec.n):
            ext = prefix + (v,)
            yield ext
            if len(ext) < q:
                yield from subsets(ext, v + 1)

    for subset in subsets((), 0):
        move = brute_find_strong_improvement(spec, sigma, subset)
        if move is not None:
            return False, move
    return True, None


def brute_nash(spec: GameSpec, sigma: ColorAssignment) -> bool:
    for v in range(spec.n):
        mu = brute_utility(spec, sigma, v)
        for c in range(1, spec.k + 1):
            if c == sigma[v]:
                continue
            switched = list(sigma)
            switched[v] = c
            if brute_utility(spec, tuple(switched), v) > mu:
                return False
    return True

"""The max k-cut game: strategy profiles, payoffs, cut values and solvers.

A strategy profile (coloring) assigns every node a color in 1..k.  A
player's utility is the total weight of its incident edges toward
differently-colored neighbors; all values are exact Fractions.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .graphs import Coalition, Graph, as_coalition

ColorAssignment = tuple[int, ...]

DEFAULT_BUDGET = 10**8
# Largest k**n enumerated with the dense vectorized kernel; beyond it the
# solver falls back to the canonical depth-first search.
_DENSE_ENUMERATION_LIMIT = 2**22


class GameError(ValueError):
    """Invalid game specification."""


class ColoringError(ValueError):
    """Coloring does not fit the game (length or color range)."""


class BudgetExceededError(RuntimeError):
    """Search-space guard tripped; raise the budget explicitly to proceed."""


def enumeration_budget(default: int = DEFAULT_BUDGET) -> int:
    """Default enumeration guard, overridable via the KCUT_BUDGET env var."""
    raw = os.environ.get("KCUT_BUDGET")
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError as exc:
        raise BudgetExceededError(f"KCUT_BUDGET is not an integer: {raw!r}") from exc


@dataclass(frozen=True)
class GameSpec:
    """A max k-cut game: an arena graph and a common color set 1..k."""

    graph: Graph
    k: int

    def __post_init__(self) -> None:
        if self.k < 2:
            raise GameError(f"k must be >= 2, got {self.k}")

    @property
    def n(self) -> int:
        return self.graph.node_count

    @property
    def unweighted(self) -> bool:
        return self.graph.unweighted


def validate_coloring(spec: GameSpec, sigma: Iterable[int]) -> ColorAssignment:
    coloring = tuple(int(c) for c in sigma)
    if len(coloring) != spec.n:
        raise ColoringError(
            f"coloring has {len(coloring)} entries for a {spec.n}-node game"
        )
    for v, c in enumerate(coloring):
        if not (1 <= c <= spec.k):
            raise ColoringError(f"node {v} colored {c}, outside 1..{spec.k}")
    return coloring


def utility(spec: GameSpec, sigma: ColorAssignment, u: int) -> Fraction:
    """Total weight of u's edges toward differently-colored neighbors."""
    spec.graph._check_node(u)
    cu = sigma[u]
    total = Fraction(0)
    for v, w in spec.graph.adjacency(u).items():
        if sigma[v] != cu:
            total += w
    return total


def cost(spec: GameSpec, sigma: ColorAssignment, u: int) -> Fraction:
    """Weight of u's edges toward same-colored neighbors.

    Exactly degree(u) - utility(u).
    """
    spec.graph._check_node(u)
    cu = sigma[u]
    total = Fraction(0)
    for v, w in spec.graph.adjacency(u).items():
        if sigma[v] == cu:
            total += w
    return total


def color_degree(spec: GameSpec, sigma: ColorAssignment, u: int, color: int) -> Fraction:
    """Total weight of u's edges toward neighbors colored `color`."""
    if not (1 <= color <= spec.k):
        raise ColoringError(f"color {color} outside 1..{spec.k}")
    total = Fraction(0)
    for v, w in spec.graph.adjacency(u).items():
        if sigma[v] == color:
            total += w
    return total


def cut_value(spec: GameSpec, sigma: ColorAssignment) -> Fraction:
    """Total weight of properly-colored edges."""
    total = Fraction(0)
    for u, v, w in spec.graph.edges():
        if sigma[u] != sigma[v]:
            total += w
    return total


def social_welfare(spec: GameSpec, sigma: ColorAssignment) -> Fraction:
    """Sum of all utilities; equals twice the cut value."""
    return 2 * cut_value(spec, sigma)


def coalition_colors(sigma: ColorAssignment, coalition: Iterable[int]) -> frozenset[int]:
    """Set of colors used by the coalition under sigma."""
    members = as_coalition(coalition, len(sigma))
    return frozenset(sigma[v] for v in members)


def color_class(sigma: ColorAssignment, coalition: Iterable[int], color: int) -> Coalition:
    """Members of the coalition colored `color` (possibly the empty tuple)."""
    members = as_coalition(coalition, len(sigma))
    return tuple(v for v in members if sigma[v] == color)


def coalition_cost(
    spec: GameSpec, sigma: ColorAssignment, u: int, coalition: Iterable[int]
) -> Fraction:
    """Weight of monochromatic edges from u into the coalition under sigma."""
    members = set(as_coalition(coalition, spec.n))
    cu = sigma[u]
    total = Fraction(0)
    for v, w in spec.graph.adjacency(u).items():
        if v in members and sigma[v] == cu:
            total += w
    return total


def search_space_estimate(spec: GameSpec) -> int:
    """Estimated canonical enumeration size after symmetry pruning.

    Fixing node 0 to color 1 removes one factor of k; the first-appearance
    order removes more, but k^(n-1) is the guard we count against.
    """
    return spec.k ** max(0, spec.n - 1)


def optimal_coloring_exact(
    spec: GameSpec, budget: int | None = None
) -> tuple[ColorAssignment, Fraction]:
    """A maximum-cut coloring and its exact cut value.

    Deterministic tie-break: the lexicographically smallest maximizing
    coloring.  The search runs over canonical colorings only (node 0 is
    colored 1 and color c+1 appears only after color c); because the cut
    value is invariant under color renaming, the lexicographically smallest
    global maximizer is itself canonical, so the pruning never changes the
    answer.
    """
    if spec.n == 0:
        raise GameError("cannot optimize the empty game")
    limit = enumeration_budget() if budget is None else budget
    estimate = search_space_estimate(spec)
    if estimate > limit:
        raise BudgetExceededError(
            f"estimated search size {estimate} exceeds budget {limit}"
        )
    if spec.k**spec.n <= _DENSE_ENUMERATION_LIMIT and spec.n <= 16:
        from . import fastscan

        return fastscan.optimal_by_enumeration(spec)
    return _optimal_canonical_dfs(spec)


def _optimal_canonical_dfs(spec: GameSpec) -> tuple[ColorAssignment, Fraction]:
    graph, k, n = spec.graph, spec.k, spec.n
    # Weight from node v to already-assigned lower-indexed neighbors, plus
    # the total weight of edges not yet fully assigned, gives a sound upper
    # bound for branch-and-bound pruning.
    suffix_weight = [Fraction(0)] * (n + 1)
    for u, v, w in graph.edges():
        suffix_weight[max(u, v)] += w
    remaining = [Fraction(0)] * (n + 2)
    for v in range(n - 1, -1, -1):
        remaining[v] = remaining[v + 1] + suffix_weight[v]

    best_value = Fraction(-1)
    best: list[int] | None = None
    assignment = [0] * n

    def descend(v: int, cut_so_far: Fraction, colors_used: int) -> None:
        nonlocal best_value, best
        if v == n:
            if cut_so_far > best_value:
                best_value = cut_so_far
                best = assignment.copy()
            return
        if cut_so_far + remaining[v] <= best_value:
            return
        top = min(colors_used + 1, k)
        for c in range(1, top + 1):
            gained = Fraction(0)
            for u, w in graph.adjacency(v).items():
                if u < v and assignment[u] != c:
                    gained += w
            assignment[v] = c
            descend(v + 1, cut_so_far + gained, max(colors_used, c))
        assignment[v] = 0

    descend(0, Fraction(0), 0)
    assert best is not None
    return tuple(best), best_value


def best_response(
    spec: GameSpec, sigma: ColorAssignment, u: int
) -> tuple[int, Fraction]:
    """u's best color given the others, with its utility.

    Ties break toward the current color first, then the smallest color, so
    a player indifferent to switching stays put.
    """
    by_color = [Fraction(0)] * (spec.k + 1)
    for v, w in spec.graph.adjacency(u).items():
        by_color[sigma[v]] += w
    degree = sum(by_color[1:], Fraction(0))
    best_c, best_util = sigma[u], degree - by_color[sigma[u]]
    for c in range(1, spec.k + 1):
        util = degree - by_color[c]
        if util > best_util:
            best_c, best_util = c, util
    return best_c, best_util


def local_search_coloring(spec: GameSpec, seed: int) -> ColorAssignment:
    """A Nash-stable coloring from iterated best responses.

    Starts from a seeded uniform-random coloring and repeatedly applies
    strictly-improving best responses in node order until a full pass makes
    no change.  Each applied move strictly increases the cut value, so the
    loop terminates; identical seeds give identical outputs.
    """
    rng = random.Random(seed)
    sigma = [rng.randint(1, spec.k) for _ in range(spec.n)]
    changed = True
    while changed:
        changed = False
        for u in range(spec.n):
            c, util = best_response(spec, tuple(sigma), u)
            if c != sigma[u] and util > utility(spec, tuple(sigma), u):
                sigma[u] = c
                changed = True
    return tuple(sigma)

"""Coalition deviations: joint moves, strong improvements, minimality, and
structural checks on deviations from stable profiles.

A JointMove follows the movers-only convention: every coalition member's new
color differs from its current one.  A non-moving member reaches the same
profile via the smaller coalition, so admitting non-movers would only
inflate enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Sequence

from .game import (
    ColorAssignment,
    GameSpec,
    color_degree,
    cost,
    cut_value,
    utility,
    validate_coloring,
)
from .graphs import Coalition, as_coalition


class MoveError(ValueError):
    """Malformed joint move."""


class PreconditionError(ValueError):
    """An operation's stated precondition does not hold."""


@dataclass(frozen=True)
class JointMove:
    """A coalition plus one new color per member (parallel tuples)."""

    coalition: Coalition
    new_colors: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coalition", tuple(self.coalition))
        object.__setattr__(self, "new_colors", tuple(self.new_colors))
        if len(self.coalition) != len(self.new_colors):
            raise MoveError("coalition and new_colors must be parallel")

    @property
    def size(self) -> int:
        return len(self.coalition)

    def new_color_of(self, v: int) -> int:
        return self.new_colors[self.coalition.index(v)]

    def restricted_to(self, members: Sequence[int]) -> "JointMove":
        """The same move restricted to a subset of the coalition."""
        subset = as_coalition(members)
        index = {v: i for i, v in enumerate(self.coalition)}
        try:
            colors = tuple(self.new_colors[index[v]] for v in subset)
        except KeyError as exc:
            raise MoveError(f"{exc.args[0]} is not in the coalition") from None
        return JointMove(subset, colors)


def validate_move(spec: GameSpec, sigma: ColorAssignment, move: JointMove) -> None:
    as_coalition(move.coalition, spec.n)
    for v, c in zip(move.coalition, move.new_colors):
        if not (1 <= c <= spec.k):
            raise MoveError(f"new color {c} for node {v} outside 1..{spec.k}")
        if sigma[v] == c:
            raise MoveError(
                f"node {v} keeps color {c}; joint moves are movers-only"
            )


def apply_move(sigma: ColorAssignment, move: JointMove) -> ColorAssignment:
    """The profile after the coalition deviates; sigma itself is unchanged."""
    out = list(sigma)
    for v, c in zip(move.coalition, move.new_colors):
        if out[v] == c:
            raise MoveError(f"node {v} keeps color {c}; joint moves are movers-only")
        out[v] = c
    return tuple(out)


def member_utilities(
    spec: GameSpec, sigma: ColorAssignment, members: Sequence[int]
) -> tuple[Fraction, ...]:
    return tuple(utility(spec, sigma, v) for v in members)


def is_strong_improvement(spec: GameSpec, sigma: ColorAssignment, move: JointMove) -> bool:
    """True iff every member's utility strictly increases under the move."""
    validate_move(spec, sigma, move)
    after = apply_move(sigma, move)
    return all(
        utility(spec, after, v) > utility(spec, sigma, v) for v in move.coalition
    )


@dataclass(frozen=True)
class DeviationWitness:
    """Proof object for a non-equilibrium verdict: a strong improvement with
    its before/after utilities and cut values."""

    move: JointMove
    utilities_before: tuple[Fraction, ...]
    utilities_after: tuple[Fraction, ...]
    cut_before: Fraction
    cut_after: Fraction

    def revalidate(self, spec: GameSpec, sigma: ColorAssignment) -> bool:
        """Recompute everything from scratch and compare.

        Also cross-checks the cut delta against half the total utility delta,
        which must agree exactly.
        """
        try:
            validate_move(spec, sigma, self.move)
        except ValueError:
            return False
        after = apply_move(sigma, self.move)
        before_mu = member_utilities(spec, sigma, self.move.coalition)
        after_mu = member_utilities(spec, after, self.move.coalition)
        if before_mu != self.utilities_before or after_mu != self.utilities_after:
            return False
        if any(b >= a for b, a in zip(before_mu, after_mu)):
            return False
        cb, ca = cut_value(spec, sigma), cut_value(spec, after)
        if cb != self.cut_before or ca != self.cut_after:
            return False
        delta_mu = sum(
            (utility(spec, after, v) - utility(spec, sigma, v) for v in range(spec.n)),
            Fraction(0),
        )
        return ca - cb == delta_mu / 2


def make_witness(spec: GameSpec, sigma: ColorAssignment, move: JointMove) -> DeviationWitness:
    if not is_strong_improvement(spec, sigma, move):
        raise PreconditionError("move is not a strong improvement")
    after = apply_move(sigma, move)
    return DeviationWitness(
        move=move,
        utilities_before=member_utilities(spec, sigma, move.coalition),
        utilities_after=member_utilities(spec, after, move.coalition),
        cut_before=cut_value(spec, sigma),
        cut_after=cut_value(spec, after),
    )


# -- complete search for strong improvements -------------------------------


def _candidate_colors(
    spec: GameSpec, sigma: ColorAssignment, members: Coalition
) -> list[list[int]] | None:
    """Per-member candidate new colors, in ascending order.

    A color c is kept for member u only if u could strictly gain even in the
    best case where every coalition neighbor of u avoids c, i.e. when u's
    loss is only its weight toward non-coalition neighbors colored c.  This
    is a necessary condition, so dropping the others never misses an
    improvement.  Returns None when some member has no candidates.
    """
    member_set = set(members)
    graph = spec.graph
    out: list[list[int]] = []
    for u in members:
        mu = Fraction(0)
        ext = [Fraction(0)] * (spec.k + 1)
        cu = sigma[u]
        degree = Fraction(0)
        for v, w in graph.adjacency(u).items():
            degree += w
            if sigma[v] != cu:
                mu += w
            if v not in member_set:
                ext[sigma[v]] += w
        cands = [
            c for c in range(1, spec.k + 1) if c != cu and degree - ext[c] > mu
        ]
        if not cands:
            return None
        out.append(cands)
    return out


def iter_strong_improvements(
    spec: GameSpec, sigma: ColorAssignment, coalition: Sequence[int]
) -> Iterator[JointMove]:
    """All strong improvements by exactly this coalition, in lexicographic
    order of their movers-only new-color tuples.

    Complete: the pruning only discards color choices that provably cannot
    strictly improve the affected member.
    """
    members = as_coalition(coalition, spec.n)
    candidates = _candidate_colors(spec, sigma, members)
    if candidates is None:
        return
    graph = spec.graph
    size = len(members)
    index = {v: i for i, v in enumerate(members)}
    mu_before = [utility(spec, sigma, v) for v in members]
    degree = [graph.degree(v) for v in members]
    ext_loss = []
    member_set = set(members)
    for u in members:
        ext = [Fraction(0)] * (spec.k + 1)
        for v, w in graph.adjacency(u).items():
            if v not in member_set:
                ext[sigma[v]] += w
        ext_loss.append(ext)
    inner_adj = [
        [(index[v], w) for v, w in graph.adjacency(members[i]).items() if v in member_set]
        for i in range(size)
    ]
    # Member i's exact new utility is known once all its coalition neighbors
    # are assigned; check it at the deepest such position.
    check_at: list[list[int]] = [[] for _ in range(size)]
    for i in range(size):
        last = max([i] + [j for j, _ in inner_adj[i]])
        check_at[last].append(i)

    chosen = [0] * size

    def exact_gain_ok(i: int) -> bool:
        c = chosen[i]
        loss = ext_loss[i][c]
        for j, w in inner_adj[i]:
            if chosen[j] == c:
                loss += w
        return degree[i] - loss > mu_before[i]

    def descend(depth: int) -> Iterator[JointMove]:
        if depth == size:
            yield JointMove(members, tuple(chosen))
            return
        for c in candidates[depth]:
            chosen[depth] = c
            if all(exact_gain_ok(i) for i in check_at[depth]):
                yield from descend(depth + 1)
        chosen[depth] = 0

    yield from descend(0)


def find_strong_improvement(
    spec: GameSpec, sigma: ColorAssignment, coalition: Sequence[int]
) -> JointMove | None:
    """First strong improvement by exactly this coalition in lexicographic
    new-color order, or None when no recoloring strongly improves."""
    validate_coloring(spec, sigma)
    for move in iter_strong_improvements(spec, sigma, coalition):
        return move
    return None


def has_strong_improvement(
    spec: GameSpec, sigma: ColorAssignment, coalition: Sequence[int]
) -> bool:
    return find_strong_improvement(spec, sigma, coalition) is not None


def is_minimal(
    spec: GameSpec,
    sigma: ColorAssignment,
    move: JointMove,
    semantics: str = "any",
) -> bool:
    """Whether no proper non-empty subset of the coalition could deviate.

    semantics="any" (the primary reading): a subset disqualifies the move if
    it admits any strong improvement from sigma.  semantics="restriction":
    only the restriction of this move's colors to the subset is considered.
    """
    if not is_strong_improvement(spec, sigma, move):
        raise PreconditionError("is_minimal requires a strong improvement")
    if semantics not in ("any", "restriction"):
        raise ValueError(f"unknown minimality semantics {semantics!r}")
    members = move.coalition
    for size in range(1, len(members)):
        for subset in combinations(members, size):
            if semantics == "any":
                if has_strong_improvement(spec, sigma, subset):
                    return False
            else:
                restricted = move.restricted_to(subset)
                if is_strong_improvement(spec, sigma, restricted):
                    return False
    return True


# -- structural checks on deviations ----------------------------------------


def _require_minimal_improvement(
    spec: GameSpec, sigma: ColorAssignment, move: JointMove, validate: bool
) -> None:
    if validate:
        if not is_strong_improvement(spec, sigma, move):
            raise PreconditionError("move is not a strong improvement")
        if not is_minimal(spec, sigma, move):
            raise PreconditionError("move is not minimal")


@dataclass(frozen=True)
class MinimalMoveReport:
    """Facts every minimal strong improvement must satisfy: the coalition's
    color set is preserved (for coalitions of size >= 2; vacuous and
    reported as None for singletons), and when the induced subgraph is
    acyclic the cut strictly increases."""

    colors_preserved: bool | None
    coalition_acyclic: bool
    acyclic_case_cut_increases: bool | None

    @property
    def ok(self) -> bool:
        return self.colors_preserved is not False and (
            self.acyclic_case_cut_increases is not False
        )


def check_minimal_move_invariants(
    spec: GameSpec, sigma: ColorAssignment, move: JointMove, validate: bool = True
) -> MinimalMoveReport:
    _require_minimal_improvement(spec, sigma, move, validate)
    after = apply_move(sigma, move)
    members = move.coalition
    if len(members) == 1:
        preserved: bool | None = None
    else:
        preserved = frozenset(sigma[v] for v in members) == frozenset(
            after[v] for v in members
        )
    acyclic = spec.graph.induced_subgraph(members).is_acyclic()
    gain: bool | None = None
    if acyclic:
        gain = cut_value(spec, after) > cut_value(spec, sigma)
    return MinimalMoveReport(preserved, acyclic, gain)


@dataclass(frozen=True)
class AcyclicColorBoundReport:
    """Minimal improvements by acyclic coalitions of size > 2 must start
    from at most two colors."""

    applicable: bool
    colors_used: int | None
    holds: bool | None


def check_acyclic_two_color_bound(
    spec: GameSpec, sigma: ColorAssignment, move: JointMove, validate: bool = True
) -> AcyclicColorBoundReport:
    _require_minimal_improvement(spec, sigma, move, validate)
    members = move.coalition
    if len(members) <= 2 or not spec.graph.induced_subgraph(members).is_acyclic():
        return AcyclicColorBoundReport(False, None, None)
    used = len({sigma[v] for v in members})
    return AcyclicColorBoundReport(True, used, used <= 2)


@dataclass(frozen=True)
class UniqueVacancyReport:
    """Outcome of the unique-vacating-neighbor conditions for a pair (u, x):
    when u moves into x's old color and x is u's only coalition neighbor
    vacating it, u's old and new color degrees at sigma must be equal, and
    any third member moving into that same color must not be adjacent to u.
    """

    applicable: bool
    degree_equality_holds: bool | None
    third_players: tuple[int, ...]
    nonadjacency_holds: bool | None
    variant: str = "main-text"

    @property
    def ok(self) -> bool:
        return self.degree_equality_holds is not False and (
            self.nonadjacency_holds is not False
        )


def check_unique_vacating_neighbor(
    spec: GameSpec,
    sigma: ColorAssignment,
    move: JointMove,
    u: int,
    x: int,
    validate: bool = True,
) -> UniqueVacancyReport:
    """Evaluate the lone-vacating-neighbor conditions on members u, x.

    Hypotheses: (i) sigma(u) != sigma(x); (ii) u moves exactly to sigma(x);
    (iii) x is the only coalition neighbor of u colored sigma(x).  The
    source profile must be a Nash equilibrium and the move minimal.
    """
    if u not in move.coalition or x not in move.coalition or u == x:
        raise PreconditionError("u and x must be distinct coalition members")
    if validate:
        from .equilibrium import is_nash

        if not is_nash(spec, sigma).verdict:
            raise PreconditionError("source profile is not a Nash equilibrium")
    _require_minimal_improvement(spec, sigma, move, validate)

    target = sigma[x]
    hyp = (
        sigma[u] != target
        and move.new_color_of(u) == target
        and tuple(
            y
            for y in move.coalition
            if spec.graph.has_edge(u, y) and sigma[y] == target
        )
        == (x,)
    )
    if not hyp:
        return UniqueVacancyReport(False, None, (), None)
    equality = color_degree(spec, sigma, u, sigma[u]) == color_degree(
        spec, sigma, u, target
    )
    thirds = tuple(
        v
        for v in move.coalition
        if v not in (u, x) and sigma[v] != target and move.new_color_of(v) == target
    )
    nonadj: bool | None = None
    if thirds:
        nonadj = all(not spec.graph.has_edge(u, v) for v in thirds)
    return UniqueVacancyReport(True, equality, thirds, nonadj)


@dataclass(frozen=True)
class CliqueDeviationReport:
    """Necessary conditions when a clique strongly improves from a Nash
    equilibrium in the unweighted game: per-color class sizes inside the
    coalition are preserved, every member's cost drops by exactly one, and
    every member was exactly indifferent to its new color at sigma."""

    class_sizes_preserved: bool
    unit_cost_drops: bool
    switch_indifference: bool

    @property
    def ok(self) -> bool:
        return (
            self.class_sizes_preserved
            and self.unit_cost_drops
            and self.switch_indifference
        )


def _require_unweighted_clique_from_nash(
    spec: GameSpec, sigma: ColorAssignment, move: JointMove, validate: bool
) -> None:
    if not spec.unweighted:
        raise PreconditionError(
            "clique-deviation conditions are only established for the unweighted game"
        )
    members = move.coalition
    for a, b in combinations(members, 2):
        if not spec.graph.has_edge(a, b):
            raise PreconditionError("coalition does not induce a clique")
    if validate:
        from .equilibrium import is_nash

        if not is_nash(spec, sigma).verdict:
            raise PreconditionError("source profile is not a Nash equilibrium")
        if not is_strong_improvement(spec, sigma, move):
            raise PreconditionError("move is not a strong improvement")


def check_clique_deviation_conditions(
    spec: GameSpec, sigma: ColorAssignment, move: JointMove, validate: bool = True
) -> CliqueDeviationReport:
    _require_unweighted_clique_from_nash(spec, sigma, move, validate)
    after = apply_move(sigma, move)
    members = move.coalition
    sizes_ok = all(
        sum(1 for v in members if sigma[v] == c)
        == sum(1 for v in members if after[v] == c)
        for c in range(1, spec.k + 1)
    )
    drops_ok = all(
        cost(spec, sigma, v) - cost(spec, after, v) == 1 for v in members
    )
    indifferent_ok = all(
        cost(spec, sigma, v) == color_degree(spec, sigma, v, after[v])
        for v in members
    )
    return CliqueDeviationReport(sizes_ok, drops_ok, indifferent_ok)


class RotationExtractionError(RuntimeError):
    """The guaranteed rotation subcoalition could not be constructed: a
    falsification of a proven statement, surfaced loudly."""


def extract_rotation_subcoalition(
    spec: GameSpec, sigma: ColorAssignment, move: JointMove, validate: bool = True
) -> tuple[int, ...]:
    """An ordered subcoalition u_1..u_j of a strongly-improving clique such
    that each u_i moves exactly onto u_{i+1}'s old color (cyclically), and
    the move restricted to it is itself a strong improvement.

    Construction: walk members following new-color -> old-color matches
    (smallest id on ties) until a color repeats, then cut the cycle.
    """
    _require_unweighted_clique_from_nash(spec, sigma, move, validate)
    members = move.coalition
    walk = [members[0]]
    walk_colors = [sigma[members[0]]]
    while True:
        target = move.new_color_of(walk[-1])
        if target in walk_colors:
            cycle = walk[walk_colors.index(target):]
            break
        nxt = min(
            (v for v in members if sigma[v] == target and v not in walk),
            default=None,
        )
        if nxt is None:
            raise RotationExtractionError(
                f"no unvisited member holds color {target}; move={move}"
            )
        walk.append(nxt)
        walk_colors.append(target)
    for i, v in enumerate(cycle):
        succ = cycle[(i + 1) % len(cycle)]
        if move.new_color_of(v) != sigma[succ]:
            raise RotationExtractionError(f"rotation property failed at {v}->{succ}")
    sub = move.restricted_to(sorted(cycle))
    if not is_strong_improvement(spec, sigma, sub):
        raise RotationExtractionError(
            f"extracted subcoalition {cycle} does not strongly improve alone"
        )
    return tuple(cycle)


@dataclass(frozen=True)
class CutGainReport:
    """When a minimal improvement's coalition starts on 2, |C|-1 or |C|
    colors, the cut must strictly increase."""

    applicable: bool
    colors_used: int | None
    cut_increased: bool | None


def check_cut_gain_for_color_counts(
    spec: GameSpec, sigma: ColorAssignment, move: JointMove, validate: bool = True
) -> CutGainReport:
    if validate:
        from .equilibrium import is_nash

        if not is_nash(spec, sigma).verdict:
            raise PreconditionError("source profile is not a Nash equilibrium")
    _require_minimal_improvement(spec, sigma, move, validate)
    members = move.coalition
    used = len({sigma[v] for v in members})
    if used not in {2, len(members) - 1, len(members)}:
        return CutGainReport(False, used, None)
    after = apply_move(sigma, move)
    return CutGainReport(True, used, cut_value(spec, after) > cut_value(spec, sigma))

"""Improvement dynamics: unilateral best responses and coalition strong
improvements under a policy, with exact state-revisit detection and
cut-value (potential) monitoring.

A run is deterministic given (spec, start, policy, max_steps): lexicographic
selection is a fixed total order over admissible moves, and seeded-random
selection draws from a per-run RNG over the fully-enumerated admissible set.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterator

from .deviation import JointMove, apply_move, iter_strong_improvements
from .equilibrium import unsaturated_nodes
from .game import ColorAssignment, GameSpec, cut_value, utility, validate_coloring

MODES = ("unilateral-best-response", "strong-minimal", "strong-any", "clique-only")
SELECTIONS = ("lexicographic", "seeded-random")


class PolicyError(ValueError):
    """Invalid dynamics policy."""


@dataclass(frozen=True)
class Policy:
    """Which moves a step may apply and how one is selected among them.

    Modes: "unilateral-best-response" (single players playing their best
    response), "strong-minimal" (minimal strong improvements of coalitions
    up to max_coalition_size), "strong-any" (same without the minimality
    filter), "clique-only" (strong improvements by cliques, the 1-local
    coalitions).  Selection is "lexicographic" (smallest coalition size,
    then coalition ids, then new-color tuple; for unilateral mode: largest
    gain, then player id) or "seeded-random" (uniform over the full
    admissible set, from the run's RNG).
    """

    mode: str
    max_coalition_size: int | None = None
    selection: str = "lexicographic"
    seed: int | None = None

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise PolicyError(f"unknown mode {self.mode!r}")
        if self.selection not in SELECTIONS:
            raise PolicyError(f"unknown selection {self.selection!r}")
        if self.max_coalition_size is not None and self.max_coalition_size < 1:
            raise PolicyError("max_coalition_size must be >= 1")
        if self.selection == "seeded-random" and self.seed is None:
            raise PolicyError("seeded-random selection requires a seed")

    def cap(self, spec: GameSpec) -> int:
        if self.mode == "unilateral-best-response":
            return 1
        if self.max_coalition_size is None:
            return spec.n
        return min(self.max_coalition_size, spec.n)

    @property
    def converged_concept(self) -> str:
        if self.mode == "unilateral-best-response":
            return "ne"
        if self.mode == "clique-only":
            return "lse(1)"
        return f"{self.max_coalition_size}-se" if self.max_coalition_size else "se"


def _best_response_moves(
    spec: GameSpec, sigma: ColorAssignment
) -> list[tuple[Fraction, JointMove]]:
    """One (gain, move) per player with a strictly improving best response;
    the best color breaks ties toward the smallest color."""
    out = []
    for v in unsaturated_nodes(spec, sigma):
        by_color = [Fraction(0)] * (spec.k + 1)
        degree = Fraction(0)
        for u, w in spec.graph.adjacency(v).items():
            by_color[sigma[u]] += w
            degree += w
        mu = degree - by_color[sigma[v]]
        best_c, best_mu = sigma[v], mu
        for c in range(1, spec.k + 1):
            if degree - by_color[c] > best_mu:
                best_c, best_mu = c, degree - by_color[c]
        if best_c != sigma[v]:
            out.append((best_mu - mu, JointMove((v,), (best_c,))))
    return out


def _iter_coalition_moves(
    spec: GameSpec, sigma: ColorAssignment, policy: Policy
) -> Iterator[JointMove]:
    """Strong improvements admissible under a coalition mode, in the
    lexicographic selection order (size, coalition, colors).

    For "strong-minimal" this iterates sizes in ascending order and relies
    on the scan itself for minimality: when a size-s coalition improves and
    no coalition of any smaller size improves, no proper subset can improve
    either, so the move is minimal.  Callers that consume past the first
    yielded size must apply their own minimality filter (see
    admissible_moves).
    """
    cap = policy.cap(spec)
    pool = unsaturated_nodes(spec, sigma)
    if not pool:
        return
    if policy.mode == "clique-only":
        adj = [spec.graph.adjacency(v) for v in range(spec.n)]
        for size in range(1, cap + 1):
            for coalition in combinations(pool, size):
                if all(b in adj[a] for a, b in combinations(coalition, 2)):
                    yield from iter_strong_improvements(spec, sigma, coalition)
    else:
        for size in range(1, cap + 1):
            for coalition in combinations(pool, size):
                yield from iter_strong_improvements(spec, sigma, coalition)


def admissible_moves(
    spec: GameSpec, sigma: ColorAssignment, policy: Policy
) -> list[JointMove]:
    """The full admissible move set at sigma under the policy."""
    sigma = validate_coloring(spec, sigma)
    if policy.mode == "unilateral-best-response":
        return [m for _, m in _best_response_moves(spec, sigma)]
    moves = list(_iter_coalition_moves(spec, sigma, policy))
    if policy.mode == "strong-minimal" and moves:
        improvable = {m.coalition for m in moves}
        moves = [
            m
            for m in moves
            if not any(
                set(sub) < set(m.coalition)
                for sub in improvable
                if sub != m.coalition
            )
        ]
    return moves


def step(
    spec: GameSpec,
    sigma: ColorAssignment,
    policy: Policy,
    rng: random.Random | None = None,
) -> JointMove | None:
    """One policy-admissible move, or None when sigma already satisfies the
    policy's equilibrium concept (NE / q-SE / LSE)."""
    sigma = validate_coloring(spec, sigma)
    if policy.selection == "seeded-random":
        if rng is None:
            rng = random.Random(policy.seed)
        moves = admissible_moves(spec, sigma, policy)
        return rng.choice(moves) if moves else None
    if policy.mode == "unilateral-best-response":
        scored = _best_response_moves(spec, sigma)
        if not scored:
            return None
        return max(scored, key=lambda gm: (gm[0], -gm[1].coalition[0]))[1]
    for move in _iter_coalition_moves(spec, sigma, policy):
        # First move in (size, coalition, colors) order; minimal by the
        # ascending-size argument when the mode demands it.
        return move
    return None


@dataclass(frozen=True)
class DynamicsTrace:
    """A run transcript: states (starting profile first), the applied moves
    (moves[i] leads from states[i] to states[i+1]), per-state cut values,
    and the terminal status."""

    states: tuple[ColorAssignment, ...]
    moves: tuple[JointMove, ...]
    cut_values: tuple[Fraction, ...]
    status: str  # "converged" | "cycle" | "budget_exhausted"
    converged_concept: str | None = None
    first_repeat_index: int | None = None
    potential_decreases: tuple[int, ...] = field(default_factory=tuple)

    @property
    def step_count(self) -> int:
        return len(self.moves)

    @property
    def final_state(self) -> ColorAssignment:
        return self.states[-1]

    def replay_consistent(self, spec: GameSpec) -> bool:
        """Re-derive every transition and cut value from scratch."""
        for i, move in enumerate(self.moves):
            if apply_move(self.states[i], move) != self.states[i + 1]:
                return False
            if not all(
                utility(spec, self.states[i + 1], v) > utility(spec, self.states[i], v)
                for v in move.coalition
            ):
                return False
        if any(cut_value(spec, s) != c for s, c in zip(self.states, self.cut_values)):
            return False
        if self.status == "cycle":
            if self.first_repeat_index is None:
                return False
            return self.states[-1] == self.states[self.first_repeat_index]
        return True


def run(
    spec: GameSpec,
    sigma0: ColorAssignment,
    policy: Policy,
    max_steps: int,
) -> DynamicsTrace:
    """Iterate `step` until no admissible move remains (converged), a state
    repeats (cycle), or max_steps moves were applied (budget_exhausted)."""
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    sigma = validate_coloring(spec, sigma0)
    rng = random.Random(policy.seed) if policy.selection == "seeded-random" else None
    states = [sigma]
    cuts = [cut_value(spec, sigma)]
    moves: list[JointMove] = []
    seen = {sigma: 0}
    status = "budget_exhausted"
    concept: str | None = None
    repeat: int | None = None
    for _ in range(max_steps):
        move = step(spec, sigma, policy, rng=rng)
        if move is None:
            status = "converged"
            concept = policy.converged_concept
            break
        sigma = apply_move(sigma, move)
        moves.append(move)
        states.append(sigma)
        cuts.append(cut_value(spec, sigma))
        if sigma in seen:
            status = "cycle"
            repeat = seen[sigma]
            break
        seen[sigma] = len(states) - 1
    decreases = tuple(i for i in range(len(moves)) if cuts[i + 1] < cuts[i])
    return DynamicsTrace(
        states=tuple(states),
        moves=tuple(moves),
        cut_values=tuple(cuts),
        status=status,
        converged_concept=concept,
        first_repeat_index=repeat,
        potential_decreases=decreases,
    )


@dataclass(frozen=True)
class PotentialReport:
    """Whether the cut value behaved as a (strong) potential along a trace:
    strictly increasing at every applied move.  A decrease under the
    unilateral policy would falsify the single-move potential property; a
    decrease under a coalition policy is expected evidence that the cut is
    not a strong potential."""

    policy_mode: str
    monotone: bool
    decreases: tuple[int, ...]
    is_falsification: bool


def check_potential_candidate(
    spec: GameSpec, trace: DynamicsTrace, policy: Policy
) -> PotentialReport:
    decreases = trace.potential_decreases
    monotone = not decreases and all(
        trace.cut_values[i + 1] > trace.cut_values[i]
        for i in range(trace.step_count)
    )
    falsified = bool(decreases) and policy.mode == "unilateral-best-response"
    return PotentialReport(policy.mode, monotone, decreases, falsified)

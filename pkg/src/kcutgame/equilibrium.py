"""Equilibrium-concept checkers: NE, q-SE, x-LSE, SE, region classification,
and the girth/degree sufficient conditions for strong equilibria.

Every false verdict carries a re-validatable DeviationWitness; every true
verdict records how many coalitions were examined.  Coalition scans are
restricted to unsaturated players (utility < degree): a strong improvement
must strictly raise every member's utility, and utility never exceeds
degree, so saturated players can never join a deviating coalition.  The
prune is therefore sound and complete, and cannot change any verdict or
witness order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .deviation import (
    DeviationWitness,
    JointMove,
    find_strong_improvement,
    make_witness,
)
from .game import (
    BudgetExceededError,
    ColorAssignment,
    GameSpec,
    enumeration_budget,
    utility,
    validate_coloring,
)
from .graphs import (
    INFINITY,
    enumerate_cliques,
    enumerate_coalitions,
    enumerate_x_local_coalitions,
)


class WeightedInputError(ValueError):
    """The predicate is only established for unweighted graphs."""


class ContainmentViolation(RuntimeError):
    """A proven containment between equilibrium concepts failed empirically;
    fatal for the verification harness."""


@dataclass(frozen=True)
class EquilibriumReport:
    concept: str
    verdict: bool
    witness: DeviationWitness | None
    coalitions_examined: int

    def revalidate(self, spec: GameSpec, sigma: ColorAssignment) -> bool:
        if self.verdict:
            return self.witness is None
        return self.witness is not None and self.witness.revalidate(spec, sigma)


def unsaturated_nodes(spec: GameSpec, sigma: ColorAssignment) -> tuple[int, ...]:
    """Players whose utility is strictly below their degree.  Only these can
    ever belong to a strongly-improving coalition."""
    out = []
    for v in range(spec.n):
        adj = spec.graph.adjacency(v)
        if any(sigma[u] == sigma[v] for u in adj):
            out.append(v)
    return tuple(out)


def is_nash(spec: GameSpec, sigma: ColorAssignment) -> EquilibriumReport:
    """No single player can strictly gain by recoloring alone.  The witness,
    when present, is the lexicographically first improving (player, color)."""
    sigma = validate_coloring(spec, sigma)
    for v in unsaturated_nodes(spec, sigma):
        mu = utility(spec, sigma, v)
        by_color = [Fraction(0)] * (spec.k + 1)
        degree = Fraction(0)
        for u, w in spec.graph.adjacency(v).items():
            by_color[sigma[u]] += w
            degree += w
        for c in range(1, spec.k + 1):
            if c != sigma[v] and degree - by_color[c] > mu:
                move = JointMove((v,), (c,))
                return EquilibriumReport(
                    "ne", False, make_witness(spec, sigma, move), v + 1
                )
    return EquilibriumReport("ne", True, None, spec.n)


def _coalition_scan(
    spec: GameSpec,
    sigma: ColorAssignment,
    concept: str,
    coalitions,
) -> EquilibriumReport:
    examined = 0
    for coalition in coalitions:
        examined += 1
        move = find_strong_improvement(spec, sigma, coalition)
        if move is not None:
            return EquilibriumReport(
                concept, False, make_witness(spec, sigma, move), examined
            )
    return EquilibriumReport(concept, True, None, examined)


def coalition_move_space(n: int, k: int, q: int) -> int:
    """Number of movers-only joint recolorings by coalitions of size <= q."""
    return sum(math.comb(n, s) * (k - 1) ** s for s in range(1, q + 1))


def is_q_strong(
    spec: GameSpec, sigma: ColorAssignment, q: int, budget: int | None = None
) -> EquilibriumReport:
    """No coalition of size <= q admits a strong improvement.

    q = 1 coincides with the Nash check; q = n is the strong-equilibrium
    check.  Coalitions are scanned in lexicographic order.
    """
    sigma = validate_coloring(spec, sigma)
    if not (1 <= q <= max(spec.n, 1)):
        raise ValueError(f"q must be in 1..{spec.n}, got {q}")
    limit = enumeration_budget() if budget is None else budget
    space = coalition_move_space(spec.n, spec.k, q)
    if space > limit:
        raise BudgetExceededError(
            f"coalition move space {space} exceeds budget {limit}"
        )
    pool = unsaturated_nodes(spec, sigma)
    return _coalition_scan(
        spec,
        sigma,
        f"{q}-se",
        enumerate_coalitions(spec.graph, q, allowed=pool) if pool else (),
    )


def is_local_strong(
    spec: GameSpec,
    sigma: ColorAssignment,
    x: int = 1,
    max_coalition_size: int | None = None,
) -> EquilibriumReport:
    """No x-local coalition (pairwise hop distance <= x) admits a strong
    improvement.  For x = 1 the coalitions are exactly the cliques."""
    sigma = validate_coloring(spec, sigma)
    if x < 1:
        raise ValueError("x must be >= 1")
    cap = spec.n if max_coalition_size is None else max_coalition_size
    pool = unsaturated_nodes(spec, sigma)
    if not pool:
        return EquilibriumReport(f"lse({x})", True, None, 0)
    if x == 1:
        coalitions = enumerate_cliques(spec.graph, cap, allowed=pool)
    else:
        coalitions = enumerate_x_local_coalitions(spec.graph, x, cap, allowed=pool)
    return _coalition_scan(spec, sigma, f"lse({x})", coalitions)


def is_strong(
    spec: GameSpec, sigma: ColorAssignment, budget: int | None = None
) -> EquilibriumReport:
    """Full strong-equilibrium check: no coalition of any size improves."""
    report = is_q_strong(spec, sigma, max(spec.n, 1), budget=budget)
    return EquilibriumReport("se", report.verdict, report.witness, report.coalitions_examined)


def classify(spec: GameSpec, sigma: ColorAssignment, budget: int | None = None) -> str:
    """Innermost region of the containment chain
    not-NE < NE < 2-SE < LSE < k-SE < ... < SE that sigma belongs to.

    The proven containments (LSE within 2-SE, k-SE within LSE, and the k = 2
    coincidence of LSE and 2-SE) are re-verified along the way; a violation
    raises ContainmentViolation.
    """
    sigma = validate_coloring(spec, sigma)
    if not is_nash(spec, sigma).verdict:
        return "not-ne"
    if spec.n < 2:
        return "se"
    two = is_q_strong(spec, sigma, min(2, spec.n), budget=budget)
    lse = is_local_strong(spec, sigma, 1)
    if lse.verdict and not two.verdict:
        raise ContainmentViolation(
            f"LSE profile is not a 2-SE: witness={two.witness}"
        )
    if spec.k == 2 and two.verdict != lse.verdict:
        raise ContainmentViolation("k=2 LSE/2-SE coincidence failed")
    if not two.verdict:
        return "ne"
    if not lse.verdict:
        kq = is_q_strong(spec, sigma, min(spec.k, spec.n), budget=budget)
        if kq.verdict:
            raise ContainmentViolation("non-LSE profile passes the k-SE check")
        return "2-se"
    start = max(3, min(spec.k, spec.n))
    for q in range(start, spec.n + 1):
        if not is_q_strong(spec, sigma, q, budget=budget).verdict:
            return "lse" if q == start else f"{q - 1}-se"
    return "se"


def degree_condition_guarantees_se(spec: GameSpec) -> bool:
    """True iff k is at least ceil((max degree + 1) / 2); then every optimal
    coloring is a strong equilibrium.  Unweighted graphs only."""
    if not spec.unweighted:
        raise WeightedInputError("degree condition is established for unweighted graphs")
    if spec.n == 0:
        return True
    dmax = int(spec.graph.max_degree())
    return spec.k >= -(-(dmax + 1) // 2)


@dataclass(frozen=True)
class GirthGuarantee:
    """Girth-based guarantee: optimal colorings are q_guaranteed-SE, and a
    full SE when the girth reaches (n + 3) / 2 (forests count as infinite
    girth, clamping q to n)."""

    q_guaranteed: int
    se_guaranteed: bool


def girth_guarantee(spec: GameSpec) -> GirthGuarantee:
    if not spec.unweighted:
        raise WeightedInputError("girth condition is established for unweighted graphs")
    rho = spec.graph.girth()
    n = spec.n
    if rho == INFINITY:
        return GirthGuarantee(n, True)
    return GirthGuarantee(2 * int(rho) - 3, rho >= Fraction(n + 3, 2))

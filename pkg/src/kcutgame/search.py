"""Counterexample and separation search: witnesses separating the
equilibrium concepts, weighted instances whose minimal-coalition dynamics
cycle, and the unweighted instance whose minimal strong improvement
strictly decreases the cut.

Searches draw candidates from three sources in order: structured gadget
families (parameterized constructions shaped after the known existence
arguments), exhaustive small-graph enumeration, and seeded random sampling.
Every candidate, structured or not, passes the same validation through the
equilibrium checkers before it is returned, and separation witnesses are
then greedily minimized by node and edge deletion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, product
from typing import Iterator, Sequence

from .corpora import (
    DEFAULT_WEIGHT_MENU,
    derive_rng,
    iter_connected_graphs,
    random_coloring,
    random_connected_graph,
    random_weighted_graph,
)
from .deviation import JointMove, is_minimal, is_strong_improvement, make_witness
from .dynamics import DynamicsTrace, Policy, run
from .equilibrium import (
    EquilibriumReport,
    is_local_strong,
    is_nash,
    is_q_strong,
    is_strong,
)
from .game import ColorAssignment, GameSpec, cut_value
from .graphs import Graph

SEPARATION_KINDS = ("ne-not-2se", "2se-not-lse", "lse-not-kse", "2se-not-se")


class SearchError(ValueError):
    """Invalid search request (unknown kind, impossible kind/k pair)."""


class ConstructionError(RuntimeError):
    """A deterministic instance construction failed its own validation."""


@dataclass(frozen=True)
class SeparationWitness:
    """An instance plus coloring inside one equilibrium concept but outside
    the next: the inner report is true, the outer one false with a
    re-validatable deviation witness."""

    kind: str
    spec: GameSpec
    coloring: ColorAssignment
    inner_report: EquilibriumReport
    outer_report: EquilibriumReport

    def revalidate(self) -> bool:
        inner, outer = _separation_reports(self.kind, self.spec, self.coloring)
        return (
            inner.verdict
            and not outer.verdict
            and self.inner_report.verdict
            and not self.outer_report.verdict
            and outer.witness is not None
            and outer.witness.revalidate(self.spec, self.coloring)
        )


def _separation_reports(
    kind: str, spec: GameSpec, sigma: ColorAssignment
) -> tuple[EquilibriumReport, EquilibriumReport]:
    if kind == "ne-not-2se":
        return is_nash(spec, sigma), is_q_strong(spec, sigma, min(2, spec.n))
    if kind == "2se-not-lse":
        return is_q_strong(spec, sigma, min(2, spec.n)), is_local_strong(spec, sigma)
    if kind == "lse-not-kse":
        return is_local_strong(spec, sigma), is_q_strong(spec, sigma, min(spec.k, spec.n))
    if kind == "2se-not-se":
        return is_q_strong(spec, sigma, min(2, spec.n)), is_strong(spec, sigma)
    raise SearchError(f"unknown separation kind {kind!r}")


def _try_candidate(
    kind: str, spec: GameSpec, sigma: ColorAssignment
) -> SeparationWitness | None:
    inner, outer = _separation_reports(kind, spec, sigma)
    if inner.verdict and not outer.verdict:
        return SeparationWitness(kind, spec, sigma, inner, outer)
    return None


# -- structured gadget families ---------------------------------------------


def _with_color_hubs(
    edges: list[tuple[int, int]],
    colors: list[int],
    costly_nodes: Sequence[int],
    k: int,
    first_extra_color: int,
) -> tuple[list[tuple[int, int]], list[int]]:
    """Block deviations to unused colors: one saturated hub per extra color,
    adjacent to every node that has positive cost in the gadget."""
    edges = list(edges)
    colors = list(colors)
    for c in range(first_extra_color, k + 1):
        hub = len(colors)
        colors.append(c)
        for v in costly_nodes:
            edges.append((v, hub))
    return edges, colors


def _gadget_ne_not_2se(k: int) -> tuple[GameSpec, ColorAssignment]:
    """A 4-cycle split into two adjacent same-colored pairs: every node is
    unilaterally stable, but an antipodal adjacent pair can swap colors."""
    edges = [(0, 1), (1, 2), (2, 3), (3, 0)]
    colors = [1, 1, 2, 2]
    edges, colors = _with_color_hubs(edges, colors, (0, 1, 2, 3), k, 3)
    return GameSpec(Graph(len(colors), edges), k), tuple(colors)


def _gadget_2se_not_lse(k: int) -> tuple[GameSpec, ColorAssignment]:
    """A rainbow triangle x, y, z where each member is held in place by one
    same-colored pad and is exactly indifferent to the next color; the only
    profitable deviation is the full 3-clique rotation."""
    x, y, z, u1, u2, u3, b1, b2, b3 = range(9)
    edges = [
        (x, y), (y, z), (x, z),
        (u1, x), (u1, y), (u1, b3),
        (u2, y), (u2, z), (u2, b1),
        (u3, z), (u3, x), (u3, b2),
    ]
    colors = [1, 2, 3, 1, 2, 3, 1, 2, 3]
    edges, colors = _with_color_hubs(edges, colors, (x, y, z, u1, u2, u3), k, 4)
    return GameSpec(Graph(len(colors), edges), k), tuple(colors)


def _gadget_lse_not_kse(k: int) -> tuple[GameSpec, ColorAssignment]:
    """A non-clique triple c, e, f (a path through c) that rotates: c needs
    both e and f to vacate its target, so no pair and no clique profits,
    but the distance-2 triple does."""
    c, e, f, p1, p3, p5, tb, ty, tr = range(9)
    edges = [
        (c, e), (c, f),
        (c, p1), (e, p3), (f, p5),
        (c, tr), (e, tr), (f, tr),
        (p1, ty), (p1, tr),
        (p3, tb), (p3, tr),
        (p5, tb), (p5, tr),
        (tb, ty), (tb, tr), (ty, tr),
    ]
    colors = [1, 2, 2, 1, 2, 2, 1, 2, 3]
    edges, colors = _with_color_hubs(edges, colors, (c, e, f, p1, p3, p5), k, 4)
    return GameSpec(Graph(len(colors), edges), k), tuple(colors)


def _gadget_2se_not_se(k: int) -> tuple[GameSpec, ColorAssignment]:
    """A path A-B-C where each end holds one same-colored pad and B holds
    one: singles and pairs never strictly gain, the full triple flip gains
    one each."""
    a, b, c, pa, pb, pc, h1, h2 = range(8)
    edges = [
        (a, b), (b, c),
        (a, pa), (b, pb), (c, pc),
        (pa, h2), (pb, h1), (pc, h2),
        (h1, h2),
    ]
    colors = [1, 2, 1, 1, 2, 1, 1, 2]
    edges, colors = _with_color_hubs(edges, colors, (a, b, c, pa, pb, pc), k, 3)
    return GameSpec(Graph(len(colors), edges), k), tuple(colors)


_GADGETS = {
    "ne-not-2se": _gadget_ne_not_2se,
    "2se-not-lse": _gadget_2se_not_lse,
    "lse-not-kse": _gadget_lse_not_kse,
    "2se-not-se": _gadget_2se_not_se,
}


def _structured_candidates(
    kind: str, k: int
) -> Iterator[tuple[GameSpec, ColorAssignment]]:
    yield _GADGETS[kind](k)


def _exhaustive_candidates(
    k: int, n_max: int
) -> Iterator[tuple[GameSpec, ColorAssignment]]:
    for n in range(2, min(n_max, 5) + 1):
        for graph in iter_connected_graphs(n):
            spec = GameSpec(graph, k)
            for sigma in product(range(1, k + 1), repeat=n):
                yield spec, sigma


def _random_candidates(
    k: int, n_max: int, seed: int
) -> Iterator[tuple[GameSpec, ColorAssignment]]:
    for index in range(10**9):
        rng = derive_rng(seed, index)
        n = rng.randint(3, max(3, n_max))
        graph = random_connected_graph(n, rng)
        yield GameSpec(graph, k), random_coloring(n, k, rng)


def search_separation(
    kind: str,
    n_max: int = 10,
    k: int | None = None,
    seed: int = 0,
    budget: int = 200_000,
    minimize: bool = True,
) -> SeparationWitness | None:
    """Search (graph, coloring) pairs until a witness of the kind validates,
    or the candidate budget is exhausted.

    Witnesses are greedily minimized by node/edge deletion while the
    separation persists.
    """
    if kind not in SEPARATION_KINDS:
        raise SearchError(f"unknown separation kind {kind!r}")
    if k is None:
        k = 2 if kind in ("ne-not-2se", "2se-not-se") else 3
    if kind in ("2se-not-lse", "lse-not-kse") and k < 3:
        raise SearchError(f"{kind} requires k >= 3: LSE and 2-SE coincide at k = 2")
    if k < 2:
        raise SearchError("k must be >= 2")

    def candidates() -> Iterator[tuple[GameSpec, ColorAssignment]]:
        yield from _structured_candidates(kind, k)
        yield from _exhaustive_candidates(k, n_max)
        yield from _random_candidates(k, n_max, seed)

    # The structured gadget may exceed n_max only before minimization.
    size_cap = max(n_max, _GADGETS[kind](k)[0].n)
    examined = 0
    for spec, sigma in candidates():
        if examined >= budget:
            return None
        if spec.n > size_cap:
            continue
        examined += 1
        found = _try_candidate(kind, spec, sigma)
        if found is not None:
            return _minimize_witness(found) if minimize else found
    return None


def _minimize_witness(witness: SeparationWitness) -> SeparationWitness:
    """Greedy: drop nodes, then edges, while the separation re-validates."""
    kind = witness.kind
    spec, sigma = witness.spec, witness.coloring
    best = witness
    changed = True
    while changed:
        changed = False
        for victim in range(spec.n):
            keep = [v for v in range(spec.n) if v != victim]
            relabel = {v: i for i, v in enumerate(keep)}
            edges = [
                (relabel[u], relabel[v], w)
                for u, v, w in spec.graph.edges()
                if u != victim and v != victim
            ]
            smaller = GameSpec(Graph(len(keep), edges), spec.k)
            reduced_sigma = tuple(sigma[v] for v in keep)
            found = _try_candidate(kind, smaller, reduced_sigma)
            if found is not None:
                spec, sigma, best, changed = smaller, reduced_sigma, found, True
                break
        if changed:
            continue
        for drop in spec.graph.edge_pairs():
            edges = [
                (u, v, w) for u, v, w in spec.graph.edges() if (u, v) != drop
            ]
            smaller = GameSpec(Graph(spec.n, edges), spec.k)
            found = _try_candidate(kind, smaller, sigma)
            if found is not None:
                spec, best, changed = smaller, found, True
                break
    return best


# -- cycling dynamics on weighted instances ----------------------------------


@dataclass(frozen=True)
class CycleFinding:
    """A weighted instance, start profile and policy whose strong-minimal
    dynamics revisits a state; the trace is the replayed evidence."""

    spec: GameSpec
    start: ColorAssignment
    policy: Policy
    trace: DynamicsTrace

    def revalidate(self) -> bool:
        trace = run(self.spec, self.start, self.policy, max_steps=len(self.trace.moves) + 2)
        if trace.status != "cycle" or trace.moves != self.trace.moves:
            return False
        if not trace.replay_consistent(self.spec):
            return False
        if not trace.potential_decreases:
            return False
        for state, move in zip(trace.states, trace.moves):
            if not is_strong_improvement(self.spec, state, move):
                return False
            if not is_minimal(self.spec, state, move):
                return False
        return True


def _pad_multiset(
    menu: Sequence[Fraction], lo: Fraction, hi: Fraction, max_parts: int = 4
) -> tuple[Fraction, ...] | None:
    """A multiset of menu weights whose sum lies strictly inside (lo, hi)."""
    if lo < 0 and hi > 0:
        return ()
    for size in range(1, max_parts + 1):
        for parts in combinations_with_replacement(sorted(menu, reverse=True), size):
            total = sum(parts, Fraction(0))
            if lo < total < hi:
                return parts
    return None


def _cycle_gadget(
    menu: Sequence[Fraction],
    clique_weights: tuple[Fraction, ...],
    anchor_weight: Fraction,
) -> tuple[GameSpec, ColorAssignment] | None:
    """Assemble the 4-clique cycling gadget for one weight choice, or None
    when the improvement inequalities admit no padding from the menu.

    Shape: clique {a, b, d, g} starting on colors (1, 1, 2, 3) deviates
    jointly to (2, 3, 1, 1), after which a, d, g, b return one by one.  Each
    clique node is pinned to two colors by a heavy anchor; padding toward
    the remaining color tunes when each return becomes profitable.
    """
    w_ab, w_ad, w_ag, w_bd, w_bg, w_dg = clique_weights
    small_total = sum(clique_weights, Fraction(0))
    # a's padding bias toward color 2, and analogous biases for the others,
    # must land strictly inside these intervals for the five scripted moves
    # to be exactly the profitable ones.
    d_a = _pad_multiset(menu, max(w_ab - w_ad, w_ad + w_ag), w_ab)
    g_d = _pad_multiset(menu, w_dg, min(w_ad, w_bd + w_dg))
    h_g = _pad_multiset(menu, w_dg, w_ag - w_bg)
    e_b = _pad_multiset(menu, max(w_ab - w_bg, Fraction(0)), min(w_ab, w_bd + w_bg))
    if d_a is None or g_d is None or h_g is None or e_b is None:
        return None
    pad_total = sum(d_a + g_d + h_g + e_b, Fraction(0))
    if anchor_weight <= 2 * (small_total + pad_total):
        return None

    a, b, d, g = 0, 1, 2, 3
    edges: list[tuple[int, int, Fraction]] = [
        (a, b, w_ab), (a, d, w_ad), (a, g, w_ag),
        (b, d, w_bd), (b, g, w_bg), (d, g, w_dg),
    ]
    colors = [1, 1, 2, 3]

    def add_node(color: int) -> int:
        colors.append(color)
        return len(colors) - 1

    # Anchors pin a and d away from color 3, b and g away from color 2.
    for node, color in ((a, 3), (d, 3), (b, 2), (g, 2)):
        edges.append((node, add_node(color), anchor_weight))
    # Stakes keep the padding nodes from ever moving: each pad holds heavy
    # edges toward both other colors.
    stakes = {c: add_node(c) for c in (1, 2, 3)}

    def add_pads(node: int, color: int, weights: tuple[Fraction, ...]) -> None:
        for w in weights:
            pad = add_node(color)
            edges.append((node, pad, w))
            for c in (1, 2, 3):
                if c != color:
                    edges.append((pad, stakes[c], anchor_weight))

    add_pads(a, 2, d_a)
    add_pads(d, 2, g_d)
    add_pads(g, 3, h_g)
    add_pads(b, 3, e_b)
    spec = GameSpec(Graph(len(colors), edges), 3)
    return spec, tuple(colors)


def _cycle_gadget_candidates(
    menu: Sequence[Fraction],
) -> Iterator[tuple[GameSpec, ColorAssignment]]:
    weights = sorted(set(menu), reverse=True)
    for w_ab in weights:
        for w_ag in weights:
            if w_ag >= w_ab:
                continue
            for w_bg in weights:
                if w_bg >= w_ag:
                    continue
                for w_ad in weights:
                    if w_ad + w_ag >= w_ab:
                        continue
                    for w_bd in weights:
                        if w_bd + 2 * w_bg <= w_ab:
                            continue
                        for w_dg in weights:
                            if w_dg >= w_ad or w_dg >= w_ag - w_bg:
                                continue
                            anchor = max(menu)
                            built = _cycle_gadget(
                                menu,
                                (w_ab, w_ad, w_ag, w_bd, w_bg, w_dg),
                                anchor,
                            )
                            if built is not None:
                                yield built


def search_improvement_cycle(
    weight_menu: Sequence[Fraction] = DEFAULT_WEIGHT_MENU,
    n_max: int = 24,
    seed: int = 0,
    budget: int = 5_000,
    max_coalition_size: int = 5,
    max_steps: int = 10,
) -> CycleFinding | None:
    """A weighted instance whose strong-minimal dynamics revisits a state
    within max_steps moves, every move's minimality re-verified, or None.

    When every menu weight is equal the game is a rescaled unweighted game,
    where minimal improvements by coalitions of at most five strictly
    increase the cut, so no cycle exists and the search reports none
    immediately.
    """
    menu = tuple(Fraction(w) for w in weight_menu)
    if not menu:
        return None
    if len(set(menu)) == 1 and max_coalition_size <= 5:
        return None
    policy = Policy(mode="strong-minimal", max_coalition_size=max_coalition_size)

    def candidates() -> Iterator[tuple[GameSpec, ColorAssignment]]:
        yield from _cycle_gadget_candidates(menu)
        for index in range(10**9):
            rng = derive_rng(seed, index)
            n = rng.randint(4, max(4, min(n_max, 9)))
            graph = random_weighted_graph(n, rng, menu)
            yield GameSpec(graph, 3), random_coloring(n, 3, rng)

    examined = 0
    for spec, start in candidates():
        if examined >= budget:
            return None
        if spec.n > n_max:
            continue
        examined += 1
        trace = run(spec, start, policy, max_steps=max_steps)
        if trace.status != "cycle" or not trace.potential_decreases:
            continue
        finding = CycleFinding(spec, start, policy, trace)
        if finding.revalidate():
            return finding
    return None


# -- the unweighted cut-decreasing minimal improvement -----------------------


@dataclass(frozen=True)
class CutDropInstance:
    """An unweighted game, Nash-stable coloring and minimal strong
    improvement whose cut delta is exactly the recorded (negative) value."""

    spec: GameSpec
    coloring: ColorAssignment
    move: JointMove
    cut_delta: Fraction

    def revalidate(self) -> bool:
        if not is_nash(self.spec, self.coloring).verdict:
            return False
        if not is_strong_improvement(self.spec, self.coloring, self.move):
            return False
        if not is_minimal(self.spec, self.coloring, self.move):
            return False
        witness = make_witness(self.spec, self.coloring, self.move)
        return witness.cut_after - witness.cut_before == self.cut_delta


def build_cut_decreasing_instance() -> CutDropInstance:
    """An unweighted 7-color instance where the unique minimal improving
    coalition (a 6-node color rotation inside a monochromatic K7 plus its
     6 trigger anchors) lowers the cut by exactly 3.

    Layout: clique nodes 0..6 all start on color 1.  Anchor j (for colors
    j = 2..7) is adjacent to two consecutive clique nodes and moves to
    color 1 only once both leave; clique node x moves to its target color
    only once its anchor vacates it.  Shared pad pools set every relevant
    color degree exactly; one pad per pool carries the anchor's unit cost
    and a mutual-blocking clique among those pads pins them in place.
    """
    k = 7
    clique = list(range(7))  # node 6 stays put
    movers = clique[:6]
    target = {x: x + 2 for x in movers}  # node 0 -> color 2, ..., node 5 -> 7
    anchors = {c: 7 + (c - 2) for c in range(2, 8)}
    pair = {2: (0, 1), 3: (1, 2), 4: (2, 3), 5: (3, 4), 6: (4, 5), 7: (5, 0)}
    cost_pads = {c: 13 + (c - 2) for c in range(2, 8)}

    colors: dict[int, int] = {v: 1 for v in clique}
    edges: list[tuple[int, int]] = [
        (u, v) for u in clique for v in clique if u < v
    ]
    for c, z in anchors.items():
        colors[z] = c
        for x in pair[c]:
            edges.append((min(x, z), max(x, z)))
    for c, q in cost_pads.items():
        colors[q] = c
        edges.append((q, anchors[c]))
    for qa, qb in ((a, b) for a in cost_pads.values() for b in cost_pads.values() if a < b):
        edges.append((qa, qb))
    for c, z in anchors.items():
        for c2, q in cost_pads.items():
            if c2 != c:
                edges.append((min(z, q), max(z, q)))

    next_id = 19
    for c in range(2, 8):
        pool = [cost_pads[c]]
        for _ in range(6):
            colors[next_id] = c
            pool.append(next_id)
            next_id += 1
        target_x = next(x for x in movers if target[x] == c)
        other_pair = next(x for x in pair[c] if x != target_x)
        for x in clique:
            if x == target_x:
                need = 5
            elif x == other_pair:
                need = 6
            elif x == 6:
                need = 6
            else:
                need = 7
            for p in pool[:need]:
                edges.append((min(x, p), max(x, p)))

    n = next_id
    graph = Graph(n, edges)
    sigma = tuple(colors[v] for v in range(n))
    coalition = tuple(sorted(movers + list(anchors.values())))
    new_colors = tuple(
        target[v] if v in target else 1 for v in coalition
    )
    move = JointMove(coalition, new_colors)
    spec = GameSpec(graph, k)

    instance = CutDropInstance(spec, sigma, move, Fraction(-3))
    before = cut_value(spec, sigma)
    after = cut_value(spec, _apply(sigma, move))
    if after - before != Fraction(-3) or not instance.revalidate():
        raise ConstructionError(
            f"cut-decreasing construction failed validation (delta {after - before})"
        )
    return instance


def _apply(sigma: ColorAssignment, move: JointMove) -> ColorAssignment:
    out = list(sigma)
    for v, c in zip(move.coalition, move.new_colors):
        out[v] = c
    return tuple(out)

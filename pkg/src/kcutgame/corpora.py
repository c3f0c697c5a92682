"""Instance corpora for verification: exhaustive small-graph enumeration,
classic families, and seeded random generators.

Connected-graph enumeration is by edge-subset with a connectivity filter and
deliberately no isomorphism dedup: redundancy is harmless, completeness is
what the verification harness needs.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Sequence

from .game import ColorAssignment
from .graphs import Graph

DEFAULT_WEIGHT_MENU: tuple[Fraction, ...] = (
    Fraction(1, 2),
    Fraction(1),
    Fraction(2),
    Fraction(3),
    Fraction(4),
    Fraction(1, 100),
    Fraction(100),
)


def derive_rng(seed: int, index: int) -> random.Random:
    """Per-instance substream of a master seed, stable across runs."""
    return random.Random(seed * 1_000_003 + index)


def all_node_pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def _mask_connected(n: int, pairs: Sequence[tuple[int, int]], mask: int) -> bool:
    if n <= 1:
        return True
    adj = [0] * n
    for i, (u, v) in enumerate(pairs):
        if mask >> i & 1:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    seen = 1
    frontier = adj[0]
    while frontier:
        seen |= frontier
        nxt = 0
        bits = frontier
        while bits:
            low = bits & -bits
            nxt |= adj[low.bit_length() - 1]
            bits ^= low
        frontier = nxt & ~seen
    return seen == (1 << n) - 1


def iter_connected_graph_masks(n: int) -> Iterator[int]:
    """Edge-subset masks of all connected labeled graphs on n nodes."""
    pairs = all_node_pairs(n)
    for mask in range(1 << len(pairs)):
        if _mask_connected(n, pairs, mask):
            yield mask


def graph_from_mask(n: int, mask: int) -> Graph:
    pairs = all_node_pairs(n)
    return Graph(n, [(u, v) for i, (u, v) in enumerate(pairs) if mask >> i & 1])


def iter_connected_graphs(n: int) -> Iterator[Graph]:
    for mask in iter_connected_graph_masks(n):
        yield graph_from_mask(n, mask)


def iter_trees(n: int) -> Iterator[Graph]:
    """All labeled trees on n nodes, by Pruefer-sequence decoding."""
    if n == 1:
        yield Graph(1)
        return
    if n == 2:
        yield Graph(2, [(0, 1)])
        return

    def decode(seq: tuple[int, ...]) -> Graph:
        degree = [1] * n
        for v in seq:
            degree[v] += 1
        edges = []
        for v in seq:
            leaf = min(u for u in range(n) if degree[u] == 1)
            edges.append((leaf, v))
            degree[leaf] -= 1
            degree[v] -= 1
        last = [u for u in range(n) if degree[u] == 1]
        edges.append((last[0], last[1]))
        return Graph(n, edges)

    def sequences(length: int) -> Iterator[tuple[int, ...]]:
        if length == 0:
            yield ()
            return
        for rest in sequences(length - 1):
            for v in range(n):
                yield rest + (v,)

    for seq in sequences(n - 2):
        yield decode(seq)


# -- classic families -------------------------------------------------------


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 nodes")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, all_node_pairs(n))


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


# -- random generators ------------------------------------------------------


def random_connected_graph(n: int, rng: random.Random, extra_edge_prob: float = 0.35) -> Graph:
    """Uniform random labeled tree plus Bernoulli extra edges; connected."""
    if n == 1:
        return Graph(1)
    edges: set[tuple[int, int]] = set()
    if n == 2:
        edges.add((0, 1))
    else:
        seq = [rng.randrange(n) for _ in range(n - 2)]
        degree = [1] * n
        for v in seq:
            degree[v] += 1
        for v in seq:
            leaf = min(u for u in range(n) if degree[u] == 1)
            edges.add((min(leaf, v), max(leaf, v)))
            degree[leaf] -= 1
            degree[v] -= 1
        last = [u for u in range(n) if degree[u] == 1]
        edges.add((min(last), max(last)))
    for u, v in all_node_pairs(n):
        if (u, v) not in edges and rng.random() < extra_edge_prob:
            edges.add((u, v))
    return Graph(n, sorted(edges))


def random_weighted_graph(
    n: int,
    rng: random.Random,
    menu: Sequence[Fraction] = DEFAULT_WEIGHT_MENU,
    extra_edge_prob: float = 0.35,
) -> Graph:
    base = random_connected_graph(n, rng, extra_edge_prob)
    return Graph(n, [(u, v, rng.choice(list(menu))) for u, v, _ in base.edges()])


def random_coloring(n: int, k: int, rng: random.Random) -> ColorAssignment:
    return tuple(rng.randint(1, k) for _ in range(n))

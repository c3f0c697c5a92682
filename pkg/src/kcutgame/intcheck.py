"""Bitset checkers for unweighted games.

Pure-int reimplementations of the strong-improvement search used by the
bulk verification scans, where Fraction arithmetic would dominate the run
time.  Adjacency is a per-node neighbor bitmask; costs are popcounts.
Semantics match the exact lane (same movers-only convention, same
candidate pruning argument); the test suite cross-validates the two lanes
on random instances, and the harness re-confirms any failure it reports
through the exact lane before recording it.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, Sequence

from .graphs import Graph


def adj_bits(graph: Graph) -> list[int]:
    out = [0] * graph.node_count
    for u, v, _ in graph.edges():
        out[u] |= 1 << v
        out[v] |= 1 << u
    return out


def adj_bits_from_mask(n: int, pairs: Sequence[tuple[int, int]], mask: int) -> list[int]:
    out = [0] * n
    for i, (u, v) in enumerate(pairs):
        if mask >> i & 1:
            out[u] |= 1 << v
            out[v] |= 1 << u
    return out


def color_masks(sigma: Sequence[int], k: int) -> list[int]:
    masks = [0] * (k + 1)
    for v, c in enumerate(sigma):
        masks[c] |= 1 << v
    return masks


def costs(adj: Sequence[int], sigma: Sequence[int], k: int) -> list[int]:
    masks = color_masks(sigma, k)
    return [(adj[v] & masks[sigma[v]]).bit_count() for v in range(len(sigma))]


def unsaturated(adj: Sequence[int], sigma: Sequence[int], k: int) -> list[int]:
    return [v for v, c in enumerate(costs(adj, sigma, k)) if c > 0]


def is_nash(adj: Sequence[int], sigma: Sequence[int], k: int) -> bool:
    masks = color_masks(sigma, k)
    for v in range(len(sigma)):
        cost_v = (adj[v] & masks[sigma[v]]).bit_count()
        if cost_v == 0:
            continue
        for c in range(1, k + 1):
            if c != sigma[v] and (adj[v] & masks[c]).bit_count() < cost_v:
                return False
    return True


def iter_improving_colorings(
    adj: Sequence[int],
    sigma: Sequence[int],
    k: int,
    members: Sequence[int],
) -> Iterator[tuple[int, ...]]:
    """All movers-only recolorings of `members` in which every member's
    same-color neighbor count strictly drops, in lexicographic order.

    A color survives pruning only if the member could gain even when every
    coalition neighbor avoids it; this mirrors the exact lane's candidate
    filter and is complete.
    """
    masks = color_masks(sigma, k)
    coalition_mask = 0
    for v in members:
        coalition_mask |= 1 << v
    size = len(members)
    cost_before = [(adj[v] & masks[sigma[v]]).bit_count() for v in members]
    candidates: list[list[int]] = []
    for i, v in enumerate(members):
        outside = adj[v] & ~coalition_mask
        opts = [
            c
            for c in range(1, k + 1)
            if c != sigma[v] and (outside & masks[c]).bit_count() < cost_before[i]
        ]
        if not opts:
            return
        candidates.append(opts)

    member_bit = [1 << v for v in members]
    chosen = [0] * size

    def leaf_ok() -> bool:
        new_masks = [m & ~coalition_mask for m in masks]
        for i in range(size):
            new_masks[chosen[i]] |= member_bit[i]
        for i, v in enumerate(members):
            if (adj[v] & new_masks[chosen[i]]).bit_count() >= cost_before[i]:
                return False
        return True

    def descend(depth: int) -> Iterator[tuple[int, ...]]:
        if depth == size:
            if leaf_ok():
                yield tuple(chosen)
            return
        for c in candidates[depth]:
            chosen[depth] = c
            yield from descend(depth + 1)

    yield from descend(0)


def first_improving(
    adj: Sequence[int], sigma: Sequence[int], k: int, members: Sequence[int]
) -> tuple[int, ...] | None:
    for colors in iter_improving_colorings(adj, sigma, k, members):
        return colors
    return None


def q_strong(
    adj: Sequence[int], sigma: Sequence[int], k: int, q: int
) -> tuple[bool, tuple[tuple[int, ...], tuple[int, ...]] | None]:
    """Verdict only (scan order differs from the report-producing lane)."""
    pool = unsaturated(adj, sigma, k)
    for size in range(1, min(q, len(pool)) + 1):
        for members in combinations(pool, size):
            colors = first_improving(adj, sigma, k, members)
            if colors is not None:
                return False, (members, colors)
    return True, None


def local_strong(
    adj: Sequence[int], sigma: Sequence[int], k: int, max_size: int | None = None
) -> tuple[bool, tuple[tuple[int, ...], tuple[int, ...]] | None]:
    """LSE verdict: no clique admits a strong improvement."""
    pool = unsaturated(adj, sigma, k)
    cap = len(pool) if max_size is None else max_size

    def extend(prefix: list[int], start: int):
        for idx in range(start, len(pool)):
            v = pool[idx]
            if all(adj[u] >> v & 1 for u in prefix):
                prefix.append(v)
                colors = first_improving(adj, sigma, k, tuple(prefix))
                if colors is not None:
                    return tuple(prefix), colors
                if len(prefix) < cap:
                    found = extend(prefix, idx + 1)
                    if found is not None:
                        prefix.pop()
                        return found
                prefix.pop()
        return None

    found = extend([], 0)
    if found is not None:
        return False, found
    return True, None

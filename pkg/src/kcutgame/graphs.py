"""Undirected graphs with exact rational weights, plus coalition enumeration.

Node ids are dense integers 0..n-1.  Weights are `fractions.Fraction`
throughout so that game values computed downstream are exact; no floats
appear anywhere in graph or game arithmetic.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

Coalition = tuple[int, ...]

INFINITY = math.inf


class GraphError(ValueError):
    """Malformed graph data (bad node ids, self loops, duplicate edges, ...)."""


class CoalitionError(ValueError):
    """Malformed coalition (empty, unsorted, duplicate or out-of-range ids)."""


def as_coalition(members: Iterable[int], node_count: int | None = None) -> Coalition:
    """Normalize `members` into a canonical coalition tuple, validating it.

    Canonical form is a strictly ascending, non-empty tuple of node ids.
    """
    coalition = tuple(int(v) for v in members)
    if not coalition:
        raise CoalitionError("coalition must be non-empty")
    if any(b <= a for a, b in zip(coalition, coalition[1:])):
        raise CoalitionError(f"coalition must be strictly ascending: {coalition!r}")
    if coalition[0] < 0:
        raise CoalitionError(f"negative node id in coalition: {coalition!r}")
    if node_count is not None and coalition[-1] >= node_count:
        raise CoalitionError(
            f"node id {coalition[-1]} out of range for graph with {node_count} nodes"
        )
    return coalition


def _as_weight(value) -> Fraction:
    if isinstance(value, float):
        raise GraphError(f"edge weights must be exact (int/Fraction/str), got float {value!r}")
    weight = Fraction(value)
    if weight <= 0:
        raise GraphError(f"edge weights must be strictly positive, got {weight}")
    return weight


class Graph:
    """Immutable undirected weighted graph.

    Edges are unordered pairs {u, v}, u != v, each appearing at most once,
    with strictly positive rational weight.  All queries are pure; the
    instance can be shared freely across threads.
    """

    __slots__ = ("_n", "_edges", "_adj", "_unweighted", "_dist", "_girth")

    def __init__(self, node_count: int, edges: Iterable[Sequence] = ()) -> None:
        n = int(node_count)
        if n < 0:
            raise GraphError("node_count must be >= 0")
        self._n = n
        edge_map: dict[tuple[int, int], Fraction] = {}
        adj: list[dict[int, Fraction]] = [dict() for _ in range(n)]
        for item in edges:
            if len(item) == 2:
                u, v = item
                w = Fraction(1)
            elif len(item) == 3:
                u, v, w = item
                w = _as_weight(w)
            else:
                raise GraphError(f"edge must be (u, v) or (u, v, w), got {item!r}")
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"self-loop at node {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for {n} nodes")
            key = (u, v) if u < v else (v, u)
            if key in edge_map:
                raise GraphError(f"duplicate edge {key}")
            edge_map[key] = w
            adj[u][v] = w
            adj[v][u] = w
        self._edges = dict(sorted(edge_map.items()))
        self._adj = tuple(adj)
        self._unweighted = all(w == 1 for w in edge_map.values())
        self._dist: tuple[tuple[float, ...], ...] | None = None
        self._girth: float | None = None

    # -- basic queries ---------------------------------------------------

    @property
    def node_count(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def unweighted(self) -> bool:
        """True iff every edge weight equals 1."""
        return self._unweighted

    def edges(self) -> Iterator[tuple[int, int, Fraction]]:
        for (u, v), w in self._edges.items():
            yield u, v, w

    def edge_pairs(self) -> Iterator[tuple[int, int]]:
        yield from self._edges

    def has_edge(self, u: int, v: int) -> bool:
        self._check_node(u)
        self._check_node(v)
        return v in self._adj[u]

    def weight(self, u: int, v: int) -> Fraction:
        self._check_node(u)
        self._check_node(v)
        try:
            return self._adj[u][v]
        except KeyError:
            raise GraphError(f"no edge ({u}, {v})") from None

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_node(v)
        return tuple(self._adj[v])

    def adjacency(self, v: int) -> dict[int, Fraction]:
        """Neighbor -> weight mapping for v (do not mutate)."""
        self._check_node(v)
        return self._adj[v]

    def total_weight(self) -> Fraction:
        return sum(self._edges.values(), Fraction(0))

    def degree(self, v: int) -> Fraction:
        """Weighted degree: sum of weights of edges incident to v."""
        self._check_node(v)
        return sum(self._adj[v].values(), Fraction(0))

    def max_degree(self) -> Fraction:
        if self._n == 0:
            raise GraphError("max_degree of an empty graph is undefined")
        return max(self.degree(v) for v in range(self._n))

    def _check_node(self, v: int) -> None:
        if not (0 <= v < self._n):
            raise GraphError(f"node id {v} out of range for {self._n} nodes")

    # -- distances and cycles --------------------------------------------

    def hop_distance(self, u: int, v: int) -> float:
        """Length in edges of a shortest u-v path; inf if disconnected.

        Weights are ignored: this is the hop distance.
        """
        self._check_node(u)
        self._check_node(v)
        return self.distance_matrix()[u][v]

    def distance_matrix(self) -> tuple[tuple[float, ...], ...]:
        if self._dist is None:
            rows = []
            for src in range(self._n):
                dist = [INFINITY] * self._n
                dist[src] = 0
                frontier = [src]
                d = 0
                while frontier:
                    d += 1
                    nxt = []
                    for x in frontier:
                        for y in self._adj[x]:
                            if dist[y] > d:
                                dist[y] = d
                                nxt.append(y)
                    frontier = nxt
                rows.append(tuple(dist))
            self._dist = tuple(rows)
        return self._dist

    def is_connected(self) -> bool:
        if self._n <= 1:
            return True
        return all(d < INFINITY for d in self.distance_matrix()[0])

    def diameter(self) -> float:
        """Largest finite-or-infinite hop distance over all pairs."""
        if self._n == 0:
            return 0
        return max(d for row in self.distance_matrix() for d in row)

    def girth(self) -> float:
        """Length of a shortest cycle; inf when the graph is a forest.

        Per-root BFS shortest-cycle search, O(n*m); hop lengths only.
        """
        if self._girth is None:
            best: float = INFINITY
            for root in range(self._n):
                depth = {root: 0}
                parent = {root: -1}
                frontier = [root]
                while frontier and 2 * depth[frontier[0]] + 1 < best:
                    nxt = []
                    for x in frontier:
                        for y in self._adj[x]:
                            if y == parent[x]:
                                continue
                            if y in depth:
                                # Non-tree edge closes a cycle through root.
                                cycle = depth[x] + depth[y] + 1
                                if cycle < best:
                                    best = cycle
                            else:
                                depth[y] = depth[x] + 1
                                parent[y] = x
                                nxt.append(y)
                    frontier = nxt
            self._girth = best
        return self._girth

    def is_acyclic(self) -> bool:
        return self.girth() == INFINITY

    # -- derived graphs ----------------------------------------------------

    def induced_subgraph(self, coalition: Iterable[int]) -> "Graph":
        """Subgraph induced by the coalition, nodes relabeled 0..|C|-1.

        Relabeling preserves member order; weights are preserved exactly.
        """
        members = as_coalition(coalition, self._n)
        index = {v: i for i, v in enumerate(members)}
        edges = []
        for i, v in enumerate(members):
            for u, w in self._adj[v].items():
                j = index.get(u)
                if j is not None and i < j:
                    edges.append((i, j, w))
        return Graph(len(members), edges)

    # -- dunder -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, tuple(self._edges.items())))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={len(self._edges)}, unweighted={self._unweighted})"


# -- coalition enumeration ------------------------------------------------


def enumerate_coalitions(
    graph: Graph, max_size: int, allowed: Sequence[int] | None = None
) -> Iterator[Coalition]:
    """All non-empty subsets of V with size <= max_size, in lexicographic
    order of their ascending member tuples, each exactly once.

    `allowed` optionally restricts members to a subset of nodes (it must be
    ascending); relative lexicographic order is preserved.
    """
    if max_size < 1:
        raise ValueError("max_size must be >= 1")
    pool = tuple(range(graph.node_count)) if allowed is None else tuple(allowed)

    def extend(prefix: list[int], start: int) -> Iterator[Coalition]:
        for idx in range(start, len(pool)):
            prefix.append(pool[idx])
            yield tuple(prefix)
            if len(prefix) < max_size:
                yield from extend(prefix, idx + 1)
            prefix.pop()

    yield from extend([], 0)


def enumerate_x_local_coalitions(
    graph: Graph, x: int, max_size: int, allowed: Sequence[int] | None = None
) -> Iterator[Coalition]:
    """Coalitions whose members are pairwise within hop distance x.

    Yields each qualifying coalition of size 1..max_size exactly once, in
    lexicographic order.  For x = 1 these are exactly the non-empty cliques.
    The hop-distance matrix is computed once; extensions violating the
    pairwise bound are pruned immediately.
    """
    if x < 1:
        raise ValueError("x must be >= 1")
    if max_size < 1:
        raise ValueError("max_size must be >= 1")
    dist = graph.distance_matrix()
    pool = tuple(range(graph.node_count)) if allowed is None else tuple(allowed)

    def extend(prefix: list[int], start: int) -> Iterator[Coalition]:
        for idx in range(start, len(pool)):
            v = pool[idx]
            if all(dist[u][v] <= x for u in prefix):
                prefix.append(v)
                yield tuple(prefix)
                if len(prefix) < max_size:
                    yield from extend(prefix, idx + 1)
                prefix.pop()

    yield from extend([], 0)


def enumerate_cliques(
    graph: Graph, max_size: int | None = None, allowed: Sequence[int] | None = None
) -> Iterator[Coalition]:
    """Non-empty cliques up to max_size (default: no size bound), in
    lexicographic order.  Adjacency-based specialization of the x = 1 case.
    """
    cap = graph.node_count if max_size is None else max_size
    if cap < 1:
        if graph.node_count == 0:
            return
        raise ValueError("max_size must be >= 1")
    pool = tuple(range(graph.node_count)) if allowed is None else tuple(allowed)
    adj = [graph.adjacency(v) for v in range(graph.node_count)]

    def extend(prefix: list[int], start: int) -> Iterator[Coalition]:
        for idx in range(start, len(pool)):
            v = pool[idx]
            if all(v in adj[u] for u in prefix):
                prefix.append(v)
                yield tuple(prefix)
                if len(prefix) < cap:
                    yield from extend(prefix, idx + 1)
                prefix.pop()

    yield from extend([], 0)

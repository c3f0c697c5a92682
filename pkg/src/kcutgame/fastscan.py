"""Vectorized full-enumeration kernels for small color spaces.

These back the bulk corpus scans (and the dense path of the exact solver)
with numpy integer arithmetic.  Exactness is preserved by scaling all edge
weights to a common denominator and working in int64; results are converted
back to Fractions at the boundary.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .game import ColorAssignment, GameSpec


@lru_cache(maxsize=32)
def colorings_array(n: int, k: int) -> np.ndarray:
    """All k**n colorings as an int8 array (k**n, n), colors 1..k, in
    lexicographic order of the assignment tuples."""
    count = k**n
    idx = np.arange(count, dtype=np.int64)
    cols = np.empty((count, n), dtype=np.int8)
    for v in range(n):
        base = k ** (n - 1 - v)
        cols[:, v] = (idx // base) % k + 1
    return cols


@lru_cache(maxsize=32)
def proper_matrix(n: int, k: int) -> dict[tuple[int, int], np.ndarray]:
    """For each node pair u < v, the per-coloring proper-edge indicator."""
    cols = colorings_array(n, k)
    out: dict[tuple[int, int], np.ndarray] = {}
    for u in range(n):
        for v in range(u + 1, n):
            out[(u, v)] = (cols[:, u] != cols[:, v]).astype(np.int8)
    return out


def _scaled_int_weights(spec: GameSpec) -> tuple[list[tuple[int, int, int]], int]:
    scale = 1
    for _, _, w in spec.graph.edges():
        scale = scale * w.denominator // math.gcd(scale, w.denominator)
    scaled = []
    total = 0
    for u, v, w in spec.graph.edges():
        iw = int(w * scale)
        scaled.append((u, v, iw))
        total += iw
    if total >= 2**62:
        raise OverflowError("scaled edge weights exceed the int64 kernel range")
    return scaled, scale


def cut_values_vector(spec: GameSpec) -> tuple[np.ndarray, int]:
    """Cut value of every coloring, as scaled int64, plus the scale."""
    n, k = spec.n, spec.k
    proper = proper_matrix(n, k)
    scaled, scale = _scaled_int_weights(spec)
    cuts = np.zeros(k**n, dtype=np.int64)
    for u, v, iw in scaled:
        if iw == 1:
            cuts += proper[(u, v)]
        else:
            cuts += iw * proper[(u, v)].astype(np.int64)
    return cuts, scale


def optimal_by_enumeration(spec: GameSpec) -> tuple[ColorAssignment, Fraction]:
    """First (lexicographically smallest) maximizer over all k**n colorings."""
    cuts, scale = cut_values_vector(spec)
    idx = int(np.argmax(cuts))
    coloring = tuple(int(c) for c in colorings_array(spec.n, spec.k)[idx])
    return coloring, Fraction(int(cuts[idx]), scale)


def nash_mask(spec: GameSpec) -> np.ndarray:
    """Boolean vector over all k**n colorings: True where no player can
    strictly gain by a unilateral recoloring."""
    n, k = spec.n, spec.k
    count = k**n
    proper = proper_matrix(n, k)
    scaled, _ = _scaled_int_weights(spec)
    utilities = [np.zeros(count, dtype=np.int64) for _ in range(n)]
    for u, v, iw in scaled:
        contrib = proper[(u, v)] if iw == 1 else iw * proper[(u, v)].astype(np.int64)
        utilities[u] = utilities[u] + contrib
        utilities[v] = utilities[v] + contrib
    idx = np.arange(count, dtype=np.int64)
    mask = np.ones(count, dtype=bool)
    for v in range(n):
        if not spec.graph.neighbors(v):
            continue
        base = k ** (n - 1 - v)
        digit = (idx // base) % k
        mu = utilities[v]
        for c in range(k):
            switched = idx + (c - digit) * base
            np.logical_and(mask, mu >= mu[switched], out=mask)
    return mask


def coloring_index(sigma: ColorAssignment, k: int) -> int:
    """Index of a coloring within the lexicographic enumeration."""
    idx = 0
    for c in sigma:
        idx = idx * k + (c - 1)
    return idx

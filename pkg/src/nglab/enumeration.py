"""Exhaustive small-graph enumeration, labeled and up to isomorphism."""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Iterator

import numpy as np

from . import kernels
from .errors import GuardError
from .graph import Graph, pair_count

MAX_ENUM_N = 8


def _check(n: int) -> None:
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n > MAX_ENUM_N:
        raise GuardError("enumeration", n, MAX_ENUM_N)


def canonical_form(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    """Relabeling with the smallest edge key, and the vertex order producing it."""
    key, perm = kernels.canonical_kernel(g.array)
    return Graph.from_key(int(key), g.n), tuple(int(v) for v in perm)


def canonical_key(g: Graph) -> int:
    return int(kernels.canonical_key(g.array))


def canonical_key_bruteforce(g: Graph) -> int:
    """Plain n! scan; the reference the branch-and-bound kernel is tested against."""
    return min(g.relabel(p).key() for p in permutations(range(g.n)))


def labeled_keys(n: int) -> np.ndarray:
    _check(n)
    return np.arange(1 << pair_count(n), dtype=np.int64)


@lru_cache(maxsize=None)
def isomorphism_class_keys(n: int) -> tuple[int, ...]:
    """Sorted canonical keys of all graphs on ``n`` vertices, one per class.

    Built by adding a vertex to each class representative on ``n - 1``
    vertices in every possible way; every graph arises this way from the
    graph left after deleting its last vertex.
    """
    _check(n)
    if n <= 1:
        return (0,)
    prev = np.array(isomorphism_class_keys(n - 1), dtype=np.int64)
    keys = np.unique(kernels.extension_keys(prev, n - 1))
    return tuple(int(k) for k in keys)


def enumerate_graphs(n: int, dedup: bool = False) -> Iterator[Graph]:
    """All graphs on ``n`` vertices in increasing edge-key order.

    With ``dedup`` only canonical representatives are produced, one per
    isomorphism class.
    """
    _check(n)
    if dedup:
        keys = isomorphism_class_keys(n)
    else:
        keys = range(1 << pair_count(n))
    for key in keys:
        yield Graph.from_key(key, n)


def count_graphs(n: int, dedup: bool = False) -> int:
    _check(n)
    return len(isomorphism_class_keys(n)) if dedup else 1 << pair_count(n)

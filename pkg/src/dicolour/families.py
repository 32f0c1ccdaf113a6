"""Circulant families and the cyclic-interval combinatorics around them."""
from __future__ import annotations

from itertools import combinations

from .errors import InputError
from .structures import MultiDigraph, MultiGraph, digirth, directed_cycles


def _check_kd(k, d):
    if k < 1 or d < 1:
        raise InputError(f"need positive k and d, got ({k}, {d})")
    if d > k:
        raise InputError(f"need d <= k, got ({k}, {d})")


def _check_strict(k, d):
    if d < 1 or k <= d:
        raise InputError(f"need k > d >= 1, got ({k}, {d})")


def circular_distance(k: int, x: int, y: int) -> int:
    if not (0 <= x < k and 0 <= y < k):
        raise InputError(f"({x}, {y}) not both in Z_{k}")
    m = (x - y) % k
    return min(m, k - m)


def cyclic_interval(k: int, i: int, d: int) -> frozenset[int]:
    """``{i, i+1, ..., i+d-1}`` taken mod ``k``."""
    _check_kd(k, d)
    return frozenset((i + t) % k for t in range(d))


def interval_mask(k: int, i: int, d: int) -> int:
    mask = 0
    for t in range(d):
        mask |= 1 << ((i + t) % k)
    return mask


def circulant_digraph(k: int, d: int) -> MultiDigraph:
    """vec-C(k, d): arc ``i -> j`` iff ``(j - i) mod k >= d``."""
    _check_kd(k, d)
    arcs = [(i, j) for i in range(k) for j in range(k) if (j - i) % k >= d]
    return MultiDigraph(k, tuple(arcs))


def circulant_graph(k: int, d: int) -> MultiGraph:
    """C(k, d): ``i ~ j`` iff their circular distance is at least ``d``; needs ``k >= 2d``."""
    _check_kd(k, d)
    if k < 2 * d:
        raise InputError(f"C(k, d) needs k >= 2d, got ({k}, {d})")
    edges = [(i, j) for i, j in combinations(range(k), 2) if circular_distance(k, i, j) >= d]
    return MultiGraph(k, tuple(edges))


def directed_cycle(n: int) -> MultiDigraph:
    if n < 2:
        raise InputError("a directed cycle needs at least 2 vertices")
    return MultiDigraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def min_noninterval_size(k: int, d: int) -> int:
    """Smallest subset of Z_k lying in no cyclic interval of size ``d``: ceil(k / (k - d))."""
    _check_strict(k, d)
    return -(-k // (k - d))


def _escapes_intervals(k, d, members):
    mask = 0
    for a in members:
        mask |= 1 << a
    return all(mask & ~interval_mask(k, i, d) for i in range(k))


def aux_graph_H(k: int, d: int) -> MultiGraph:
    """H(k, d): pairs lying together in some minimum-size set that escapes every d-interval."""
    _check_strict(k, d)
    size = min_noninterval_size(k, d)
    edges = set()
    for A in combinations(range(k), size):
        if _escapes_intervals(k, d, A):
            edges.update(combinations(A, 2))
    return MultiGraph(k, tuple(sorted(edges)))


def aux_graph_HF(F: MultiDigraph) -> MultiGraph:
    """H_F: pairs lying together on a shortest directed cycle of ``F``."""
    girth = digirth(F)
    if girth is None:
        raise InputError("H_F is undefined for an acyclic digraph")
    edges = set()
    for cycle in directed_cycles(F, length=girth):
        edges.update(combinations(sorted(cycle), 2))
    return MultiGraph(F.n, tuple(sorted(edges)))

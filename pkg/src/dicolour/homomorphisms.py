"""Graph, acyclic and circular homomorphisms: checkers, finders, core tests.

A vertex map is a tuple ``phi`` with ``phi[u]`` the image of source vertex
``u``.
"""
from __future__ import annotations

from typing import Sequence

from ._search import degree_order, first_assignment
from .errors import CapacityError, InputError
from .structures import (
    MultiDigraph,
    MultiGraph,
    closes_cycle,
    iter_bits,
    mask_is_acyclic,
    maximal_acyclic_masks,
)

KINDS = ("graph", "acyclic", "circular")
MAX_CORE_N = 8


def _check_map(phi, n1, n2):
    if len(phi) != n1:
        raise InputError(f"map has {len(phi)} entries for {n1} source vertices")
    for t in phi:
        if not 0 <= t < n2:
            raise InputError(f"image {t} outside target range [0, {n2})")


def _check_kind(kind, source, target):
    if kind not in KINDS:
        raise InputError(f"unknown homomorphism kind {kind!r}")
    want = MultiGraph if kind == "graph" else MultiDigraph
    if not (isinstance(source, want) and isinstance(target, want)):
        raise InputError(f"{kind} homomorphisms need {want.__name__} endpoints")


def _preimage_masks(phi, n2):
    pre = [0] * n2
    for u, t in enumerate(phi):
        pre[t] |= 1 << u
    return pre


def is_graph_hom(G: MultiGraph, H: MultiGraph, phi: Sequence[int]) -> bool:
    _check_map(phi, G.n, H.n)
    return all(H.has_edge(phi[u], phi[w]) for u, w in G.edges)


def is_acyclic_hom(D1: MultiDigraph, D2: MultiDigraph, phi: Sequence[int]) -> bool:
    """Arcs go to arcs or collapse, and every fibre is acyclic."""
    _check_map(phi, D1.n, D2.n)
    for u, w in D1.arcs:
        if phi[u] != phi[w] and not D2.has_arc(phi[u], phi[w]):
            return False
    return all(mask_is_acyclic(D1.out_masks, m) for m in _preimage_masks(phi, D2.n))


def is_circular_hom(D1: MultiDigraph, D2: MultiDigraph, phi: Sequence[int]) -> bool:
    """Preimages of acyclic sets are acyclic.

    Only the maximal acyclic sets of ``D2`` are tested; that suffices because
    acyclicity passes to subsets.
    """
    _check_map(phi, D1.n, D2.n)
    pre = _preimage_masks(phi, D2.n)
    for A in maximal_acyclic_masks(D2):
        mask = 0
        for t in iter_bits(A):
            mask |= pre[t]
        if not mask_is_acyclic(D1.out_masks, mask):
            return False
    return True


def is_hom(kind: str, source, target, phi: Sequence[int]) -> bool:
    _check_kind(kind, source, target)
    check = {"graph": is_graph_hom, "acyclic": is_acyclic_hom, "circular": is_circular_hom}[kind]
    return check(source, target, phi)


class _HomSearch:
    def __init__(self, kind, source, target):
        self.kind = kind
        self.source = source
        self.target = target
        self.phi = [None] * source.n
        if kind == "circular":
            self.sets = maximal_acyclic_masks(target)
            self.sets_of = [[i for i, A in enumerate(self.sets) if A >> t & 1]
                            for t in range(target.n)]
            self.pre = [0] * len(self.sets)
        elif kind == "acyclic":
            self.pre = [0] * target.n

    def values(self, pos, u):
        return range(self.target.n)

    def push(self, u, t):
        phi, src, tgt = self.phi, self.source, self.target
        if self.kind == "graph":
            for w in iter_bits(src.adj_masks[u]):
                if phi[w] is not None and not tgt.has_edge(t, phi[w]):
                    return False
        elif self.kind == "acyclic":
            for w in iter_bits(src.out_masks[u]):
                if phi[w] is not None and phi[w] != t and not tgt.has_arc(t, phi[w]):
                    return False
            for w in iter_bits(src.in_masks[u]):
                if phi[w] is not None and phi[w] != t and not tgt.has_arc(phi[w], t):
                    return False
            if closes_cycle(src.out_masks, src.in_masks, self.pre[t], u):
                return False
            self.pre[t] |= 1 << u
        else:
            # A cycle already fully mapped into an acyclic set can never be repaired.
            for i in self.sets_of[t]:
                if closes_cycle(src.out_masks, src.in_masks, self.pre[i], u):
                    return False
            for i in self.sets_of[t]:
                self.pre[i] |= 1 << u
        phi[u] = t
        return True

    def pop(self, u, t):
        self.phi[u] = None
        if self.kind == "acyclic":
            self.pre[t] &= ~(1 << u)
        elif self.kind == "circular":
            for i in self.sets_of[t]:
                self.pre[i] &= ~(1 << u)

    def run(self):
        src = self.source
        order = degree_order(src.n, src.degree)
        if first_assignment(order, self.values, self.push, self.pop):
            return tuple(self.phi)
        return None


def find_hom(kind: str, source, target) -> tuple[int, ...] | None:
    """First homomorphism of the given kind in backtracking order, or None.

    Source vertices are assigned by descending degree (ties by id), each
    trying target vertices in increasing order, so the witness is the
    lexicographically least one with respect to that assignment order.
    """
    _check_kind(kind, source, target)
    if source.n and not target.n:
        return None
    if kind == "circular" and mask_is_acyclic(target.out_masks, target.full_mask):
        # the whole target is acyclic, so the whole source must be too
        return (0,) * source.n if mask_is_acyclic(source.out_masks, source.full_mask) else None
    return _HomSearch(kind, source, target).run()


def is_core(kind: str, D: MultiDigraph, max_n: int = MAX_CORE_N) -> bool:
    """Whether every self-homomorphism of the given kind is a bijection.

    A non-bijective self-map misses some vertex ``v``, i.e. it is a
    homomorphism into ``D - v``; both notions restrict cleanly to induced
    subdigraphs, so each ``v`` is one search.
    """
    if kind not in ("acyclic", "circular"):
        raise InputError(f"core kind must be 'acyclic' or 'circular', got {kind!r}")
    if not isinstance(D, MultiDigraph):
        raise InputError("core checks need a MultiDigraph")
    if D.n > max_n:
        raise CapacityError(f"core check on {D.n} vertices exceeds the bound {max_n}")
    for v in range(D.n):
        smaller, _ = D.induced(u for u in range(D.n) if u != v)
        if find_hom(kind, D, smaller) is not None:
            return False
    return True

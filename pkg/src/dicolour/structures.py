"""Multigraphs, multidigraphs and the acyclicity primitives built on them.

Vertices are the integers ``0 .. n-1``.  Vertex sets are exchanged as
``frozenset`` objects at the public surface; internally everything runs on
integer bitmasks, which keeps the exhaustive searches elsewhere in the
package cheap.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import CapacityError, InputError


def _check_pairs(n, pairs, what):
    if n < 0:
        raise InputError(f"vertex count must be non-negative, got {n}")
    for u, w in pairs:
        if not (0 <= u < n and 0 <= w < n):
            raise InputError(f"{what} ({u}, {w}) has an endpoint outside [0, {n})")
        if u == w:
            raise InputError(f"loop at vertex {u} is not allowed")


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int], n: int) -> int:
    mask = 0
    for v in vertices:
        if not 0 <= v < n:
            raise InputError(f"vertex {v} outside [0, {n})")
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


@dataclass(frozen=True)
class MultiDigraph:
    """Loopless digraph on ``range(n)``; ``arcs`` is a sorted multiset of (tail, head)."""

    n: int
    arcs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        arcs = tuple(sorted((int(u), int(w)) for u, w in self.arcs))
        _check_pairs(self.n, arcs, "arc")
        object.__setattr__(self, "arcs", arcs)

    @cached_property
    def out_masks(self) -> tuple[int, ...]:
        out = [0] * self.n
        for u, w in self.arcs:
            out[u] |= 1 << w
        return tuple(out)

    @cached_property
    def in_masks(self) -> tuple[int, ...]:
        inn = [0] * self.n
        for u, w in self.arcs:
            inn[w] |= 1 << u
        return tuple(inn)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_arc(self, u: int, w: int) -> bool:
        return bool(self.out_masks[u] >> w & 1)

    def degree(self, v: int) -> int:
        return bin(self.out_masks[v] | self.in_masks[v]).count("1")

    def induced(self, vertices: Iterable[int]) -> tuple["MultiDigraph", tuple[int, ...]]:
        """Induced subdigraph relabelled to ``0..m-1`` and the old id of each new vertex."""
        keep = tuple(sorted(set(vertices)))
        to_mask(keep, self.n)
        index = {v: i for i, v in enumerate(keep)}
        arcs = [(index[u], index[w]) for u, w in self.arcs if u in index and w in index]
        return MultiDigraph(len(keep), tuple(arcs)), keep


@dataclass(frozen=True)
class MultiGraph:
    """Loopless multigraph on ``range(n)``; each edge stored as ``(min, max)``."""

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        edges = tuple(sorted((min(int(u), int(w)), max(int(u), int(w))) for u, w in self.edges))
        _check_pairs(self.n, edges, "edge")
        object.__setattr__(self, "edges", edges)

    @cached_property
    def adj_masks(self) -> tuple[int, ...]:
        adj = [0] * self.n
        for u, w in self.edges:
            adj[u] |= 1 << w
            adj[w] |= 1 << u
        return tuple(adj)

    @cached_property
    def multiplicity(self) -> Counter:
        return Counter(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, w: int) -> bool:
        return bool(self.adj_masks[u] >> w & 1)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def simple(self) -> "MultiGraph":
        return MultiGraph(self.n, tuple(sorted(set(self.edges))))


# -- bitmask kernels --------------------------------------------------------

def mask_is_acyclic(out: tuple[int, ...], mask: int) -> bool:
    # Peel sinks until nothing is left (acyclic) or no sink remains (cycle).
    while mask:
        removed = 0
        for v in iter_bits(mask):
            if not out[v] & mask:
                removed |= 1 << v
        if not removed:
            return False
        mask &= ~removed
    return True


def closes_cycle(out: tuple[int, ...], inn: tuple[int, ...], mask: int, u: int) -> bool:
    """True iff ``mask | {u}`` has a directed cycle through ``u``."""
    mask &= ~(1 << u)
    target = inn[u] & mask
    if not target:
        return False
    reach = frontier = out[u] & mask
    while frontier:
        if reach & target:
            return True
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= out[v]
        frontier = nxt & mask & ~reach
        reach |= frontier
    return bool(reach & target)


def mask_component(adj: tuple[int, ...], mask: int, start: int) -> int:
    comp = frontier = 1 << start
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & mask & ~comp
        comp |= frontier
    return comp


def closes_graph_cycle(G: MultiGraph, mask: int, u: int) -> bool:
    """True iff ``G[mask | {u}]`` has a cycle through ``u`` (parallel edges count)."""
    mask &= ~(1 << u)
    nbrs = G.adj_masks[u] & mask
    mult = G.multiplicity
    for w in iter_bits(nbrs):
        if mult[(min(u, w), max(u, w))] > 1:
            return True
    while nbrs:
        w = (nbrs & -nbrs).bit_length() - 1
        comp = mask_component(G.adj_masks, mask, w)
        if bin(comp & nbrs).count("1") > 1:
            return True
        nbrs &= ~comp
    return False


def mask_is_forest(G: MultiGraph, mask: int) -> bool:
    seen = 0
    for u in iter_bits(mask):
        if closes_graph_cycle(G, seen, u):
            return False
        seen |= 1 << u
    return True


# -- public operations ------------------------------------------------------

def is_acyclic(D: MultiDigraph, S: Iterable[int]) -> bool:
    """Whether ``D[S]`` has no directed cycle; a digon inside ``S`` is a cycle."""
    return mask_is_acyclic(D.out_masks, to_mask(S, D.n))


def is_forest(G: MultiGraph, S: Iterable[int]) -> bool:
    """Whether ``G[S]`` has no cycle, a doubled edge counting as a 2-cycle."""
    return mask_is_forest(G, to_mask(S, G.n))


def digirth(D: MultiDigraph) -> int | None:
    """Length of a shortest directed cycle, or None for an acyclic digraph."""
    out, inn = D.out_masks, D.in_masks
    best = None
    for v in range(D.n):
        reach = frontier = out[v]
        length = 1
        while frontier and (best is None or length + 1 < best):
            if frontier & inn[v]:
                best = length + 1
                break
            nxt = 0
            for w in iter_bits(frontier):
                nxt |= out[w]
            frontier = nxt & ~reach
            reach |= frontier
            length += 1
    return best


def strong_components(D: MultiDigraph) -> list[frozenset[int]]:
    """Vertex sets of the strong components, ordered by smallest member."""
    out, inn = D.out_masks, D.in_masks
    comps = []
    left = D.full_mask
    while left:
        v = (left & -left).bit_length() - 1
        comp = mask_component(out, D.full_mask, v) & mask_component(inn, D.full_mask, v)
        comps.append(from_mask(comp))
        left &= ~comp
    return comps


def symmetric_orientation(G: MultiGraph) -> MultiDigraph:
    arcs = []
    for u, w in G.edges:
        arcs.append((u, w))
        arcs.append((w, u))
    return MultiDigraph(G.n, tuple(arcs))


def symmetric_part(D: MultiDigraph) -> MultiGraph:
    """Simple graph with an edge wherever ``D`` has arcs in both directions."""
    out = D.out_masks
    edges = [(u, w) for u in range(D.n) for w in iter_bits(out[u])
             if u < w and out[w] >> u & 1]
    return MultiGraph(D.n, tuple(edges))


def acyclic_orientation(G: MultiGraph) -> MultiDigraph:
    """Orient every edge copy from its smaller to its larger endpoint."""
    return MultiDigraph(G.n, G.edges)


def maximal_acyclic_masks(D: MultiDigraph, limit: int | None = None) -> list[int]:
    """Bitmasks of the maximal acyclic sets; CapacityError once more than ``limit`` exist."""
    out, inn, n = D.out_masks, D.in_masks, D.n
    found = []

    def rec(v, inc, exc):
        if v == n:
            if all(closes_cycle(out, inn, inc, x) for x in iter_bits(exc)):
                found.append(inc)
                if limit is not None and len(found) > limit:
                    raise CapacityError(f"more than {limit} maximal acyclic sets")
            return
        rest = ((1 << n) - 1) & ~((1 << (v + 1)) - 1)
        # An excluded vertex must stay blockable by what may still be included.
        for x in iter_bits(exc):
            if not closes_cycle(out, inn, inc | rest | (1 << v), x):
                return
        if not closes_cycle(out, inn, inc, v):
            rec(v + 1, inc | (1 << v), exc)
        if closes_cycle(out, inn, inc | rest, v):
            rec(v + 1, inc, exc | (1 << v))

    rec(0, 0, 0)
    found.sort(key=lambda m: sorted(iter_bits(m)))
    return found


def maximal_acyclic_sets(D: MultiDigraph) -> list[frozenset[int]]:
    """All inclusion-maximal acyclic vertex sets, sorted by their sorted members."""
    return [from_mask(m) for m in maximal_acyclic_masks(D)]


def directed_cycles(D: MultiDigraph, length: int | None = None,
                    limit: int | None = None) -> list[tuple[int, ...]]:
    """Directed cycles as vertex sequences starting at their smallest vertex.

    Parallel arcs do not produce distinct cycles.  With ``length`` given, only
    cycles of exactly that length are listed.  CapacityError once more than
    ``limit`` cycles have been found.
    """
    out = D.out_masks
    cycles = []

    def extend(path, used):
        last = path[-1]
        start = path[0]
        if out[last] >> start & 1 and len(path) >= 2:
            if length is None or len(path) == length:
                cycles.append(tuple(path))
                if limit is not None and len(cycles) > limit:
                    raise CapacityError(f"more than {limit} directed cycles")
        if length is not None and len(path) >= length:
            return
        for w in iter_bits(out[last] & ~used):
            if w > start:
                path.append(w)
                extend(path, used | (1 << w))
                path.pop()

    for s in range(D.n):
        extend([s], 1 << s)
    return cycles

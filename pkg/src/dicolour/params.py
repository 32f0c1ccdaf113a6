"""Exact colouring decisions at fixed (k, d) and exact parameter values.

Most decisions are a backtracking search over colourings in a fixed vertex
order (highest degree first, then the vertex with most neighbours already
placed) with colours tried in increasing order.  Three symmetry reductions
cut the search without losing every solution:

* colour rotation, for the cyclic-interval notions: the first vertex gets 0;
* colour permutation, when every colour class is its own interval
  (``d == 1``): a fresh colour is always the smallest unused one;
* false twins (same neighbourhoods, same multiplicities) take
  non-decreasing colours in search order.

Each of these holds for the lexicographically least valid colouring.
Dichromatic and acyclic (k, d) decisions run one strong component at a
time, since every directed cycle lies inside one; vertices on no cycle get
colour 0.

Acyclic (k, d)-colourings are searched differently: a colouring is valid
iff no directed cycle has all its colours inside one cyclic d-interval, so
the search works on colour sets over the list of minimal cycles.  There
the first set is taken up to rotation and reflection of Z_k, spread-out
sets are tried first, and dead partial states are remembered.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable

from ._search import connected_order, degree_order, first_assignment
from .errors import CapacityError, InputError
from .families import circular_distance, circulant_digraph, interval_mask
from .homomorphisms import find_hom, is_acyclic_hom
from .structures import (
    MultiDigraph,
    MultiGraph,
    closes_cycle,
    closes_graph_cycle,
    directed_cycles,
    iter_bits,
    strong_components,
    mask_is_acyclic,
    mask_is_forest,
)

COLOURING_KINDS = ("dichromatic", "circular-kd", "acyclic-kd", "tree-kd", "b-tuple", "graph-kd")

DIGRAPH_PARAMS = ("dichromatic", "circular-dichromatic", "star-dichromatic",
                  "fractional-dichromatic")
GRAPH_PARAMS = ("vertex-arboricity", "circular-vertex-arboricity",
                "chromatic", "circular-chromatic")
PARAMS = DIGRAPH_PARAMS + GRAPH_PARAMS


@dataclass(frozen=True)
class Colouring:
    """A colouring certificate.

    ``second`` is ``d`` for the (k, d) kinds, ``b`` for b-tuple colourings and
    1 for plain dichromatic colourings.  For ``b-tuple`` each entry of
    ``assignment`` is a frozenset of colours from ``1..k``; otherwise it is a
    colour in ``0..k-1``.
    """

    kind: str
    k: int
    second: int
    assignment: tuple

    def __post_init__(self):
        if self.kind not in COLOURING_KINDS:
            raise InputError(f"unknown colouring kind {self.kind!r}")


@dataclass(frozen=True)
class ParamResult:
    value: Fraction
    witness: object
    # Largest candidate below ``value`` that was tried and refuted; None when value is 1.
    rejected: Fraction | None = None
    name: str = ""
    extra: dict = field(default_factory=dict, compare=False)


def _need(X, cls, what):
    if not isinstance(X, cls):
        raise InputError(f"{what} needs a {cls.__name__}")


def _check_kd(k, d):
    if not (k >= d >= 1):
        raise InputError(f"need k >= d >= 1, got ({k}, {d})")


def _class_masks(assignment, k):
    masks = [0] * k
    for v, c in enumerate(assignment):
        if not 0 <= c < k:
            raise InputError(f"colour {c} outside Z_{k}")
        masks[c] |= 1 << v
    return masks


def _interval_preimages(assignment, k, d):
    masks = _class_masks(assignment, k)
    out = []
    for i in range(k):
        m = 0
        for c in range(d):
            m |= masks[(i + c) % k]
        out.append(m)
    return out


def validate_colouring(X, c: Colouring) -> bool:
    """Whether ``c`` satisfies the definition of its kind on ``X`` exactly."""
    digraph_kinds = ("dichromatic", "circular-kd", "acyclic-kd", "b-tuple")
    _need(X, MultiDigraph if c.kind in digraph_kinds else MultiGraph, f"a {c.kind} colouring")
    if len(c.assignment) != X.n:
        raise InputError(f"colouring has {len(c.assignment)} entries for {X.n} vertices")
    k, second = c.k, c.second
    if c.kind == "b-tuple":
        if not k >= second >= 1:
            raise InputError(f"need k >= b >= 1, got ({k}, {second})")
        classes = [0] * (k + 1)
        for v, B in enumerate(c.assignment):
            if len(set(B)) != second or not all(1 <= i <= k for i in B):
                return False
            for i in B:
                classes[i] |= 1 << v
        return all(mask_is_acyclic(X.out_masks, m) for m in classes)
    _check_kd(k, second)
    if c.kind == "dichromatic":
        return all(mask_is_acyclic(X.out_masks, m) for m in _class_masks(c.assignment, k))
    if c.kind == "circular-kd":
        return is_acyclic_hom(X, circulant_digraph(k, second), c.assignment)
    if c.kind == "acyclic-kd":
        return all(mask_is_acyclic(X.out_masks, m)
                   for m in _interval_preimages(c.assignment, k, second))
    if c.kind == "tree-kd":
        return all(mask_is_forest(X, m) for m in _interval_preimages(c.assignment, k, second))
    # graph-kd: adjacent colours at circular distance >= d
    _class_masks(c.assignment, k)
    return all(circular_distance(k, c.assignment[u], c.assignment[w]) >= second
               for u, w in X.edges)


# -- search machinery --------------------------------------------------------

def _false_twin_keys(X):
    if isinstance(X, MultiDigraph):
        return [(X.out_masks[v], X.in_masks[v]) for v in range(X.n)]
    mult = X.multiplicity
    return [tuple(sorted((w, m) for (a, b), m in mult.items() if v in (a, b)
                         for w in (a, b) if w != v)) for v in range(X.n)]


def _twin_predecessors(X, order):
    """For each vertex, the previous vertex of its twin class in ``order`` (or None)."""
    keys = _false_twin_keys(X)
    last = {}
    prev = [None] * X.n
    for v in order:
        prev[v] = last.get(keys[v])
        last[keys[v]] = v
    return prev


def _neighbour_masks(X):
    if isinstance(X, MultiDigraph):
        return [X.out_masks[v] | X.in_masks[v] for v in range(X.n)]
    return list(X.adj_masks)


class _IntervalSearch:
    """Colour vertices with Z_k so every cyclic d-interval's preimage stays admissible.

    ``closes(mask, u)`` reports whether adding ``u`` to the admissible set
    ``mask`` breaks admissibility (creates a directed cycle / a cycle).
    """

    def __init__(self, X, k, d, closes: Callable[[int, int], bool]):
        self.X, self.k, self.d, self.closes = X, k, d, closes
        self.order = connected_order(X.n, X.degree, _neighbour_masks(X))
        self.twin_prev = _twin_predecessors(X, self.order)
        self.col = [None] * X.n
        self.pre = [0] * k
        self.used = [0]  # stack of "colours in use" counts for d == 1
        self.intervals_of = [[(c - t) % k for t in range(d)] for c in range(k)]

    def values(self, pos, v):
        k = self.k
        lo = 0
        prev = self.twin_prev[v]
        if prev is not None:
            lo = self.col[prev]
        if self.d == 1:
            hi = min(k, self.used[-1] + 1)
        elif pos == 0:
            hi = 1
        else:
            hi = k
        return range(lo, hi)

    def push(self, v, c):
        for i in self.intervals_of[c]:
            if self.closes(self.pre[i], v):
                return False
        for i in self.intervals_of[c]:
            self.pre[i] |= 1 << v
        self.col[v] = c
        self.used.append(max(self.used[-1], c + 1))
        return True

    def pop(self, v, c):
        for i in self.intervals_of[c]:
            self.pre[i] &= ~(1 << v)
        self.col[v] = None
        self.used.pop()

    def run(self):
        if first_assignment(self.order, self.values, self.push, self.pop):
            return tuple(self.col)
        return None


def _digraph_closes(D):
    out, inn = D.out_masks, D.in_masks
    return lambda mask, u: closes_cycle(out, inn, mask, u)


def _per_component(D, solve):
    """Run ``solve`` on every nontrivial strong component and merge the answers.

    ``solve(sub, keep)`` returns a colour tuple for the induced subdigraph or None.
    """
    col = [0] * D.n
    for comp in strong_components(D):
        if len(comp) == 1:
            continue
        sub, keep = D.induced(comp)
        found = solve(sub, keep)
        if found is None:
            return None
        for v, c in zip(keep, found):
            col[v] = c
    return tuple(col)


def decide_dichromatic(D: MultiDigraph, k: int) -> Colouring | None:
    """A ``k``-colouring without monochromatic directed cycles, or None."""
    _need(D, MultiDigraph, "decide_dichromatic")
    if k < 1:
        raise InputError(f"need k >= 1, got {k}")
    found = _per_component(D, lambda sub, keep: _IntervalSearch(sub, k, 1, _digraph_closes(sub)).run())
    return None if found is None else Colouring("dichromatic", k, 1, found)


CYCLE_LIMIT = 20_000


def minimal_cycle_sets(D: MultiDigraph, limit: int = CYCLE_LIMIT) -> list[tuple[int, ...]] | None:
    """Vertex sets of directed cycles that contain no other cycle's vertex set.

    None when ``D`` has more than ``limit`` directed cycles.
    """
    try:
        cycles = directed_cycles(D, limit=limit)
    except CapacityError:
        return None
    masks = sorted({sum(1 << v for v in cyc) for cyc in cycles}, key=lambda m: bin(m).count("1"))
    kept = []
    for m in masks:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return [tuple(iter_bits(m)) for m in kept]


def _window_search(n, k, d, cycles):
    """Acyclic (k, d)-colouring from the cycle list alone.

    A colouring is valid iff no cycle's colours fit in a cyclic d-interval,
    i.e. every cycle's colour set meets every run of k - d consecutive
    colours.  Only colour sets matter and bigger sets never hurt, so
    vertices lying on exactly the same cycles form one group that takes
    min(size, k) distinct colours, chosen together.  A partial state is
    the union per cycle that later groups can still change; a state that
    failed once fails again.
    """
    s = k - d
    if not cycles:
        return (0,) * n
    if s == 0:
        return None
    signature = {}
    for j, cyc in enumerate(cycles):
        for v in cyc:
            signature.setdefault(v, []).append(j)
    groups = {}
    for v in sorted(signature):
        groups.setdefault(tuple(signature[v]), []).append(v)
    # groups on many cycles first
    members = sorted(groups.values(), key=lambda g: (-len(signature[g[0]]), g[0]))
    cyc_groups = [[] for _ in cycles]
    for gi, g in enumerate(members):
        for j in signature[g[0]]:
            cyc_groups[j].append(gi)
    size = [min(len(g), k) for g in members]
    # the groups of each cycle placed after position gi, as vertex counts
    later = [[sum(len(members[h]) for h in cyc_groups[j] if h > gi) for j in range(len(cycles))]
             for gi in range(len(members))]
    need_memo = {}

    def need(colours):
        # colours still required so that no run of s unused colours remains
        if colours in need_memo:
            return need_memo[colours]
        if not colours:
            total = -(-k // s)
        else:
            first = (colours & -colours).bit_length() - 1
            total = run = 0
            for i in range(1, k + 1):
                if colours >> ((first + i) % k) & 1:
                    if run >= s:
                        total += (run - s) // s + 1
                    run = 0
                else:
                    run += 1
        need_memo[colours] = total
        return total

    full = (1 << k) - 1

    def canonical(m):
        # least mask among rotations and reflections of m
        flipped = sum(1 << (-c % k) for c in iter_bits(m))
        best = m
        for x in (m, flipped):
            for _ in range(k):
                x = ((x << 1) | (x >> (k - 1))) & full
                best = min(best, x)
        return best

    option_memo = {}

    def options(gi):
        key = (gi == 0, size[gi])
        if key not in option_memo:
            sets = [sum(1 << c for c in combo) for combo in combinations(range(k), size[gi])]
            if gi == 0:
                # rotation and reflection: one set per orbit for the first group
                sets = sorted({canonical(m) for m in sets})
            # well spread sets first; they tend to succeed
            option_memo[key] = sorted(sets, key=need)
        return option_memo[key]

    for j, cyc in enumerate(cycles):
        if need(0) > len(cyc):
            return None
    union = [0] * len(cycles)
    chosen = [0] * len(members)
    # only cycles that later groups still touch can change the outcome
    open_after = [[j for j in range(len(cycles)) if later[gi][j]] for gi in range(len(members))]
    open_before = [list(range(len(cycles)))] + open_after[:-1]
    dead = set()

    def rec(gi):
        if gi == len(members):
            return True
        key = (gi, tuple(union[j] for j in open_before[gi]))
        if key in dead:
            return False
        for m in options(gi):
            ok = True
            for j in signature[members[gi][0]]:
                if need(union[j] | m) > later[gi][j]:
                    ok = False
                    break
            if not ok:
                continue
            saved = [(j, union[j]) for j in signature[members[gi][0]]]
            for j, u in saved:
                union[j] = u | m
            chosen[gi] = m
            if rec(gi + 1):
                return True
            for j, u in saved:
                union[j] = u
        dead.add(key)
        return False

    if not rec(0):
        return None
    col = [0] * n
    for g, m in zip(members, chosen):
        colours = list(iter_bits(m))
        for i, v in enumerate(g):
            col[v] = colours[i % len(colours)]
    return tuple(col)


def decide_star(D: MultiDigraph, k: int, d: int, cycles=None) -> Colouring | None:
    """An acyclic (k, d)-colouring, or None.

    ``cycles`` may pass precomputed ``minimal_cycle_sets(D)`` across calls.
    When ``D`` has too many cycles to list, a plain interval search runs
    instead.
    """
    _need(D, MultiDigraph, "decide_star")
    _check_kd(k, d)
    if cycles is None:
        cycles = minimal_cycle_sets(D)
    if cycles is None:
        return _star_by_intervals(D, k, d)
    found = _window_search(D.n, k, d, cycles)
    return None if found is None else Colouring("acyclic-kd", k, d, found)


def _star_by_intervals(D, k, d):
    found = _per_component(D, lambda sub, keep: _IntervalSearch(sub, k, d, _digraph_closes(sub)).run())
    return None if found is None else Colouring("acyclic-kd", k, d, found)


def decide_circular(D: MultiDigraph, k: int, d: int) -> tuple[int, ...] | None:
    """An acyclic homomorphism into vec-C(k, d), or None."""
    _need(D, MultiDigraph, "decide_circular")
    _check_kd(k, d)
    # Arcs between strong components constrain the map too, so no splitting here.
    return find_hom("acyclic", D, circulant_digraph(k, d))


def decide_tree(G: MultiGraph, k: int, d: int) -> Colouring | None:
    """A (k, d)-tree-colouring, or None."""
    _need(G, MultiGraph, "decide_tree")
    _check_kd(k, d)
    found = _IntervalSearch(G, k, d, lambda mask, u: closes_graph_cycle(G, mask, u)).run()
    return None if found is None else Colouring("tree-kd", k, d, found)


def decide_graph_kd(G: MultiGraph, k: int, d: int) -> Colouring | None:
    """A (k, d)-colouring in the circular-chromatic sense, or None."""
    _need(G, MultiGraph, "decide_graph_kd")
    _check_kd(k, d)
    adj = G.adj_masks
    col = [None] * G.n

    def closes(mask, u):
        return bool(adj[u] & mask)

    # d > 1 tests circular distances directly, not through interval classes.
    if d == 1:
        found = _IntervalSearch(G, k, 1, closes).run()
        return None if found is None else Colouring("graph-kd", k, 1, found)

    order = degree_order(G.n, G.degree)
    twin_prev = _twin_predecessors(G, order)

    def values(pos, v):
        if pos == 0:
            return range(1)
        lo = col[twin_prev[v]] if twin_prev[v] is not None else 0
        return range(lo, k)

    def push(v, c):
        for w in order:
            if col[w] is None:
                break
            if adj[v] >> w & 1 and circular_distance(k, c, col[w]) < d:
                return False
        col[v] = c
        return True

    def pop(v, c):
        col[v] = None

    if first_assignment(order, values, push, pop):
        return Colouring("graph-kd", k, d, tuple(col))
    return None


def decide_b_tuple(D: MultiDigraph, k: int, b: int) -> Colouring | None:
    """Size-``b`` colour sets from ``1..k`` with every colour class acyclic, or None."""
    _need(D, MultiDigraph, "decide_b_tuple")
    if not k >= b >= 1:
        raise InputError(f"need k >= b >= 1, got ({k}, {b})")
    closes = _digraph_closes(D)
    order = degree_order(D.n, D.degree)
    twin_prev = _twin_predecessors(D, order)
    subsets = [frozenset(s) for s in combinations(range(1, k + 1), b)]
    rank = {s: i for i, s in enumerate(subsets)}
    sets = [None] * D.n
    classes = [0] * (k + 1)
    used = [0]

    def values(pos, v):
        u = used[-1]
        lo = rank[sets[twin_prev[v]]] if twin_prev[v] is not None else 0
        for s in subsets[lo:]:
            fresh = sorted(i for i in s if i > u)
            # fresh colours must be the next unused ones
            if fresh == list(range(u + 1, u + 1 + len(fresh))):
                yield s

    def push(v, s):
        if any(closes(classes[i], v) for i in s):
            return False
        for i in s:
            classes[i] |= 1 << v
        sets[v] = s
        used.append(max(used[-1], max(s)))
        return True

    def pop(v, s):
        for i in s:
            classes[i] &= ~(1 << v)
        sets[v] = None
        used.pop()

    if first_assignment(order, values, push, pop):
        return Colouring("b-tuple", k, b, tuple(sets))
    return None


# -- exact parameter values --------------------------------------------------

def candidate_ratios(n: int) -> list[Fraction]:
    """Reduced fractions k/d with 1 <= d <= k <= n, ascending."""
    return sorted({Fraction(k, d) for k in range(1, max(n, 1) + 1) for d in range(1, k + 1)})


def _ratio_search(n, decide, name, start=None):
    previous = None
    for r in candidate_ratios(n):
        if start is not None and r < start:
            previous = r
            continue
        witness = decide(r.numerator, r.denominator)
        if witness is not None:
            return ParamResult(r, witness, previous, name)
        previous = r
    raise AssertionError(f"{name}: no candidate with numerator <= {n} was feasible")


def _integer_search(n, decide, name):
    for k in range(1, n + 1):
        witness = decide(k)
        if witness is not None:
            return ParamResult(Fraction(k), witness, Fraction(k - 1) if k > 1 else None, name)
    raise AssertionError(f"{name}: no colouring with at most {n} colours")


def compute_param(name: str, X, use_lp_bound: bool = True) -> ParamResult:
    """Exact value of a colouring parameter together with a validating witness.

    Rational parameters are found by trying every reduced k/d with numerator
    at most ``|V|`` in ascending order; the first feasible one is the value,
    because each parameter has numerator at most ``|V|`` and feasibility at
    k/d is equivalent to the parameter being at most k/d.

    With ``use_lp_bound`` the star and circular dichromatic searches skip
    every candidate below the fractional dichromatic number, which bounds
    both from below; ``rejected`` may then name a candidate ruled out by
    that bound rather than by search.
    """
    if name not in PARAMS:
        raise InputError(f"unknown parameter {name!r}; expected one of {', '.join(PARAMS)}")
    _need(X, MultiDigraph if name in DIGRAPH_PARAMS else MultiGraph, name)
    if name == "fractional-dichromatic":
        from .fractional import chi_f
        value, solution = chi_f(X)
        return ParamResult(value, solution, None, name)
    if X.n == 0:
        kind = {"dichromatic": "dichromatic", "circular-dichromatic": "circular-kd",
                "star-dichromatic": "acyclic-kd", "vertex-arboricity": "tree-kd",
                "circular-vertex-arboricity": "tree-kd", "chromatic": "graph-kd",
                "circular-chromatic": "graph-kd"}[name]
        return ParamResult(Fraction(1), Colouring(kind, 1, 1, ()), None, name)
    n = X.n
    if name == "dichromatic":
        return _integer_search(n, lambda k: decide_dichromatic(X, k), name)
    if name == "vertex-arboricity":
        return _integer_search(n, lambda k: decide_tree(X, k, 1), name)
    if name == "chromatic":
        return _integer_search(n, lambda k: decide_graph_kd(X, k, 1), name)
    start = None
    if use_lp_bound and name in ("star-dichromatic", "circular-dichromatic"):
        from .fractional import chi_f
        try:
            start = chi_f(X)[0]
        except CapacityError:
            start = None
    if name == "star-dichromatic":
        cycles = minimal_cycle_sets(X)
        return _ratio_search(n, lambda k, d: decide_star(X, k, d, cycles), name, start)
    if name == "circular-vertex-arboricity":
        return _ratio_search(n, lambda k, d: decide_tree(X, k, d), name)
    if name == "circular-chromatic":
        return _ratio_search(n, lambda k, d: decide_graph_kd(X, k, d), name)

    def circular(k, d):
        phi = decide_circular(X, k, d)
        return None if phi is None else Colouring("circular-kd", k, d, phi)

    return _ratio_search(n, circular, name, start)

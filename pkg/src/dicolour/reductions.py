"""Gadget constructions (l-split, D_G, G_{k,d}) and brute-force equivalence checks.

Original vertices keep their ids in every construction; new vertices are
numbered after them, grouped by the vertex or edge they belong to and then
by position, so layouts are stable across runs.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import CapacityError, InputError
from .families import aux_graph_H, aux_graph_HF, min_noninterval_size
from .fractional import chi_f
from .homomorphisms import find_hom
from .params import decide_tree
from .structures import MultiDigraph, MultiGraph, acyclic_orientation, digirth

MAX_VERIFY_N = 6


@dataclass(frozen=True)
class GadgetProvenance:
    """Where each vertex of a construction came from.

    ``tags[v]`` is ``("vertex", x)`` for a kept original vertex and otherwise
    names the block and position of ``v``.  ``blocks`` maps each block key
    (``("path", x)`` of an l-split, ``("cycle", e)`` of D_G, ``("bundle", e, j)``
    of G_{k,d}) to its vertices in order.
    """

    origin: str
    params: dict
    tags: tuple
    blocks: dict
    warnings: tuple[str, ...] = ()


def l_split(D: MultiDigraph, l: int) -> tuple[MultiDigraph, GadgetProvenance]:
    """Replace every vertex ``x`` by a directed path ``x_1 -> ... -> x_l``.

    ``x_1`` keeps id ``x``; an arc ``u -> w`` becomes ``u_l -> w_1``.
    """
    if l < 1:
        raise InputError(f"split length must be at least 1, got {l}")
    n = D.n

    def vid(x, i):
        return x if i == 1 else n + x * (l - 1) + (i - 2)

    tags = [None] * (n * l)
    blocks = {}
    arcs = []
    for x in range(n):
        path = [vid(x, i) for i in range(1, l + 1)]
        blocks[("path", x)] = tuple(path)
        tags[x] = ("vertex", x)
        for i in range(2, l + 1):
            tags[vid(x, i)] = ("path", x, i)
        arcs.extend(zip(path, path[1:]))
    arcs.extend((vid(u, l), vid(w, 1)) for u, w in D.arcs)
    prov = GadgetProvenance("split", {"l": l}, tuple(tags), blocks)
    return MultiDigraph(n * l, tuple(arcs)), prov


def gadget_dg(G: MultiGraph, k: int) -> tuple[MultiDigraph, GadgetProvenance]:
    """Orient ``G`` acyclically and close every arc into a directed ``k``-cycle.

    Each arc ``x -> y`` (index order, one per edge copy) gets a reverse path
    ``y -> p_1 -> ... -> p_{k-2} -> x`` on fresh vertices.
    """
    if k < 2:
        raise InputError(f"cycle length must be at least 2, got {k}")
    n, inner = G.n, k - 2
    oriented = acyclic_orientation(G)
    arcs = list(oriented.arcs)
    tags = [("vertex", x) for x in range(n)]
    blocks = {}
    for e, (x, y) in enumerate(oriented.arcs):
        fresh = [n + e * inner + j for j in range(inner)]
        tags.extend(("cycle", e, j) for j in range(inner))
        path = [y] + fresh + [x]
        arcs.extend(zip(path, path[1:]))
        blocks[("cycle", e)] = (x, y, *fresh)
    prov = GadgetProvenance("dg", {"k": k, "orientation": oriented.arcs}, tuple(tags), blocks)
    return MultiDigraph(n + inner * len(G.edges), tuple(arcs)), prov


def gadget_gkd(G: MultiGraph, k: int, d: int,
               paths_per_edge: int | None = None) -> tuple[MultiGraph, GadgetProvenance]:
    """Replace every edge by ``paths_per_edge`` (default ``2**k``) parallel paths of length I(k,d)-1."""
    size = min_noninterval_size(k, d)
    default = 2 ** k
    m = default if paths_per_edge is None else paths_per_edge
    if m < 1:
        raise InputError(f"need at least one path per edge, got {m}")
    notes = ()
    if m < default:
        msg = f"{m} paths per edge is below the default 2^{k} = {default}"
        warnings.warn(msg, stacklevel=2)
        notes = (msg,)
    n, inner = G.n, size - 2
    edges = []
    tags = [("vertex", x) for x in range(n)]
    blocks = {}
    for e, (x, y) in enumerate(G.edges):
        for j in range(m):
            base = n + (e * m + j) * inner
            fresh = list(range(base, base + inner))
            tags.extend(("bundle", e, j, t) for t in range(inner))
            path = [x] + fresh + [y]
            edges.extend(zip(path, path[1:]))
            blocks[("bundle", e, j)] = tuple(path)
    prov = GadgetProvenance("gkd", {"k": k, "d": d, "paths_per_edge": m, "I": size},
                            tuple(tags), blocks, notes)
    return MultiGraph(n + inner * m * len(G.edges), tuple(edges)), prov


def split_formula(x: Fraction, l: int) -> Fraction:
    """``l x / ((l - 1) x + 1)``, the fractional dichromatic number of an l-split."""
    return l * x / ((l - 1) * x + 1)


def split_reduction_params(p) -> tuple[int, Fraction]:
    """Least ``l >= 2`` with ``2l/(2l-1) < p < l/(l-1)`` and ``p' = p / (l - (l-1) p)``."""
    p = Fraction(p)
    if not 1 < p < 2:
        raise InputError(f"threshold must lie strictly between 1 and 2, got {p}")
    l = 2
    while Fraction(2 * l, 2 * l - 1) >= p:
        l += 1
    if not p < Fraction(l, l - 1):
        raise InputError(f"no split length found for {p}")
    p_prime = p / (l - (l - 1) * p)
    assert p_prime > 2
    return l, p_prime


@dataclass(frozen=True)
class ReductionReport:
    kind: str
    params: dict
    left: bool
    right: bool
    left_witness: object = None
    right_witness: object = None
    details: dict = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        return self.left == self.right


def verify_reduction(kind: str, params, instance, max_n: int = MAX_VERIFY_N) -> ReductionReport:
    """Decide both sides of a reduction's equivalence by exhaustive search.

    * ``circular-f``: ``params`` is the target digraph F, ``instance`` a graph
      G; compares G -> H_F with a circular hom D_G -> F.
    * ``tree-kd``: ``params`` is ``(k, d)`` or ``(k, d, paths_per_edge)``;
      compares G -> H(k, d) with (k, d)-tree-colourability of G_{k,d}.
    * ``split``: ``params`` is a threshold ``p`` in (1, 2), ``instance`` a
      digraph D; compares chi_f(D) <= p' with chi_f(D_l) <= p.
    """
    if instance.n > max_n:
        raise CapacityError(f"instance on {instance.n} vertices exceeds the bound {max_n}")
    if kind == "circular-f":
        F = params
        if not isinstance(F, MultiDigraph) or not isinstance(instance, MultiGraph):
            raise InputError("circular-f needs a target digraph and a graph instance")
        girth = digirth(F)
        if girth is None:
            raise InputError("circular-f needs a target with a directed cycle")
        H = aux_graph_HF(F)
        gadget, _ = gadget_dg(instance, girth)
        left = find_hom("graph", instance, H)
        right = find_hom("circular", gadget, F)
        return ReductionReport(kind, {"digirth": girth}, left is not None, right is not None,
                               left, right, {"gadget_n": gadget.n})
    if kind == "tree-kd":
        if not isinstance(instance, MultiGraph):
            raise InputError("tree-kd needs a graph instance")
        k, d, *rest = params
        gadget, prov = gadget_gkd(instance, k, d, *rest)
        left = find_hom("graph", instance, aux_graph_H(k, d))
        right = decide_tree(gadget, k, d)
        return ReductionReport(kind, {"k": k, "d": d, **prov.params}, left is not None,
                               right is not None, left, right, {"gadget_n": gadget.n})
    if kind == "split":
        if not isinstance(instance, MultiDigraph):
            raise InputError("split needs a digraph instance")
        p = Fraction(params)
        l, p_prime = split_reduction_params(p)
        split, _ = l_split(instance, l)
        value, _ = chi_f(instance)
        split_value, _ = chi_f(split)
        return ReductionReport(kind, {"p": p, "l": l, "p_prime": p_prime},
                               value <= p_prime, split_value <= p, value, split_value)
    raise InputError(f"unknown reduction kind {kind!r}")

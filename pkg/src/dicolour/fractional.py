"""Fractional dichromatic number by exact linear programming.

The covering program (minimise the total weight on acyclic sets so that
every vertex is covered at least once) is solved over the maximal acyclic
sets only; enlarging a set never hurts coverage, so the optimum is the same.
The packing program over vertex weights is its dual and comes out of the
same final tableau.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InputError
from .simplex import covering_lp, packing_lp
from .structures import MultiDigraph, from_mask, iter_bits, mask_is_acyclic, maximal_acyclic_masks

MAX_FAMILY = 50_000


@dataclass(frozen=True)
class AcyclicSetFamily:
    n: int
    masks: tuple[int, ...]

    @property
    def sets(self) -> tuple[frozenset[int], ...]:
        return tuple(from_mask(m) for m in self.masks)

    def containing(self, v: int) -> list[int]:
        """Indices of the family members that contain ``v``."""
        return [i for i, m in enumerate(self.masks) if m >> v & 1]


@dataclass(frozen=True)
class LpSolution:
    sets: tuple[frozenset[int], ...]
    primal: tuple[Fraction, ...]    # weight per set, aligned with ``sets``
    dual: tuple[Fraction, ...]      # weight per vertex
    objective: Fraction

    @property
    def support(self) -> list[int]:
        return [i for i, x in enumerate(self.primal) if x]


def acyclic_set_family(D: MultiDigraph, max_family: int = MAX_FAMILY) -> AcyclicSetFamily:
    masks = maximal_acyclic_masks(D, limit=max_family)
    return AcyclicSetFamily(D.n, tuple(masks))


def _solve_covering(n, masks):
    A = [[m >> v & 1 for m in masks] for v in range(n)]
    opt = covering_lp(A, [1] * n, [1] * len(masks))
    return opt.x, opt.duals, opt.objective


def covering_number(n: int, masks: Sequence[int]) -> tuple[Fraction, list[Fraction], list[Fraction]]:
    """Optimum of the covering LP for an arbitrary family of vertex-set bitmasks.

    Returns (value, set weights, vertex weights).
    """
    if n == 0:
        return Fraction(1), [], []
    x, y, value = _solve_covering(n, list(masks))
    return value, x, y


def check_lp_solution(D: MultiDigraph, sol: LpSolution, family: AcyclicSetFamily | None = None) -> None:
    """Raise AssertionError unless ``sol`` is an optimal primal/dual pair for ``D``."""
    if family is None:
        family = acyclic_set_family(D)
    masks = []
    for S, x in zip(sol.sets, sol.primal):
        m = 0
        for v in S:
            m |= 1 << v
        assert x >= 0, "negative set weight"
        assert mask_is_acyclic(D.out_masks, m), f"set {sorted(S)} is not acyclic"
        masks.append(m)
    for v in range(D.n):
        cover = sum((x for m, x in zip(masks, sol.primal) if m >> v & 1), Fraction(0))
        assert cover >= 1, f"vertex {v} covered only {cover}"
    assert len(sol.dual) == D.n and all(y >= 0 for y in sol.dual), "bad vertex weights"
    for m in family.masks:
        load = sum((sol.dual[v] for v in iter_bits(m)), Fraction(0))
        assert load <= 1, f"acyclic set {sorted(iter_bits(m))} carries weight {load}"
    primal = sum(sol.primal, Fraction(0))
    dual = sum(sol.dual, Fraction(0))
    assert primal == dual == sol.objective, f"duality gap: {primal} vs {dual}"
    assert len(sol.support) <= D.n, "support larger than the vertex count"


def chi_f(D: MultiDigraph, max_family: int = MAX_FAMILY,
          verify_dual: bool = False) -> tuple[Fraction, LpSolution]:
    """Exact fractional dichromatic number with an optimal primal/dual pair.

    The solution is checked (feasibility of both sides, equal objectives,
    support at most ``|V|``) before it is returned.  With ``verify_dual`` the
    packing program is additionally solved on its own and must agree.
    """
    if not isinstance(D, MultiDigraph):
        raise InputError("chi_f needs a MultiDigraph")
    if D.n == 0:
        return Fraction(1), LpSolution((), (), (), Fraction(1))
    family = acyclic_set_family(D, max_family)
    x, y, value = _solve_covering(D.n, family.masks)
    sol = LpSolution(family.sets, tuple(x), tuple(y), value)
    check_lp_solution(D, sol, family)
    if verify_dual:
        rows = [[m >> v & 1 for v in range(D.n)] for m in family.masks]
        independent = packing_lp(rows, [1] * len(rows), [1] * D.n)
        if independent.objective != value:
            raise AssertionError(f"dual solve gives {independent.objective}, primal {value}")
    return value, sol


def chi_f_dual_witness(D: MultiDigraph, max_family: int = MAX_FAMILY) -> tuple[Fraction, ...]:
    """Vertex weights, feasible for the packing program, summing to chi_f(D)."""
    return chi_f(D, max_family)[1].dual


def decide_chi_f(D: MultiDigraph, p, max_family: int = MAX_FAMILY) -> bool:
    """Exact test ``chi_f(D) <= p``."""
    p = Fraction(p)
    if p < 1:
        raise InputError(f"threshold must be at least 1, got {p}")
    return chi_f(D, max_family)[0] <= p


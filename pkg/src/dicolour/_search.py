"""Depth-first assignment search shared by the homomorphism and colouring finders."""
from __future__ import annotations


def first_assignment(order, values, push, pop):
    """Assign the variables in ``order`` one by one.

    ``values(pos, v)`` yields candidates for ``v`` in preference order,
    ``push(v, c)`` commits a candidate and returns False (leaving no trace)
    if it is inconsistent with the partial assignment, ``pop(v, c)`` undoes
    a committed candidate.  Returns True once every variable is assigned;
    the caller reads the solution from its own state.
    """
    n = len(order)

    def rec(pos):
        if pos == n:
            return True
        v = order[pos]
        for c in values(pos, v):
            if push(v, c):
                if rec(pos + 1):
                    return True
                pop(v, c)
        return False

    return rec(0)


def degree_order(n, degree):
    return sorted(range(n), key=lambda v: (-degree(v), v))


def connected_order(n, degree, adj):
    """Highest degree first, then repeatedly the vertex with most neighbours already placed.

    ``adj[v]`` is a bitmask of the neighbours of ``v`` in either direction.
    Ties go to higher degree, then smaller id.
    """
    order = []
    placed = 0
    left = set(range(n))
    while left:
        v = min(left, key=lambda u: (-bin(adj[u] & placed).count("1"), -degree(u), u))
        order.append(v)
        placed |= 1 << v
        left.discard(v)
    return order

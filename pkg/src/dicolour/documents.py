"""Text documents for (di)graphs and JSON certificates.

Document grammar (``#`` starts a comment, blank lines are ignored)::

    digraph N          # or: graph N
    u v                # one arc u -> v (or one edge {u, v}); repeats add multiplicity
    ...
    names              # optional; every later line is "id label"
    0 source

Certificates are JSON objects with the fields, in this order: ``tool``,
``version``, ``name``, ``input_digest``, ``value``, ``decision``,
``rejected``, ``witness``.  ``value`` and every weight are exact
``"p/q"`` strings.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__
from .errors import InputError, ParseError
from .fractional import AcyclicSetFamily, LpSolution, acyclic_set_family, check_lp_solution
from .homomorphisms import is_hom
from .params import Colouring, validate_colouring
from .structures import MultiDigraph, MultiGraph


@dataclass(frozen=True)
class InputDocument:
    graph: MultiDigraph | MultiGraph
    names: dict = field(default_factory=dict)


def parse_document(text: str) -> InputDocument:
    header = None
    pairs = []
    names = {}
    in_names = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if header is None:
            if len(tokens) != 2 or tokens[0] not in ("digraph", "graph"):
                raise ParseError("expected header 'digraph N' or 'graph N'", lineno)
            try:
                n = int(tokens[1])
            except ValueError:
                raise ParseError(f"vertex count {tokens[1]!r} is not an integer", lineno) from None
            if n < 0:
                raise ParseError("vertex count must be non-negative", lineno)
            header = (tokens[0], n)
            continue
        if tokens == ["names"]:
            in_names = True
            continue
        if in_names:
            try:
                v = int(tokens[0])
            except ValueError:
                raise ParseError(f"vertex id {tokens[0]!r} is not an integer", lineno) from None
            if not 0 <= v < header[1] or len(tokens) < 2:
                raise ParseError("names line must be 'id label' with id in range", lineno)
            names[v] = " ".join(tokens[1:])
            continue
        if len(tokens) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, w = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {line!r}", lineno) from None
        n = header[1]
        if not (0 <= u < n and 0 <= w < n):
            raise ParseError(f"vertex id out of range [0, {n})", lineno)
        if u == w:
            raise ParseError(f"loop at vertex {u}", lineno)
        pairs.append((u, w))
    if header is None:
        raise ParseError("empty document: missing header")
    kind, n = header
    graph = MultiDigraph(n, tuple(pairs)) if kind == "digraph" else MultiGraph(n, tuple(pairs))
    return InputDocument(graph, names)


def parse(text: str) -> MultiDigraph | MultiGraph:
    return parse_document(text).graph


def format_document(X: MultiDigraph | MultiGraph, names: dict | None = None) -> str:
    if isinstance(X, MultiDigraph):
        lines = [f"digraph {X.n}"] + [f"{u} {w}" for u, w in X.arcs]
    else:
        lines = [f"graph {X.n}"] + [f"{u} {w}" for u, w in X.edges]
    if names:
        lines.append("names")
        lines.extend(f"{v} {names[v]}" for v in sorted(names))
    return "\n".join(lines) + "\n"


def digest(X: MultiDigraph | MultiGraph) -> str:
    return "sha256:" + hashlib.sha256(format_document(X).encode()).hexdigest()


def ratio_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_ratio(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"not an exact rational: {text!r}") from None


# -- witnesses ---------------------------------------------------------------

def encode_witness(w) -> object:
    if w is None:
        return None
    if isinstance(w, Colouring):
        second = "b" if w.kind == "b-tuple" else "d"
        if w.kind == "b-tuple":
            assignment = [sorted(B) for B in w.assignment]
        else:
            assignment = list(w.assignment)
        return {"type": "colouring", "kind": w.kind, "k": w.k, second: w.second,
                "assignment": assignment}
    if isinstance(w, LpSolution):
        support = w.support
        return {"type": "lp",
                "sets": [sorted(w.sets[i]) for i in support],
                "primal": [ratio_str(w.primal[i]) for i in support],
                "dual": [ratio_str(y) for y in w.dual],
                "objective": ratio_str(w.objective)}
    return {"type": "map", "map": list(w)}


def decode_witness(data) -> object:
    if data is None:
        return None
    kind = data["type"]
    if kind == "colouring":
        if data["kind"] == "b-tuple":
            assignment = tuple(frozenset(B) for B in data["assignment"])
            return Colouring("b-tuple", data["k"], data["b"], assignment)
        return Colouring(data["kind"], data["k"], data["d"], tuple(data["assignment"]))
    if kind == "lp":
        return LpSolution(tuple(frozenset(S) for S in data["sets"]),
                          tuple(parse_ratio(x) for x in data["primal"]),
                          tuple(parse_ratio(y) for y in data["dual"]),
                          parse_ratio(data["objective"]))
    if kind == "map":
        return tuple(data["map"])
    raise InputError(f"unknown witness type {kind!r}")


def certificate(name: str, X, value=None, witness=None, decision=None, rejected=None) -> dict:
    return {
        "tool": "dicolour",
        "version": __version__,
        "name": name,
        "input_digest": digest(X),
        "value": None if value is None else ratio_str(value),
        "decision": decision,
        "rejected": None if rejected is None else ratio_str(rejected),
        "witness": encode_witness(witness),
    }


def validate_certificate(cert: dict, X, target=None, family: AcyclicSetFamily | None = None) -> bool:
    """Re-check a certificate's witness against ``X``.

    A parameter certificate (no ``decision``) must carry a witness certifying
    exactly ``value``; a ``yes`` decision needs a witness within the
    threshold ``value``.  Homomorphism certificates name their kind as
    ``hom-<kind>`` and need the ``target`` they map into.
    """
    if cert.get("input_digest") != digest(X):
        return False
    witness = decode_witness(cert.get("witness"))
    value = None if cert.get("value") is None else parse_ratio(cert["value"])
    exact = cert.get("decision") is None

    def within(bound):
        if value is None:
            return True
        if exact:
            return bound == value
        return bound <= value if cert["decision"] == "yes" else bound > value

    if isinstance(witness, Colouring):
        return validate_colouring(X, witness) and within(Fraction(witness.k, witness.second))
    if isinstance(witness, LpSolution):
        try:
            check_lp_solution(X, witness, family or acyclic_set_family(X))
        except AssertionError:
            return False
        return within(witness.objective)
    if isinstance(witness, tuple):
        kind = cert["name"].removeprefix("hom-")
        return target is not None and is_hom(kind, X, target, witness)
    return witness is None and cert.get("decision") == "no"

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import digraphs, graphs
from dicolour import (
    InputError,
    MultiDigraph,
    MultiGraph,
    acyclic_orientation,
    circulant_digraph,
    circulant_graph,
    digirth,
    directed_cycle,
    directed_cycles,
    is_acyclic,
    is_forest,
    maximal_acyclic_sets,
    symmetric_orientation,
    symmetric_part,
)
from dicolour.structures import strong_components

DIGON = MultiDigraph(2, ((0, 1), (1, 0)))
K2 = MultiGraph(2, ((0, 1),))
C3 = MultiGraph(3, ((0, 1), (1, 2), (0, 2)))


def test_arcs_are_normalised_and_keep_multiplicity():
    D = MultiDigraph(3, [(2, 0), (0, 1), (0, 1)])
    assert D.arcs == ((0, 1), (0, 1), (2, 0))
    G = MultiGraph(2, [(1, 0), (0, 1)])
    assert G.edges == ((0, 1), (0, 1))
    assert G.multiplicity[(0, 1)] == 2


@pytest.mark.parametrize("bad", [[(0, 0)], [(0, 3)], [(-1, 0)]])
def test_loops_and_out_of_range_rejected(bad):
    with pytest.raises(InputError):
        MultiDigraph(3, bad)
    with pytest.raises(InputError):
        MultiGraph(3, bad)


def test_is_acyclic_examples():
    assert not is_acyclic(directed_cycle(3), range(3))
    assert not is_acyclic(DIGON, {0, 1})
    for v in range(3):
        assert is_acyclic(directed_cycle(3), {v})
    with pytest.raises(InputError):
        is_acyclic(DIGON, {5})


def test_parallel_arcs_alone_make_no_cycle():
    assert is_acyclic(MultiDigraph(2, ((0, 1), (0, 1), (0, 1))), {0, 1})


def test_is_forest_examples():
    assert not is_forest(MultiGraph(2, ((0, 1), (0, 1))), {0, 1})
    assert is_forest(K2, {0, 1})
    c4 = MultiGraph(4, ((0, 1), (1, 2), (2, 3), (0, 3)))
    for drop in range(4):
        assert is_forest(c4, set(range(4)) - {drop})
    assert not is_forest(c4, range(4))


def test_digirth_examples():
    assert digirth(directed_cycle(5)) == 5
    assert digirth(symmetric_orientation(K2)) == 2
    assert digirth(acyclic_orientation(C3)) is None
    assert digirth(MultiDigraph(0)) is None


def test_symmetric_orientation_examples():
    assert symmetric_orientation(K2).arcs == ((0, 1), (1, 0))
    assert symmetric_orientation(MultiGraph(4)).arcs == ()
    assert len(symmetric_orientation(C3).arcs) == 6


def test_symmetric_part_examples():
    assert symmetric_part(circulant_digraph(7, 3)) == circulant_graph(7, 3)
    assert symmetric_part(directed_cycle(4)).edges == ()


def test_acyclic_orientation_examples():
    assert acyclic_orientation(C3).arcs == ((0, 1), (0, 2), (1, 2))
    assert acyclic_orientation(K2).arcs == ((0, 1),)
    assert acyclic_orientation(MultiGraph(2, ((0, 1), (0, 1)))).arcs == ((0, 1), (0, 1))


def test_maximal_acyclic_sets_examples():
    assert maximal_acyclic_sets(directed_cycle(3)) == [{0, 1}, {0, 2}, {1, 2}]
    assert maximal_acyclic_sets(DIGON) == [{0}, {1}]
    assert maximal_acyclic_sets(acyclic_orientation(C3)) == [{0, 1, 2}]
    assert maximal_acyclic_sets(MultiDigraph(0)) == [frozenset()]


def test_directed_cycles_examples():
    assert directed_cycles(directed_cycle(4)) == [(0, 1, 2, 3)]
    assert sorted(directed_cycles(symmetric_orientation(C3))) == [
        (0, 1), (0, 1, 2), (0, 2), (0, 2, 1), (1, 2)]
    assert directed_cycles(symmetric_orientation(C3), length=3) == [(0, 1, 2), (0, 2, 1)]


def test_strong_components():
    D = MultiDigraph(5, ((0, 1), (1, 0), (1, 2), (3, 4), (4, 3)))
    assert strong_components(D) == [{0, 1}, {2}, {3, 4}]


# -- properties ---------------------------------------------------------------

@given(digraphs(max_n=6), st.data())
def test_acyclicity_is_hereditary(D, data):
    T = data.draw(st.sets(st.integers(0, max(D.n - 1, 0)), max_size=D.n)) if D.n else set()
    S = {v for v in T if data.draw(st.booleans())}
    if is_acyclic(D, T):
        assert is_acyclic(D, S)


@given(digraphs(max_n=6), st.data())
def test_is_acyclic_matches_networkx(D, data):
    S = data.draw(st.sets(st.integers(0, D.n - 1))) if D.n else set()
    assert is_acyclic(D, S) == oracles.acyclic(D, S)


@given(graphs(max_n=6), st.data())
def test_is_forest_matches_networkx(G, data):
    S = data.draw(st.sets(st.integers(0, G.n - 1))) if G.n else set()
    assert is_forest(G, S) == oracles.forest(G, S)


@given(graphs(max_n=6))
def test_symmetric_part_inverts_orientation(G):
    assert symmetric_part(symmetric_orientation(G)) == G.simple()


@given(digraphs(max_n=6))
def test_digirth_two_iff_digon(D):
    assert (digirth(D) == 2) == bool(symmetric_part(D).edges)


@given(digraphs(max_n=6))
def test_digirth_matches_shortest_networkx_cycle(D):
    import networkx as nx
    lengths = [len(c) for c in nx.simple_cycles(oracles.nx_digraph(D))]
    assert digirth(D) == (min(lengths) if lengths else None)


@given(graphs(max_n=6))
def test_acyclic_orientation_is_acyclic(G):
    D = acyclic_orientation(G)
    assert is_acyclic(D, range(G.n))
    assert len(D.arcs) == len(G.edges)


def test_maximal_sets_match_exhaustive_enumeration():
    rng = oracles.seeded(11)
    for _ in range(40):
        D = oracles.random_digraph(rng, 8)
        found = maximal_acyclic_sets(D)
        assert set(found) == oracles.maximal_acyclic_sets(D)
        assert len(found) == len(set(found))
        # every acyclic set lies inside a maximal one, and only those do
        for S in oracles.subsets(D.n):
            assert oracles.acyclic(D, S) == any(S <= M for M in found)


@given(digraphs(max_n=6))
def test_directed_cycles_match_networkx_count(D):
    assert len(directed_cycles(D)) == oracles.cycle_count(D)

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, strategies as st

from centspec.errors import NotCliqueUnion
from centspec.graphs import (CliqueDecomposition, Graph, Variant, centralizer_graph, claimed_structure,
                             clique_decomposition, cocentralizer_graph, multipartite_decomposition,
                             psl_block_sizes)
from centspec.groups import GroupSpec, build_group


def g_of(spec):
    return build_group(spec)


def test_quaternion_n3_triangle_plus_isolated():
    g = centralizer_graph(g_of(GroupSpec.quaternion(3)))
    assert g.order == 4 and g.edge_count == 3
    assert sorted(len(c) for c in g.components()) == [1, 3]


def test_quaternion_n2_is_triangle():
    g = centralizer_graph(g_of(GroupSpec.quaternion(2)))
    assert clique_decomposition(g).parts == (3,)
    co = cocentralizer_graph(g_of(GroupSpec.quaternion(2)))
    assert co.order == 3 and co.edge_count == 0


def test_dihedral_n5():
    assert clique_decomposition(centralizer_graph(g_of(GroupSpec.dihedral(5)))).parts == (5, 1)


def test_quaternion_n4_star():
    co = cocentralizer_graph(g_of(GroupSpec.quaternion(4)))
    assert sorted(co.degrees().tolist()) == [1, 1, 1, 1, 4]


def test_psl_k2_tripartite():
    co = cocentralizer_graph(g_of(GroupSpec.psl(2)))
    assert multipartite_decomposition(co).parts == (10, 6, 5)
    assert clique_decomposition(centralizer_graph(g_of(GroupSpec.psl(2)))).parts == (10, 6, 5)


def test_clique_decomposition_examples():
    assert clique_decomposition(Graph.clique_union([5, 1])).parts == (5, 1)
    path = Graph.from_edges(3, [(0, 1), (1, 2)])
    with pytest.raises(NotCliqueUnion):
        clique_decomposition(path)


def test_claimed_structure_examples():
    assert claimed_structure(GroupSpec.quasidihedral(4)).parts == (4, 1)
    assert claimed_structure(GroupSpec.metacyclic(5, 3)).parts == (5, 1)
    assert claimed_structure(GroupSpec.psl(2)).parts == (10, 6, 5)
    assert claimed_structure(GroupSpec.dihedral(8), Variant.CoCentralizer).parts == (4, 1)
    assert psl_block_sizes(2) == (5, 10, 6)


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(np.array([[1]]))
    with pytest.raises(ValueError):
        Graph(np.array([[0, 1], [0, 0]]))
    with pytest.raises(ValueError):
        CliqueDecomposition((1, 3))


SPECS = ([GroupSpec.quaternion(n) for n in range(2, 10)] + [GroupSpec.dihedral(n) for n in range(3, 13)]
         + [GroupSpec.quasidihedral(n) for n in (4, 5, 6)] + [GroupSpec.metacyclic(p, 2) for p in (3, 4, 5, 6)]
         + [GroupSpec.psl(k) for k in (1, 2)])


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_centralizer_graph_is_clique_union(spec):
    g = centralizer_graph(g_of(spec))
    parts = clique_decomposition(g)
    assert parts.total == g.order
    co = cocentralizer_graph(g_of(spec))
    assert co == g.complement() and co.complement() == g
    cards = sorted(set(g.cardinalities))
    # claim holds whenever the classes that the formula separates really differ in size
    if len(cards) == len(claimed_structure(spec)):
        assert parts == claimed_structure(spec)


parts_strategy = st.lists(st.integers(1, 6), min_size=1, max_size=5)


@given(parts_strategy, st.randoms(use_true_random=False))
def test_recovers_parts_under_relabelling(parts, rnd):
    g = Graph.clique_union(parts)
    order = list(range(g.order))
    rnd.shuffle(order)
    h = g.permuted(order)
    assert clique_decomposition(h) == CliqueDecomposition.of(parts)
    assert multipartite_decomposition(h.complement()) == CliqueDecomposition.of(parts)
    assert str(CliqueDecomposition.of(parts)).count("K_") == len(parts)

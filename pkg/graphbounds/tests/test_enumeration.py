# -*- coding: utf-8 -*-
"""Unit tests for canonical forms and isomorph-free enumeration."""

import networkx as nx
import pytest

from graphbounds.enumeration import (canonical_form, canonical_graph,
                                     certificates, connected_graphs, trees)
from graphbounds.errors import EnumerationCapError
from graphbounds.graph import (FamilyKind, decode_graph6, family, from_edges,
                               is_connected)

CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}
TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47,
               10: 106}

PERMUTATION = [4, 0, 6, 2, 7, 1, 5, 3]


def atlas_certificates(n):
    """Certificates of the connected atlas graphs on ``n`` vertices."""
    certs = set()
    for atlas in nx.graph_atlas_g():
        if atlas.number_of_nodes() == n and nx.is_connected(atlas):
            g = decode_graph6(nx.to_graph6_bytes(atlas, header=False))
            certs.add(canonical_form(g))
    return certs


def test_canonical_form_is_invariant():
    g = family(FamilyKind('double_comet', 8, 2)).with_edge(1, 5)
    assert canonical_form(g.relabel(PERMUTATION)) == canonical_form(g)
    assert canonical_graph(g).degrees() == canonical_graph(
        g.relabel(PERMUTATION)).degrees()


def test_canonical_form_separates():
    path = family(FamilyKind('path', 4))
    star = family(FamilyKind('star', 4))
    assert canonical_form(path) != canonical_form(star)
    # Same degree sequence, different graphs: C_6 and two triangles.
    cycle = family(FamilyKind('cycle', 6))
    triangles = from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert canonical_form(cycle) != canonical_form(triangles)


def test_canonical_form_regular_graphs():
    # Highly symmetric inputs exercise the individualization search.
    cube = from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6),
                          (6, 7), (7, 4), (0, 4), (1, 5), (2, 6), (3, 7)])
    moebius = from_edges(8, [(i, (i + 1) % 8) for i in range(8)] +
                         [(i, i + 4) for i in range(4)])
    assert canonical_form(cube) != canonical_form(moebius)
    assert canonical_form(cube.relabel(PERMUTATION)) == canonical_form(cube)
    assert canonical_form(moebius.relabel(PERMUTATION)) == \
        canonical_form(moebius)


def test_canonical_form_cap():
    with pytest.raises(EnumerationCapError):
        canonical_form(family(FamilyKind('path', 13)))


@pytest.mark.parametrize('n', sorted(CONNECTED_COUNTS))
def test_connected_counts(n):
    graphs = list(connected_graphs(n))
    assert len(graphs) == CONNECTED_COUNTS[n]
    if n <= 6:
        assert all(is_connected(g) for g in graphs)


@pytest.mark.parametrize('n', range(1, 8))
def test_connected_matches_atlas(n):
    assert set(certificates('connected', n)) == atlas_certificates(n)


@pytest.mark.parametrize('n', sorted(TREE_COUNTS))
def test_tree_counts(n):
    found = list(trees(n))
    assert len(found) == TREE_COUNTS[n]
    assert all(g.num_edges == n - 1 and is_connected(g) for g in found)


@pytest.mark.parametrize('n', range(2, 9))
def test_trees_match_networkx(n):
    expected = set()
    for tree in nx.nonisomorphic_trees(n):
        data = nx.to_graph6_bytes(nx.convert_node_labels_to_integers(tree),
                                  header=False)
        expected.add(canonical_form(decode_graph6(data)))
    assert set(certificates('trees', n)) == expected


@pytest.mark.parametrize('n', range(1, 8))
def test_trees_are_the_connected_graphs_with_n_minus_1_edges(n):
    from_connected = [cert for cert in certificates('connected', n)
                      if decode_graph6(cert).num_edges == n - 1]
    assert from_connected == list(certificates('trees', n))


def test_stream_order_and_representatives():
    certs = certificates('connected', 5)
    assert list(certs) == sorted(certs)
    for cert, g in zip(certs, connected_graphs(5)):
        assert canonical_form(g) == cert


@pytest.mark.parametrize('kind, n', [('connected', 10), ('connected', 0),
                                     ('trees', 11)])
def test_enumeration_caps(kind, n):
    with pytest.raises(EnumerationCapError):
        certificates(kind, n)

# -*- coding: utf-8 -*-
"""Unit tests for the Randić index, Laplacian spectrum and other invariants."""

from itertools import combinations
import math
import random

import networkx as nx
import numpy as np
import pytest

from graphbounds.bounds import conjecture1_bound
from graphbounds.enumeration import connected_graphs
from graphbounds.errors import ConvergenceError, DisconnectedGraphError
from graphbounds.graph import (MAX_ORDER, FamilyKind, decode_graph6, family,
                               from_edges, is_connected)
from graphbounds.invariants import (algebraic_connectivity, diameter,
                                    edge_connectivity, invariant_report,
                                    jacobi_eigen, laplacian_matrix,
                                    laplacian_spectrum, randic_index)

TOL = 1e-9
ALG_CONN_TOL = 1e-8
RANDIC_TOL = 1e-12

PETERSEN = from_edges(10, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                           (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                           (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)])


def brute_force_edge_connectivity(g):
    """Smallest number of edges leaving a proper vertex subset with 0 in it."""
    best = None
    others = range(1, g.n)
    for size in range(0, g.n - 1):
        for chosen in combinations(others, size):
            side = {0, *chosen}
            cut = sum(1 for u, v in g.edges() if (u in side) != (v in side))
            best = cut if best is None else min(best, cut)
    return best


def test_k3_report():
    rep = invariant_report(decode_graph6('Bw'))
    assert rep.n == 3
    assert rep.m == 3
    assert rep.randic == pytest.approx(1.5, abs=TOL)
    assert rep.alg_conn == pytest.approx(3.0, abs=TOL)
    assert rep.diameter == 1
    assert rep.min_degree == 2
    assert rep.edge_conn == 2
    assert rep.is_regular
    assert not rep.is_tree


def test_edgeless_report():
    rep = invariant_report(decode_graph6('B?'))
    assert rep.alg_conn == 0.0
    assert rep.edge_conn == 0
    assert rep.diameter == -1
    assert rep.randic == 0.0
    with pytest.raises(DisconnectedGraphError):
        diameter(decode_graph6('B?'))


@pytest.mark.parametrize('n', range(2, MAX_ORDER + 1))
def test_path_closed_forms(n):
    g = family(FamilyKind('path', n))
    a = algebraic_connectivity(g)
    assert abs(a - 2 * (1 - math.cos(math.pi / n))) < ALG_CONN_TOL
    assert diameter(g) == n - 1
    assert edge_connectivity(g) == 1
    if n >= 3:
        randic = randic_index(g)
        assert abs(randic - (n - 3 + 2 * math.sqrt(2)) / 2) < RANDIC_TOL
        assert randic / a == pytest.approx(conjecture1_bound(n), rel=1e-8)


@pytest.mark.parametrize('n', range(3, MAX_ORDER + 1))
def test_cycle_and_complete_closed_forms(n):
    cycle = family(FamilyKind('cycle', n))
    assert abs(algebraic_connectivity(cycle) -
               2 * (1 - math.cos(2 * math.pi / n))) < ALG_CONN_TOL
    complete = family(FamilyKind('complete', n))
    assert abs(algebraic_connectivity(complete) - n) < ALG_CONN_TOL


@pytest.mark.parametrize('n', [3, 5, 7, 10])
def test_other_closed_forms(n):
    complete = family(FamilyKind('complete', n))
    assert randic_index(complete) == pytest.approx(n / 2.0, abs=TOL)
    assert edge_connectivity(complete) == n - 1

    star = family(FamilyKind('star', n))
    assert randic_index(star) == pytest.approx(math.sqrt(n - 1), abs=TOL)
    assert algebraic_connectivity(star) == pytest.approx(1.0, abs=TOL)

    cycle = family(FamilyKind('cycle', n))
    assert randic_index(cycle) == pytest.approx(n / 2.0, abs=TOL)
    assert edge_connectivity(cycle) == 2


def test_connectivity_agrees_with_spectrum():
    for atlas in nx.graph_atlas_g()[2:]:
        g = decode_graph6(nx.to_graph6_bytes(atlas, header=False))
        spectrum = laplacian_spectrum(g)
        assert abs(spectrum.eigenvalues[0]) < 1e-8
        a = algebraic_connectivity(g, spectrum)
        assert (a > 1e-8) == is_connected(g) == nx.is_connected(atlas)


@pytest.mark.parametrize('n', range(3, 8))
def test_alg_conn_at_most_edge_connectivity(n):
    for g in connected_graphs(n):
        if g.num_edges == n * (n - 1) // 2:
            continue
        rep = invariant_report(g)
        assert rep.alg_conn <= rep.edge_conn + 1e-9
        assert rep.edge_conn <= rep.min_degree


def test_petersen():
    rep = invariant_report(PETERSEN)
    assert rep.randic == pytest.approx(5.0, abs=TOL)
    assert rep.alg_conn == pytest.approx(2.0, abs=TOL)
    assert rep.diameter == 2
    assert rep.edge_conn == 3


def test_spectrum_matches_numpy():
    for g in connected_graphs(6):
        spectrum = laplacian_spectrum(g)
        expected = np.linalg.eigvalsh(laplacian_matrix(g))
        assert np.allclose(spectrum.eigenvalues, expected, atol=1e-9)
        assert spectrum.eigenvalues[0] == pytest.approx(0.0, abs=1e-9)
        assert sum(spectrum.eigenvalues) == pytest.approx(2 * g.num_edges)
        assert spectrum.residual < 1e-9


def test_jacobi_sweep_cap():
    matrix = laplacian_matrix(PETERSEN)
    with pytest.raises(ConvergenceError) as info:
        jacobi_eigen(matrix, max_sweeps=1)
    assert info.value.sweeps == 1
    values, _, sweeps = jacobi_eigen(np.diag([3.0, 1.0, 2.0]))
    assert list(values) == [1.0, 2.0, 3.0]
    assert sweeps == 0


def test_edge_connectivity_oracles():
    for g in connected_graphs(6):
        assert edge_connectivity(g) == brute_force_edge_connectivity(g)
    for atlas in nx.graph_atlas_g()[1:]:
        if not nx.is_connected(atlas) or atlas.number_of_nodes() < 2:
            continue
        g = decode_graph6(nx.to_graph6_bytes(atlas, header=False))
        assert edge_connectivity(g) == nx.edge_connectivity(atlas)


def test_randic_is_label_independent():
    g = family(FamilyKind('double_comet', 9, 2))
    shuffled = g.relabel([8, 3, 0, 5, 1, 7, 2, 6, 4])
    assert randic_index(shuffled) == randic_index(g)


def test_report_is_label_independent():
    g = family(FamilyKind('double_comet', 9, 2)).with_edge(1, 5)
    base = invariant_report(g)
    assert base.degrees == tuple(sorted(g.degrees()))
    rng = random.Random(20)
    for _ in range(20):
        perm = list(range(g.n))
        rng.shuffle(perm)
        rep = invariant_report(g.relabel(perm))
        assert rep.alg_conn == pytest.approx(base.alg_conn, abs=1e-12)
        assert rep._replace(alg_conn=base.alg_conn) == base

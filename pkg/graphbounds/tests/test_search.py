# -*- coding: utf-8 -*-
"""Unit tests for the variable neighborhood search."""

from functools import lru_cache

import pytest

from graphbounds.bounds import conjecture2_reference, path_product
from graphbounds.enumeration import canonical_form, connected_graphs
from graphbounds.errors import SearchError
from graphbounds.graph import FamilyKind, family, from_edges, is_connected
from graphbounds.invariants import invariant_report
from graphbounds.objective import eval_objective, parse_objective
from graphbounds.search import (SearchConfig, SplitMix64, neighborhood,
                                vns_search)

# First outputs of SplitMix64 seeded with 0, from the reference generator.
SPLITMIX_ZERO = [0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]


@lru_cache(maxsize=None)
def exhaustive_optimum(n, text, direction):
    """Best value and smallest certificate attaining it, by full scan."""
    expr = parse_objective(text)
    sign = 1.0 if direction == 'minimize' else -1.0
    best = None
    for g in connected_graphs(n):
        value = eval_objective(expr, invariant_report(g))
        key = (sign * value, canonical_form(g))
        if best is None or key[0] < best[0] - 1e-12 or (
                abs(key[0] - best[0]) <= 1e-12 and key[1] < best[1]):
            best = key
    return sign * best[0], best[1]


def test_splitmix64():
    rng = SplitMix64(0)
    assert [rng.next_u64() for _ in range(3)] == SPLITMIX_ZERO
    rng = SplitMix64(12345)
    assert all(rng.randbelow(7) < 7 for _ in range(100))


def test_neighborhood_moves_stay_connected():
    g = family(FamilyKind('path', 5)).with_edge(0, 2)
    moves = list(neighborhood(g))
    kinds = set(move[0] for move, _ in moves)
    assert kinds == {'add', 'delete', 'rotate'}
    assert all(is_connected(h) for _, h in moves)
    assert sum(1 for move, _ in moves if move[0] == 'add') == \
        len(g.non_edges())
    # Only the triangle edges can be deleted.
    deleted = sorted(move[1:] for move, _ in moves if move[0] == 'delete')
    assert deleted == [(0, 1), (0, 2), (1, 2)]
    assert list(neighborhood(g)) == moves


def test_neighborhood_of_complete_graph():
    g = family(FamilyKind('complete', 4))
    moves = list(neighborhood(g))
    assert len(moves) == 6
    assert all(move[0] == 'delete' for move, _ in moves)


@pytest.mark.parametrize('n', [3, 4, 5, 6, 7])
def test_search_matches_exhaustive_minimum(n):
    trace = vns_search(SearchConfig(n=n, objective='R*a'))
    value, cert = exhaustive_optimum(n, 'R*a', 'minimize')
    assert trace.best_value == pytest.approx(value, abs=1e-9)
    assert trace.certificate == cert
    assert trace.best_value <= path_product(n) + 1e-9


@pytest.mark.parametrize('n', [4, 6, 8])
def test_search_maximum_ratio_is_path(n):
    trace = vns_search(SearchConfig(n=n, objective='R/a',
                                    direction='maximize', restarts=2))
    assert trace.certificate == canonical_form(family(FamilyKind('path', n)))
    if n <= 6:
        value, cert = exhaustive_optimum(n, 'R/a', 'maximize')
        assert trace.certificate == cert
        assert trace.best_value == pytest.approx(value, abs=1e-9)


@pytest.mark.parametrize('seed', [1, 2, 3, 4, 5])
@pytest.mark.parametrize('text, direction', [('R*a', 'minimize'),
                                             ('R/a', 'maximize')])
def test_every_seed_finds_optimum(seed, text, direction):
    trace = vns_search(SearchConfig(n=7, objective=text, direction=direction,
                                    seed=seed))
    value, cert = exhaustive_optimum(7, text, direction)
    assert trace.certificate == cert
    assert trace.best_value == pytest.approx(value, abs=1e-9)


@pytest.mark.parametrize('n', [10, 11, 12])
def test_search_reaches_family_sweep(n):
    trace = vns_search(SearchConfig(n=n, objective='R*a'))
    _, reference = conjecture2_reference(n)
    assert trace.best_value <= reference + 1e-12
    assert is_connected(trace.best_graph)


def test_search_beats_path_at_order_10():
    trace = vns_search(SearchConfig(n=10, objective='R*a', seed=42,
                                    restarts=2, patience=10))
    assert trace.best_value < path_product(10)
    assert is_connected(trace.best_graph)
    _, reference = conjecture2_reference(10)
    assert reference < path_product(10)


def test_search_is_deterministic():
    cfg = SearchConfig(n=6, objective='R - a', seed=7, restarts=3,
                       patience=5)
    first = vns_search(cfg)
    second = vns_search(cfg)
    assert first == second
    assert first.seed == 7
    assert first.moves_attempted >= first.moves_accepted
    iterations = [it for it, _ in first.history]
    assert iterations == sorted(iterations)


def test_search_reverifies_best_value():
    trace = vns_search(SearchConfig(n=5, objective='D/kappa',
                                    direction='maximize', restarts=1))
    rep = invariant_report(trace.best_graph)
    assert trace.best_value == eval_objective(parse_objective('D/kappa'), rep)
    assert trace.best_graph == from_edges(
        5, trace.best_graph.edges())


def test_infeasible_candidates_are_skipped():
    # 1/(D-1) has no value on the complete graph; the search routes around it.
    trace = vns_search(SearchConfig(n=5, objective='1/(D-1)',
                                    direction='maximize', restarts=1))
    assert trace.best_value == pytest.approx(1.0)
    assert invariant_report(trace.best_graph).diameter == 2


@pytest.mark.parametrize('changes', [
    {'n': 2},
    {'n': 13},
    {'direction': 'sideways'},
    {'restarts': 0},
    {'max_iterations': -1},
    {'patience': 0},
    {'max_neighborhood_k': 0},
])
def test_invalid_configs(changes):
    cfg = SearchConfig(n=5, objective='R')._replace(**changes)
    with pytest.raises(SearchError):
        vns_search(cfg)

# coding: utf-8

"""
Variable neighborhood search for extremal graphs.

The search walks over connected graphs of a fixed order. Its 1-edge
neighborhood of a graph holds every graph reachable by one move:

- ``add``: join a non-adjacent pair;
- ``delete``: remove an edge whose removal keeps the graph connected;
- ``rotate``: replace an edge ``uv`` by ``uw`` for a non-neighbor ``w`` of
  ``u``, keeping the graph connected.

Each restart starts from the path ``P_n`` and descends by best improvement
over that neighborhood. At a local optimum it shakes the incumbent with
``k`` random moves and descends again; ``k`` returns to 1 after an
improvement and otherwise cycles through ``1 .. max_neighborhood_k``.
A restart ends after ``max_iterations`` shake rounds or after ``patience``
rounds in a row without improvement. Ties between equally good graphs go to
the smaller canonical certificate, and the random moves come from a
SplitMix64 generator seeded with ``seed + restart``, so a configuration
always produces the same trace.
"""

from collections import namedtuple
import logging

from graphbounds import logconf  # pylint: disable=unused-import
from graphbounds.enumeration import CANONICAL_CAP, canonical_form
from graphbounds.errors import ObjectiveEvalError, SearchError
from graphbounds.graph import FamilyKind, decode_graph6, family, reachable_mask
from graphbounds.invariants import invariant_report
from graphbounds.objective import ObjectiveExpr, eval_objective, parse_objective

logger = logging.getLogger(__name__)  # pylint: disable=invalid-name

MASK64 = (1 << 64) - 1
IMPROVEMENT_EPS = 1.0e-12
REVERIFY_TOLERANCE = 1.0e-12
DIRECTIONS = ('minimize', 'maximize')


class SplitMix64(object):
    """
    The SplitMix64 generator (Steele, Lea and Flood, 2014).

    ``next_u64`` advances the state by ``0x9E3779B97F4A7C15`` and mixes it
    with the two xor-shift-multiply rounds of the reference implementation,
    so traces can be reproduced in any language from the seed alone.
    """
    def __init__(self, seed):
        self._state = seed & MASK64

    def next_u64(self):
        self._state = (self._state + 0x9E3779B97F4A7C15) & MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def randbelow(self, bound):
        """Integer in ``[0, bound)`` (``next_u64() % bound``)."""
        return self.next_u64() % bound


SearchConfig = namedtuple('SearchConfig', [
    'n', 'objective', 'direction', 'seed', 'max_iterations',
    'max_neighborhood_k', 'restarts', 'patience'])
SearchConfig.__new__.__defaults__ = ('minimize', 0, 10000, 5, 5, 20)
SearchConfig.__doc__ = """
Parameters of one extremal search.

``objective`` may be an :class:`graphbounds.objective.ObjectiveExpr` or
its source text.
"""

SearchTrace = namedtuple('SearchTrace', [
    'n', 'objective', 'direction', 'seed', 'best_graph', 'best_value',
    'certificate', 'history', 'iterations', 'moves_attempted',
    'moves_accepted'])
SearchTrace.__doc__ = """
Outcome of :func:`vns_search`.

``best_graph`` is canonically labeled and ``best_value`` is the objective
evaluated afresh on it. ``history`` lists ``(iteration, value)`` each time
the overall best improved; iterations count shake rounds across restarts,
with 0 for the initial descent.
"""


def validate_config(cfg):
    """
    Check a configuration and parse its objective.

    Returns:
        :class:`SearchConfig`: With ``objective`` parsed.

    Raises:
        :class:`graphbounds.errors.SearchError`: On an invalid setting.
        :class:`graphbounds.errors.ObjectiveSyntaxError`: On a bad objective.
    """
    if not isinstance(cfg.n, int) or not 3 <= cfg.n <= CANONICAL_CAP:
        raise SearchError('n must be in [3, {0}], got {1!r}'.format(
            CANONICAL_CAP, cfg.n))
    if cfg.direction not in DIRECTIONS:
        raise SearchError('direction must be minimize or maximize, got '
                          '{0!r}'.format(cfg.direction))
    for field in ('max_iterations', 'max_neighborhood_k', 'restarts',
                  'patience'):
        value = getattr(cfg, field)
        if not isinstance(value, int) or value < 1:
            raise SearchError('{0} must be a positive integer, got '
                              '{1!r}'.format(field, value))
    objective = cfg.objective
    if not isinstance(objective, ObjectiveExpr):
        objective = parse_objective(objective)
    return cfg._replace(objective=objective, seed=int(cfg.seed) & MASK64)


def neighborhood(g):
    """
    Every connected graph one move away from ``g``, in a fixed order.

    Yields:
        tuple: ``(move, graph)`` where ``move`` is ``('add', u, v)``,
        ``('delete', u, v)`` or ``('rotate', u, v, w)``.
    """
    n = g.n
    full = (1 << n) - 1
    for u, v in g.non_edges():
        yield ('add', u, v), g.with_edge(u, v)
    edges = g.edges()
    for u, v in edges:
        h = g.without_edge(u, v)
        if reachable_mask(h.rows, 0) == full:
            yield ('delete', u, v), h
    for u, v in edges:
        for pivot, old in ((u, v), (v, u)):
            cut = g.without_edge(pivot, old)
            for w in range(n):
                if w == pivot or w == old or g.has_edge(pivot, w):
                    continue
                h = cut.with_edge(pivot, w)
                if reachable_mask(h.rows, 0) == full:
                    yield ('rotate', pivot, old, w), h


class _Evaluator(object):
    """Objective values memoised by labeled rows and by certificate."""
    def __init__(self, objective):
        self.objective = objective
        self._by_rows = {}
        self._by_cert = {}

    def __call__(self, g):
        hit = self._by_rows.get(g.rows)
        if hit is not None:
            return hit
        cert = canonical_form(g)
        if cert in self._by_cert:
            value = self._by_cert[cert]
        else:
            try:
                value = eval_objective(self.objective, invariant_report(g))
            except ObjectiveEvalError as err:
                logger.debug('Infeasible candidate %s: %s', cert, err)
                value = None
            self._by_cert[cert] = value
        hit = (cert, value)
        self._by_rows[g.rows] = hit
        return hit


class _Walk(object):
    """State shared by the restarts of one search."""
    def __init__(self, cfg):
        self.cfg = cfg
        self.sign = 1.0 if cfg.direction == 'minimize' else -1.0
        self.evaluate = _Evaluator(cfg.objective)
        self.attempted = 0
        self.accepted = 0

    def score(self, value):
        if value is None:
            return float('inf')
        return self.sign * value

    def better(self, score, cert, best_score, best_cert):
        """True if ``(score, cert)`` beats ``(best_score, best_cert)``."""
        if score < best_score - IMPROVEMENT_EPS:
            return True
        return abs(score - best_score) <= IMPROVEMENT_EPS and cert < best_cert

    def accept(self, g):
        if reachable_mask(g.rows, 0) != (1 << g.n) - 1:
            raise SearchError('walk reached a disconnected graph {0}'.format(g))
        self.accepted += 1

    def descend(self, g):
        """Best-improvement descent to a local optimum."""
        cert, value = self.evaluate(g)
        score = self.score(value)
        while True:
            best = None
            for _, h in neighborhood(g):
                self.attempted += 1
                h_cert, h_value = self.evaluate(h)
                if h_value is None:
                    continue
                h_score = self.score(h_value)
                if best is None or self.better(h_score, h_cert,
                                               best[0], best[1]):
                    best = (h_score, h_cert, h, h_value)
            if best is None or not best[0] < score - IMPROVEMENT_EPS:
                return g, cert, value
            score, cert, g, value = best
            self.accept(g)

    def shake(self, g, k, rng):
        for _ in range(k):
            moves = list(neighborhood(g))
            if not moves:
                break
            self.attempted += 1
            g = moves[rng.randbelow(len(moves))][1]
        return g


def _restart(walk, index, start):
    """
    One restart from ``start``.

    Returns:
        tuple: ``(improvements, rounds)``; improvements are
        ``(round, graph, cert, value)`` each time the restart's incumbent
        improved, the first being the initial descent at round 0.
    """
    cfg = walk.cfg
    rng = SplitMix64(cfg.seed + index)
    current, cert, value = walk.descend(start)
    improvements = [(0, current, cert, value)]
    k = 1
    stall = 0
    rounds = 0
    while rounds < cfg.max_iterations and stall < cfg.patience:
        rounds += 1
        candidate = walk.shake(current, k, rng)
        candidate, c_cert, c_value = walk.descend(candidate)
        if walk.score(c_value) < walk.score(value) - IMPROVEMENT_EPS:
            current, cert, value = candidate, c_cert, c_value
            walk.accept(current)
            improvements.append((rounds, current, cert, value))
            k = 1
            stall = 0
        else:
            k = k % cfg.max_neighborhood_k + 1
            stall += 1
    logger.debug('Restart %i: %i rounds, best %r', index, rounds, value)
    return improvements, rounds


def vns_search(cfg):
    """
    Search for a connected graph of order ``cfg.n`` that minimizes or
    maximizes ``cfg.objective``.

    Restarts are independent walks seeded ``seed + restart``; the best of
    them is kept. Objective evaluation failures make a candidate
    infeasible instead of stopping the search.

    Parameters:
        cfg (:class:`SearchConfig`): Search parameters.

    Returns:
        :class:`SearchTrace`

    Raises:
        :class:`graphbounds.errors.SearchError`: On an invalid
            configuration, or if the emitted value fails re-verification.
    """
    cfg = validate_config(cfg)
    walk = _Walk(cfg)
    start = family(FamilyKind('path', cfg.n))
    logger.info('Searching n=%i, %s %s, seed %i, %i restarts',
                cfg.n, cfg.direction, cfg.objective, cfg.seed, cfg.restarts)

    best = None
    history = []
    offset = 0
    for index in range(cfg.restarts):
        improvements, rounds = _restart(walk, index, start)
        for round_no, _, cert, value in improvements:
            if value is None:
                continue
            score = walk.score(value)
            if best is None or walk.better(score, cert, best[0], best[1]):
                if best is None or score < best[0] - IMPROVEMENT_EPS:
                    history.append((offset + round_no, value))
                best = (score, cert, value)
        offset += rounds

    if best is None:
        raise SearchError('no feasible graph found for {0}'.format(
            cfg.objective))

    _, cert, cached = best
    best_graph = decode_graph6(cert)
    fresh = eval_objective(cfg.objective, invariant_report(best_graph))
    if abs(fresh - cached) > REVERIFY_TOLERANCE * max(1.0, abs(fresh)):
        raise SearchError('best value {0!r} does not re-verify ({1!r})'.format(
            cached, fresh))
    logger.info('Best %s = %.12g at %s', cfg.objective, fresh,
                cert.decode('ascii'))
    return SearchTrace(
        n=cfg.n,
        objective=cfg.objective.text,
        direction=cfg.direction,
        seed=cfg.seed,
        best_graph=best_graph,
        best_value=fresh,
        certificate=cert,
        history=tuple(history),
        iterations=offset,
        moves_attempted=walk.attempted,
        moves_accepted=walk.accepted)

# coding: utf-8

"""
Inequalities relating the Randić index to the algebraic connectivity and
to other invariants, as predicates over an
:class:`graphbounds.invariants.InvariantReport`.

Every check returns a :class:`BoundVerdict` with the raw left- and
right-hand sides, so a report can be re-graded under another tolerance
without recomputing anything. ``slack`` is positive when the inequality
holds: ``rhs - lhs`` for upper bounds, ``lhs - rhs`` for lower bounds.
"""

from collections import namedtuple
from functools import lru_cache
import logging
import math

from graphbounds import logconf  # pylint: disable=unused-import
from graphbounds.errors import BoundDomainError, UnknownPredicateError
from graphbounds.graph import FamilyKind, double_comet_sizes, family
from graphbounds.invariants import invariant_report

logger = logging.getLogger(__name__)  # pylint: disable=invalid-name

EQUALITY_TOLERANCE = 1.0e-6

HOLDS_STRICT = 'holds_strict'
HOLDS_EQUALITY = 'holds_equality'
VIOLATED = 'violated'
NOT_APPLICABLE = 'not_applicable'
STATUSES = (HOLDS_STRICT, HOLDS_EQUALITY, VIOLATED, NOT_APPLICABLE)

DIAMETER_ONE = 'diameter_one'

SQRT2 = math.sqrt(2.0)
SQRT6 = math.sqrt(6.0)

BoundVerdict = namedtuple('BoundVerdict', [
    'predicate_id', 'status', 'lhs', 'rhs', 'slack', 'hypothesis_met',
    'upper', 'flag'])
BoundVerdict.__new__.__defaults__ = (None,)


def grade(predicate_id, lhs, rhs, upper, hypothesis_met=True, flag=None,
          tolerance=EQUALITY_TOLERANCE):
    """
    Grade ``lhs <= rhs`` (``upper=True``) or ``lhs >= rhs``.

    Returns:
        :class:`BoundVerdict`
    """
    slack = rhs - lhs if upper else lhs - rhs
    if not hypothesis_met:
        status = NOT_APPLICABLE
    elif abs(slack) <= tolerance:
        status = HOLDS_EQUALITY
    elif slack > 0:
        status = HOLDS_STRICT
    else:
        status = VIOLATED
    return BoundVerdict(predicate_id, status, lhs, rhs, slack,
                        hypothesis_met, upper, flag)


def regrade(verdict, tolerance):
    """Grade a verdict again from its stored sides under ``tolerance``."""
    return grade(verdict.predicate_id, verdict.lhs, verdict.rhs, verdict.upper,
                 verdict.hypothesis_met, verdict.flag, tolerance)


def _require_order(name, n):
    if n < 3:
        raise BoundDomainError(name, 'needs n >= 3, got n={0}'.format(n))


def _require_positive_a(name, rep):
    if rep.alg_conn <= 0:
        raise BoundDomainError(
            name, 'algebraic connectivity must be positive, got {0!r}'.format(
                rep.alg_conn))


def path_alg_conn(n):
    """Closed form ``a(P_n) = 2(1 - cos(pi/n))``."""
    return 2.0 * (1.0 - math.cos(math.pi / n))


def path_randic(n):
    """Closed form ``R(P_n) = (n - 3 + 2 sqrt 2)/2`` for ``n >= 3``."""
    return (n - 3 + 2.0 * SQRT2) / 2.0


def conjecture1_bound(n):
    """
    Upper bound on ``R/a`` over connected graphs of order ``n``, attained
    by the path: ``((n - 3 + 2 sqrt 2)/2) / (2(1 - cos(pi/n)))``.
    """
    _require_order('conjecture1_bound', n)
    return path_randic(n) / path_alg_conn(n)


def check_conjecture1(rep):
    """``R/a`` against :func:`conjecture1_bound`."""
    _require_order('conjecture1', rep.n)
    _require_positive_a('conjecture1', rep)
    return grade('conjecture1', rep.randic / rep.alg_conn,
                 conjecture1_bound(rep.n), upper=True)


def lemma1_bounds(rep):
    """
    The two lower bounds on ``a``: ``2 kappa' (1 - cos(pi/n))`` and
    ``2 delta - n + 2``.

    Returns:
        tuple: ``(kappa_verdict, delta_verdict)``
    """
    n = rep.n
    kappa = grade('lemma1_kappa', rep.alg_conn,
                  2.0 * rep.edge_conn * (1.0 - math.cos(math.pi / n)),
                  upper=False)
    delta = grade('lemma1_delta', rep.alg_conn,
                  float(2 * rep.min_degree - n + 2), upper=False)
    return kappa, delta


def lemma2_bound(rep):
    """``D >= 4/(n a)``."""
    _require_positive_a('lemma2', rep)
    return grade('lemma2', float(rep.diameter),
                 4.0 / (rep.n * rep.alg_conn), upper=False)


def lemma3_bound(rep):
    """Among trees the path has the smallest ``a``: ``a >= a(P_n)``."""
    return grade('lemma3', rep.alg_conn, path_alg_conn(rep.n), upper=False,
                 hypothesis_met=rep.is_tree and rep.n >= 2)


def lemma4_bounds(rep):
    """
    Extremal values of the Randić index.

    Returns:
        tuple: verdicts for ``R <= n/2`` (regular graphs attain it),
        ``R >= sqrt(n - 1)`` (the star attains it) and, for trees on
        ``n >= 3`` vertices, ``R <= R(P_n)``.
    """
    n = rep.n
    regular = grade('lemma4_regular', rep.randic, n / 2.0, upper=True)
    star = grade('lemma4_star', rep.randic, math.sqrt(n - 1), upper=False)
    tree_ok = rep.is_tree and n >= 3
    tree = grade('lemma4_tree', rep.randic,
                 path_randic(n) if n >= 3 else 0.0, upper=True,
                 hypothesis_met=tree_ok)
    return regular, star, tree


def lemma5_bounds(rep):
    """
    ``n/(2(n-1)) <= R/delta <= (3n - 7 + sqrt 6 + 3 sqrt 2)/6``.

    Returns:
        tuple: ``(lower_verdict, upper_verdict)``
    """
    n = rep.n
    _require_order('lemma5', n)
    if rep.min_degree == 0:
        raise BoundDomainError('lemma5', 'minimum degree is 0')
    ratio = rep.randic / rep.min_degree
    lower = grade('lemma5_lower', ratio, n / (2.0 * (n - 1)), upper=False)
    upper = grade('lemma5_upper', ratio,
                  (3 * n - 7 + SQRT6 + 3 * SQRT2) / 6.0, upper=True)
    return lower, upper


def theorem1_bounds(rep):
    """
    The edge-connectivity cases.

    Returns:
        tuple: the ``conjecture1`` ratio check restricted to ``kappa' >= 2``,
        and ``R/a <= (n/2)/(2(1 - cos(pi/n)))`` restricted to ``kappa' = 1``.
    """
    n = rep.n
    _require_order('theorem1', n)
    _require_positive_a('theorem1', rep)
    ratio = rep.randic / rep.alg_conn
    kappa2 = grade('theorem1_kappa2', ratio, conjecture1_bound(n),
                   upper=True, hypothesis_met=rep.edge_conn >= 2)
    kappa1 = grade('theorem1_kappa1', ratio, (n / 2.0) / path_alg_conn(n),
                   upper=True, hypothesis_met=rep.edge_conn == 1)
    return kappa2, kappa1


def theorem2_hypotheses(rep):
    """
    Conditions under which the ``conjecture1`` inequality is proved.

    Returns:
        tuple: ``(D <= 2(n - 3 + 2 sqrt 2)/pi^2, delta >= n/2)``
    """
    n = rep.n
    diameter_cond = rep.diameter <= 2.0 * (n - 3 + 2.0 * SQRT2) / math.pi ** 2
    degree_cond = rep.min_degree >= n / 2.0
    return diameter_cond, degree_cond


def theorem2_bound(rep):
    """``conjecture1`` ratio check applicable under :func:`theorem2_hypotheses`."""
    _require_order('theorem2', rep.n)
    _require_positive_a('theorem2', rep)
    diameter_cond, degree_cond = theorem2_hypotheses(rep)
    return grade('theorem2', rep.randic / rep.alg_conn,
                 conjecture1_bound(rep.n), upper=True,
                 hypothesis_met=diameter_cond or degree_cond)


def theorem3_products(rep):
    """
    Lower bounds on ``R a``: ``8 sqrt(n-1)/(n D^2)`` and
    ``n delta (2 delta - n + 2)/(2(n-1))``.

    The diameter bound is derived assuming ``D >= 2``; complete graphs
    (``D = 1``) are still graded but carry the flag :data:`DIAMETER_ONE`.
    A nonpositive right-hand side of the degree bound holds trivially.

    Returns:
        tuple: ``(diameter_verdict, degree_verdict)``
    """
    n = rep.n
    _require_order('theorem3', n)
    product = rep.randic * rep.alg_conn
    diam = rep.diameter
    diameter = grade('theorem3_diameter', product,
                     8.0 * math.sqrt(n - 1) / (n * diam * diam), upper=False,
                     flag=DIAMETER_ONE if diam == 1 else None)
    delta = rep.min_degree
    rhs = n * delta * (2 * delta - n + 2) / (2.0 * (n - 1))
    degree = grade('theorem3_degree', product, rhs, upper=False)
    if rhs <= 0:
        degree = degree._replace(status=HOLDS_STRICT)
    return diameter, degree


def path_product(n):
    """``R(P_n) a(P_n) = (n - 3 + 2 sqrt 2)(1 - cos(pi/n))``."""
    return path_randic(n) * path_alg_conn(n)


def theorem3_path_bound(rep):
    """
    ``R a >= R(P_n) a(P_n)`` when ``D <= (n-1)^(1/4)`` or
    ``delta >= n/2 - 1``.
    """
    n = rep.n
    _require_order('theorem3_path', n)
    met = (rep.diameter <= (n - 1) ** 0.25 or rep.min_degree >= n / 2.0 - 1)
    return grade('theorem3_path', rep.randic * rep.alg_conn, path_product(n),
                 upper=False, hypothesis_met=met)


@lru_cache(maxsize=None)
def family_sweep(n):
    """
    ``R a`` of the path and of every double comet on ``n`` vertices.

    Returns:
        tuple: ``(label, s, product)`` rows; ``s`` is ``None`` for the path.
    """
    _require_order('family_sweep', n)
    rows = []
    path = invariant_report(family(FamilyKind('path', n)))
    rows.append(('path', None, path.randic * path.alg_conn))
    for s in double_comet_sizes(n):
        rep = invariant_report(family(FamilyKind('double_comet', n, s)))
        rows.append(('double_comet', s, rep.randic * rep.alg_conn))
    return tuple(rows)


def conjecture2_reference(n):
    """
    Smallest ``R a`` among the path and the double comets of order ``n``.

    Ties keep the path, then the smaller ``s``.

    Returns:
        tuple: ``(graph, product)``
    """
    best = None
    for label, s, product in family_sweep(n):
        if best is None or product < best[2]:
            best = (label, s, product)
    graph = family(FamilyKind(best[0], n, best[1]))
    logger.debug('Family minimizer for n=%i: %s s=%s, R*a=%.12g',
                 n, best[0], best[1], best[2])
    return graph, best[2]


def check_conjecture2(rep):
    """``R a`` against the family minimum of :func:`conjecture2_reference`."""
    _require_order('conjecture2', rep.n)
    _, reference = conjecture2_reference(rep.n)
    return grade('conjecture2', rep.randic * rep.alg_conn, reference,
                 upper=False)


Predicate = namedtuple('Predicate', [
    'predicate_id', 'evaluate', 'description', 'informational', 'strict'])

_REGISTRY = [
    Predicate('conjecture1', check_conjecture1,
              'R/a <= ((n-3+2sqrt2)/2)/(2(1-cos(pi/n)))', False, False),
    Predicate('conjecture2', check_conjecture2,
              'R*a >= min over path and double comets', False, False),
    Predicate('lemma1_kappa', lambda rep: lemma1_bounds(rep)[0],
              "a >= 2 kappa' (1-cos(pi/n))", True, False),
    Predicate('lemma1_delta', lambda rep: lemma1_bounds(rep)[1],
              'a >= 2 delta - n + 2', False, False),
    Predicate('lemma2', lemma2_bound, 'D >= 4/(n a)', False, False),
    Predicate('lemma3', lemma3_bound, 'trees: a >= a(P_n)', False, False),
    Predicate('lemma4_regular', lambda rep: lemma4_bounds(rep)[0],
              'R <= n/2', False, False),
    Predicate('lemma4_star', lambda rep: lemma4_bounds(rep)[1],
              'R >= sqrt(n-1)', False, False),
    Predicate('lemma4_tree', lambda rep: lemma4_bounds(rep)[2],
              'trees: R <= R(P_n)', False, False),
    Predicate('lemma5_lower', lambda rep: lemma5_bounds(rep)[0],
              'R/delta >= n/(2(n-1))', False, False),
    Predicate('lemma5_upper', lambda rep: lemma5_bounds(rep)[1],
              'R/delta <= (3n-7+sqrt6+3sqrt2)/6', False, False),
    Predicate('theorem1_kappa2', lambda rep: theorem1_bounds(rep)[0],
              "kappa' >= 2: strict conjecture-1 inequality", False, True),
    Predicate('theorem1_kappa1', lambda rep: theorem1_bounds(rep)[1],
              "kappa' = 1: R/a <= (n/2)/(2(1-cos(pi/n)))", False, False),
    Predicate('theorem2', theorem2_bound,
              'D <= 2(n-3+2sqrt2)/pi^2 or delta >= n/2: conjecture 1',
              False, False),
    Predicate('theorem3_diameter', lambda rep: theorem3_products(rep)[0],
              'R*a >= 8 sqrt(n-1)/(n D^2)', False, False),
    Predicate('theorem3_degree', lambda rep: theorem3_products(rep)[1],
              'R*a >= n delta (2 delta-n+2)/(2(n-1))', False, False),
    Predicate('theorem3_path', theorem3_path_bound,
              'D <= (n-1)^(1/4) or delta >= n/2-1: R*a >= R(P_n) a(P_n)',
              False, False),
]

PREDICATES = {pred.predicate_id: pred for pred in _REGISTRY}


def predicate(predicate_id):
    """
    Look up a registered predicate.

    Raises:
        :class:`graphbounds.errors.UnknownPredicateError`
    """
    try:
        return PREDICATES[predicate_id]
    except KeyError:
        raise UnknownPredicateError(predicate_id, sorted(PREDICATES))


def evaluate(predicate_id, rep):
    """Evaluate the registered predicate ``predicate_id`` on ``rep``."""
    return predicate(predicate_id).evaluate(rep)

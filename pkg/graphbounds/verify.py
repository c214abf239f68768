# coding: utf-8

"""
Exhaustive verification of the registered bounds.

For each order ``n`` in a range, the graphs of the chosen scope are streamed
from the enumerator (or a cached stream file), split into chunks, checked
against one predicate in worker processes and merged back, in stream order,
into one :class:`VerificationSummary` per order.

Scopes:

- ``all``: every connected graph;
- ``trees``: every tree;
- ``kappa2``: connected graphs with edge connectivity at least 2.
"""

from concurrent.futures import ProcessPoolExecutor
import logging
import os
import time

from boltons.iterutils import chunked

from graphbounds import logconf  # pylint: disable=unused-import
from graphbounds import bounds
from graphbounds import enumeration
from graphbounds.errors import BoundDomainError
from graphbounds.graph import decode_graph6, encode_graph6
from graphbounds.invariants import invariant_report

logger = logging.getLogger(__name__)  # pylint: disable=invalid-name

SCOPES = ('all', 'trees', 'kappa2')
SCOPE_STREAMS = {'all': 'connected', 'trees': 'trees', 'kappa2': 'connected'}
DEFAULT_CHUNK_SIZE = 500

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_ERROR = 2


class VerificationSummary(object):
    """
    Outcome of checking one predicate on every graph of one order.

    Summaries of consecutive chunks combine with :meth:`merge`; merging in
    stream order gives the same result as checking the whole stream at once.

    Parameters:
        predicate_id (str): Registered predicate identifier.
        scope (str): One of :data:`SCOPES`.
        n (int): Order of the graphs checked.
    """
    def __init__(self, predicate_id, scope, n):
        self._predicate_id = predicate_id
        self._scope = scope
        self._n = n
        self.graphs_checked = 0
        self.holds_strict = 0
        self.holds_equality = 0
        self.not_applicable = 0
        self.violations = 0
        self.equality_cases = []
        self.violation_cases = []
        self.flagged = []
        self.worst_slack = None
        self.worst_witness = None
        self.elapsed = 0.0

    @property
    def predicate_id(self):
        """Identifier of the predicate checked."""
        return self._predicate_id

    @property
    def scope(self):
        """Graph class checked."""
        return self._scope

    @property
    def n(self):
        """Order of the graphs checked."""
        return self._n

    @property
    def informational(self):
        """True if violations of this predicate do not fail a run."""
        return bounds.predicate(self._predicate_id).informational

    def __repr__(self):
        return 'VerificationSummary({0}, {1}, {2})'.format(
            self._predicate_id, self._scope, self._n)

    def __str__(self):
        return '{0} n={1} ({2}): {3} graphs, {4} violations'.format(
            self._predicate_id, self._n, self._scope, self.graphs_checked,
            self.violations)

    def add(self, witness, verdict):
        """
        Count one verdict.

        Parameters:
            witness (str): graph6 text of the graph checked.
            verdict (:class:`graphbounds.bounds.BoundVerdict`): Its verdict.
        """
        self.graphs_checked += 1
        if verdict.flag:
            self.flagged.append({'graph6': witness, 'status': verdict.status,
                                 'slack': verdict.slack,
                                 'flag': verdict.flag})
            return
        status = verdict.status
        if status == bounds.NOT_APPLICABLE:
            self.not_applicable += 1
            return
        strict = bounds.predicate(verdict.predicate_id).strict
        if status == bounds.VIOLATED or \
                (strict and status == bounds.HOLDS_EQUALITY):
            self.violations += 1
            self.violation_cases.append(witness)
        elif status == bounds.HOLDS_EQUALITY:
            self.holds_equality += 1
            self.equality_cases.append(witness)
        else:
            self.holds_strict += 1
        if self.worst_slack is None or verdict.slack < self.worst_slack:
            self.worst_slack = verdict.slack
            self.worst_witness = witness

    def skip(self):
        """Count a graph outside the predicate's domain."""
        self.graphs_checked += 1
        self.not_applicable += 1

    def merge(self, other):
        """
        Fold the summary of a later chunk of the same stream into this one.

        Returns:
            :class:`VerificationSummary`: ``self``.
        """
        if (other.predicate_id, other.scope, other.n) != \
                (self._predicate_id, self._scope, self._n):
            raise ValueError('cannot merge {0!r} into {1!r}'.format(
                other, self))
        for field in ('graphs_checked', 'holds_strict', 'holds_equality',
                      'not_applicable', 'violations'):
            setattr(self, field, getattr(self, field) + getattr(other, field))
        self.equality_cases.extend(other.equality_cases)
        self.violation_cases.extend(other.violation_cases)
        self.flagged.extend(other.flagged)
        if other.worst_slack is not None and (
                self.worst_slack is None or
                other.worst_slack < self.worst_slack):
            self.worst_slack = other.worst_slack
            self.worst_witness = other.worst_witness
        self.elapsed += other.elapsed
        return self

    def to_dict(self):
        """Summary fields as a dict, without the timing."""
        return {
            'predicate_id': self._predicate_id,
            'scope': self._scope,
            'n': self._n,
            'graphs_checked': self.graphs_checked,
            'holds_strict': self.holds_strict,
            'holds_equality': self.holds_equality,
            'not_applicable': self.not_applicable,
            'violations': self.violations,
            'equality_cases': list(self.equality_cases),
            'violation_cases': list(self.violation_cases),
            'flagged': [dict(item) for item in self.flagged],
            'worst_slack': self.worst_slack,
            'worst_witness': self.worst_witness,
        }


def in_scope(scope, rep):
    """True if a graph with invariants ``rep`` belongs to ``scope``."""
    if scope == 'kappa2':
        return rep.edge_conn >= 2
    if scope == 'trees':
        return rep.is_tree
    return True


def check_chunk(task):
    """
    Check one chunk of graph6 certificates.

    This runs in worker processes, so it takes a single picklable argument.

    Parameters:
        task (tuple): ``(predicate_id, scope, n, certs)``.

    Returns:
        :class:`VerificationSummary`
    """
    predicate_id, scope, n, certs = task
    pred = bounds.predicate(predicate_id)
    summary = VerificationSummary(predicate_id, scope, n)
    for cert in certs:
        rep = invariant_report(decode_graph6(cert))
        if not in_scope(scope, rep):
            continue
        witness = cert.decode('ascii')
        try:
            verdict = pred.evaluate(rep)
        except BoundDomainError as err:
            logger.debug('%s outside domain of %s: %s', witness,
                         predicate_id, err)
            summary.skip()
            continue
        summary.add(witness, verdict)
    return summary


def _map(tasks, workers):
    if workers == 1:
        return map(check_chunk, tasks)
    executor = ProcessPoolExecutor(max_workers=workers)
    try:
        return list(executor.map(check_chunk, tasks))
    finally:
        executor.shutdown()


def verify_order(predicate_id, n, scope='all', workers=1,
                 stream=enumeration.stream, chunk_size=DEFAULT_CHUNK_SIZE):
    """
    Check ``predicate_id`` on every graph of order ``n`` in ``scope``.

    Parameters:
        predicate_id (str): Registered predicate identifier.
        n (int): Order.
        scope (str): One of :data:`SCOPES`.
        workers (int): Number of worker processes; 1 runs in-process.
        stream: Callable ``(kind, n)`` returning the graphs of a stream, such
            as :meth:`graphbounds.env.WorkbenchEnv.load_stream`.
        chunk_size (int): Graphs per worker task.

    Returns:
        :class:`VerificationSummary`
    """
    started = time.perf_counter()
    certs = [encode_graph6(g) for g in stream(SCOPE_STREAMS[scope], n)]
    tasks = [(predicate_id, scope, n, chunk)
             for chunk in chunked(certs, chunk_size)]
    summary = VerificationSummary(predicate_id, scope, n)
    for part in _map(tasks, workers):
        summary.merge(part)
    summary.elapsed = time.perf_counter() - started
    logger.info('%s n=%i %s: %i graphs, %i violations, %i equality, '
                '%i flagged in %.2fs', predicate_id, n, scope,
                summary.graphs_checked, summary.violations,
                summary.holds_equality, len(summary.flagged),
                summary.elapsed)
    return summary


def verify_range(predicate_id, n_min, n_max, scope='all', workers=None,
                 stream=enumeration.stream, chunk_size=DEFAULT_CHUNK_SIZE):
    """
    Run :func:`verify_order` for every order from ``n_min`` to ``n_max``.

    Parameters:
        workers (int): Worker processes; defaults to the number of CPUs.

    Returns:
        list: One :class:`VerificationSummary` per order.

    Raises:
        :class:`graphbounds.errors.UnknownPredicateError`: On an unknown
            predicate.
        :class:`graphbounds.errors.EnumerationCapError`: If ``n_max`` is
            beyond the enumeration cap of the scope's stream.
        ValueError: On an unknown scope or an empty range.
    """
    bounds.predicate(predicate_id)
    if scope not in SCOPES:
        raise ValueError('unknown scope {0!r}; expected one of {1}'.format(
            scope, ', '.join(SCOPES)))
    if n_min > n_max:
        raise ValueError('empty range: n_min={0} > n_max={1}'.format(
            n_min, n_max))
    enumeration.check_stream(SCOPE_STREAMS[scope], n_min)
    enumeration.check_stream(SCOPE_STREAMS[scope], n_max)
    workers = workers or os.cpu_count() or 1
    return [verify_order(predicate_id, n, scope, workers, stream, chunk_size)
            for n in range(n_min, n_max + 1)]


def exit_code(summaries):
    """
    Process exit status for a verification run: :data:`EXIT_VIOLATION` if any
    non-informational summary has violations, else :data:`EXIT_OK`.
    """
    for summary in summaries:
        if summary.violations and not summary.informational:
            return EXIT_VIOLATION
    return EXIT_OK

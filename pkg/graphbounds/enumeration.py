# coding: utf-8

"""
Canonical labeling and isomorph-free enumeration of small graphs.

Canonical forms come from partition refinement followed by a search over
individualizations: the vertices start partitioned by degree, cells are split
by neighbor counts into the other cells until the partition is equitable,
and the first non-singleton cell is then broken by trying each of its
vertices in turn. Every discrete partition reached this way is a vertex
ordering; the certificate is the graph6 encoding of the ordering whose
upper-triangle bit string is lexicographically smallest. Two vertices with
the same neighborhood (twins) are interchangeable, so only one of them is
tried per cell.

Connected graphs on ``n`` vertices are produced from those on ``n - 1`` by
joining a new vertex to every nonempty subset of the old ones; trees by
joining a new leaf to every old vertex. Candidates are deduplicated by
certificate and streamed in sorted certificate order.
"""

from functools import lru_cache
import logging

from graphbounds import logconf  # pylint: disable=unused-import
from graphbounds.errors import EnumerationCapError
from graphbounds.graph import Graph, decode_graph6, encode_graph6

logger = logging.getLogger(__name__)  # pylint: disable=invalid-name

CANONICAL_CAP = 12
CONNECTED_CAP = 9
TREE_CAP = 10

KINDS = ('connected', 'trees')


def _refine(rows, cells):
    """Split cells by neighbor counts until the partition is equitable."""
    while True:
        masks = []
        for cell in cells:
            mask = 0
            for v in cell:
                mask |= 1 << v
            masks.append(mask)
        refined = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            signature = {}
            for v in cell:
                row = rows[v]
                signature[v] = tuple((row & mask).bit_count() for mask in masks)
            keys = sorted(set(signature.values()))
            if len(keys) == 1:
                refined.append(cell)
                continue
            split = True
            for key in keys:
                refined.append([v for v in cell if signature[v] == key])
        if not split:
            return refined
        cells = refined


def _ordering_key(rows, order):
    """Upper-triangle bits of the relabeled graph, graph6 order, as an int."""
    key = 0
    n = len(order)
    for j in range(1, n):
        col = order[j]
        for i in range(j):
            key = (key << 1) | (rows[order[i]] >> col & 1)
    return key


def _are_twins(rows, u, v):
    return rows[u] & ~(1 << v) == rows[v] & ~(1 << u)


def _best_ordering(rows, cells, best):
    target = None
    for index, cell in enumerate(cells):
        if len(cell) > 1:
            target = index
            break
    if target is None:
        order = [cell[0] for cell in cells]
        key = _ordering_key(rows, order)
        if best is None or key < best[0]:
            return (key, order)
        return best

    cell = cells[target]
    tried = []
    for v in cell:
        if any(_are_twins(rows, u, v) for u in tried):
            continue
        tried.append(v)
        child = (cells[:target] + [[v], [w for w in cell if w != v]] +
                 cells[target + 1:])
        best = _best_ordering(rows, _refine(rows, child), best)
    return best


def canonical_order(g):
    """
    Canonical vertex ordering of ``g``.

    Returns:
        list: ``order[i]`` is the vertex that gets label ``i``.

    Raises:
        :class:`graphbounds.errors.EnumerationCapError`: If ``n > 12``.
    """
    if g.n > CANONICAL_CAP:
        raise EnumerationCapError('canonical_form', g.n, CANONICAL_CAP)
    rows = g.rows
    by_degree = {}
    for v in range(g.n):
        by_degree.setdefault(rows[v].bit_count(), []).append(v)
    cells = [by_degree[d] for d in sorted(by_degree)]
    _, order = _best_ordering(rows, _refine(rows, cells), None)
    return order


def canonical_graph(g):
    """Return ``g`` relabeled into its canonical labeling."""
    return g.relabel(canonical_order(g))


def canonical_form(g):
    """
    Isomorphism certificate of ``g``.

    Two graphs get equal certificates iff they are isomorphic.

    Returns:
        bytes: graph6 encoding of the canonically relabeled graph.
    """
    return encode_graph6(canonical_graph(g))


def _augment(parent, subsets):
    n = parent.n + 1
    new = n - 1
    for subset in subsets:
        rows = list(parent.rows) + [subset]
        rest = subset
        while rest:
            low = rest & -rest
            rows[low.bit_length() - 1] |= 1 << new
            rest ^= low
        yield Graph(n, rows)


def _check_order(operation, n, cap):
    if not isinstance(n, int) or not 1 <= n <= cap:
        raise EnumerationCapError(operation, n, cap)


def check_stream(kind, n):
    """
    Validate a stream request.

    Raises:
        ValueError: If ``kind`` is not one of :data:`KINDS`.
        :class:`graphbounds.errors.EnumerationCapError`: If ``n`` is out
            of range for ``kind``.
    """
    if kind == 'connected':
        _check_order('connected_graphs', n, CONNECTED_CAP)
    elif kind == 'trees':
        _check_order('trees', n, TREE_CAP)
    else:
        raise ValueError('unknown stream kind: {0}'.format(kind))


@lru_cache(maxsize=None)
def _certificates(kind, n):
    if n == 1:
        return (encode_graph6(Graph(1, [0])),)
    parents = _certificates(kind, n - 1)
    old = n - 1
    if kind == 'trees':
        subsets = [1 << v for v in range(old)]
    else:
        subsets = list(range(1, 1 << old))
    seen = set()
    candidates = 0
    for cert in parents:
        for child in _augment(decode_graph6(cert), subsets):
            candidates += 1
            seen.add(canonical_form(child))
    logger.info('%s n=%i: %i parents, %i candidates, %i classes',
                kind, n, len(parents), candidates, len(seen))
    return tuple(sorted(seen))


def certificates(kind, n):
    """
    Sorted certificates of every class of ``kind`` on ``n`` vertices.

    Parameters:
        kind (str): ``'connected'`` or ``'trees'``.
        n (int): Number of vertices.

    Returns:
        tuple: graph6 byte strings in sorted order.
    """
    check_stream(kind, n)
    return _certificates(kind, n)


def connected_graphs(n):
    """
    Every connected graph on ``n`` vertices, once per isomorphism class.

    Parameters:
        n (int): ``1 <= n <= 9``.

    Yields:
        :class:`graphbounds.graph.Graph`: Canonically labeled
        representatives in sorted certificate order.
    """
    for cert in certificates('connected', n):
        yield decode_graph6(cert)


def trees(n):
    """
    Every tree on ``n`` vertices, once per isomorphism class.

    Parameters:
        n (int): ``1 <= n <= 10``.

    Yields:
        :class:`graphbounds.graph.Graph`: In sorted certificate order.
    """
    for cert in certificates('trees', n):
        yield decode_graph6(cert)


def stream(kind, n):
    """Graphs of the named stream ``kind`` on ``n`` vertices."""
    if kind == 'trees':
        return trees(n)
    return connected_graphs(n)

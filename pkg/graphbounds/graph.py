# coding: utf-8

"""
Simple undirected graphs, graph6 interchange and the named graph families.

A :class:`Graph` stores one adjacency bit row per vertex: bit ``v`` of
``rows[u]`` is set iff ``u`` and ``v`` are adjacent. Vertices are
``0 .. n-1`` everywhere, including in files. Graphs are immutable; the
methods that "change" a graph return a new one.

The graph6 support follows the format description shipped with nauty
(`formats.txt`_), restricted to the one-byte size form (``n <= 62``).

.. _formats.txt: https://users.cecs.anu.edu.au/~bdm/data/formats.txt
"""

from collections import deque, namedtuple
import logging

from boltons.fileutils import atomic_save

from graphbounds import logconf  # pylint: disable=unused-import
from graphbounds.errors import FamilyError, Graph6Error, GraphError

logger = logging.getLogger(__name__)  # pylint: disable=invalid-name

MAX_ORDER = 62
UNREACHABLE = -1
GRAPH6_HEADER = b'>>graph6<<'

FAMILIES = ('path', 'cycle', 'complete', 'star', 'double_comet')


class Graph(object):
    """
    Undirected simple graph on the vertices ``0 .. n-1``.

    Parameters:
        n (int): Number of vertices, ``1 <= n <= 62``.
        rows (iterable): ``n`` integers; bit ``v`` of ``rows[u]`` marks the
            edge ``uv``. Must be symmetric with a zero diagonal.

    Raises:
        :class:`graphbounds.errors.GraphError`: If the order is out of range
            or the rows do not describe a simple undirected graph.
    """
    __slots__ = ('_n', '_rows')

    def __init__(self, n, rows):
        if not 1 <= n <= MAX_ORDER:
            raise GraphError('order {0} outside [1, {1}]'.format(n, MAX_ORDER))
        rows = tuple(int(row) for row in rows)
        if len(rows) != n:
            raise GraphError('expected {0} rows, got {1}'.format(n, len(rows)))
        full = (1 << n) - 1
        for u, row in enumerate(rows):
            if row & ~full:
                raise GraphError('row {0} names a vertex >= {1}'.format(u, n))
            if row >> u & 1:
                raise GraphError('self-loop at vertex {0}'.format(u))
            rest = row
            while rest:
                low = rest & -rest
                v = low.bit_length() - 1
                if not rows[v] >> u & 1:
                    raise GraphError('edge {0}-{1} is not symmetric'.format(u, v))
                rest ^= low
        self._n = n
        self._rows = rows

    @classmethod
    def _trusted(cls, n, rows):
        # Rows derived from an existing graph are already valid.
        graph = cls.__new__(cls)
        graph._n = n
        graph._rows = tuple(rows)
        return graph

    @property
    def n(self):
        """Number of vertices."""
        return self._n

    @property
    def rows(self):
        """Adjacency bit rows, one per vertex."""
        return self._rows

    def has_edge(self, u, v):
        return bool(self._rows[u] >> v & 1)

    def neighbors(self, v):
        """Neighbors of ``v`` in increasing order."""
        row = self._rows[v]
        return [u for u in range(self._n) if row >> u & 1]

    def degree(self, v):
        return self._rows[v].bit_count()

    def degrees(self):
        """Degree of every vertex, in vertex order."""
        return tuple(row.bit_count() for row in self._rows)

    @property
    def num_edges(self):
        return sum(self.degrees()) // 2

    def edges(self):
        """All edges as ``(u, v)`` pairs with ``u < v``, sorted."""
        ret = []
        for u, row in enumerate(self._rows):
            rest = row >> (u + 1)
            v = u + 1
            while rest:
                if rest & 1:
                    ret.append((u, v))
                rest >>= 1
                v += 1
        return ret

    def non_edges(self):
        """All vertex pairs ``(u, v)``, ``u < v``, that are not edges."""
        return [(u, v) for u in range(self._n) for v in range(u + 1, self._n)
                if not self._rows[u] >> v & 1]

    def with_edge(self, u, v):
        """Return a copy of the graph with the edge ``uv`` added."""
        if u == v:
            raise GraphError('self-loop at vertex {0}'.format(u))
        rows = list(self._rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph._trusted(self._n, rows)

    def without_edge(self, u, v):
        """Return a copy of the graph with the edge ``uv`` removed."""
        rows = list(self._rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph._trusted(self._n, rows)

    def relabel(self, order):
        """
        Return the graph relabeled so that old vertex ``order[i]`` becomes
        vertex ``i``.
        """
        if sorted(order) != list(range(self._n)):
            raise GraphError('relabeling is not a permutation of the vertices')
        position = [0] * self._n
        for new, old in enumerate(order):
            position[old] = new
        rows = [0] * self._n
        for new, old in enumerate(order):
            row = 0
            for w in self.neighbors(old):
                row |= 1 << position[w]
            rows[new] = row
        return Graph(self._n, rows)

    def __eq__(self, other):
        if isinstance(other, Graph):
            return self._n == other._n and self._rows == other._rows
        return NotImplemented

    def __hash__(self):
        return hash((self._n, self._rows))

    def __repr__(self):
        return 'Graph(n={0}, edges={1})'.format(self._n, self.edges())

    def __str__(self):
        return encode_graph6(self).decode('ascii')


FamilyKind = namedtuple('FamilyKind', ['kind', 'n', 's'])
FamilyKind.__new__.__defaults__ = (None,)
FamilyKind.__doc__ = """
Parameters of a named graph family.

``kind`` is one of :data:`FAMILIES`; ``s`` is the number of pendant leaves
on each end of a double comet and is ignored by the other kinds.
"""


def from_edges(n, edges):
    """
    Build a graph from an edge list.

    Duplicate pairs collapse to a single edge; ``(u, v)`` and ``(v, u)``
    name the same edge.

    Parameters:
        n (int): Number of vertices, ``1 <= n <= 62``.
        edges (iterable): Pairs of vertices in ``[0, n)``.

    Returns:
        :class:`Graph`

    Raises:
        :class:`graphbounds.errors.GraphError`: On an out-of-range endpoint,
            a self-loop, or an order outside ``[1, 62]``.
    """
    if not 1 <= n <= MAX_ORDER:
        raise GraphError('order {0} outside [1, {1}]'.format(n, MAX_ORDER))
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(
                'edge ({0}, {1}) has an endpoint outside [0, {2})'.format(
                    u, v, n))
        if u == v:
            raise GraphError('self-loop at vertex {0}'.format(u))
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def _path_edges(start, count):
    return [(start + i, start + i + 1) for i in range(count - 1)]


def family(params):
    """
    Build a member of a named family with its canonical vertex labeling.

    - ``path``: vertices ``0 .. n-1`` in traversal order.
    - ``cycle``: the path plus the edge ``(n-1, 0)``; needs ``n >= 3``.
    - ``complete``: every pair adjacent.
    - ``star``: center ``0`` joined to ``1 .. n-1``; needs ``n >= 2``.
    - ``double_comet``: a path on ``p = n - 2s`` vertices ``0 .. p-1`` with
      ``s`` pendant leaves on vertex ``0`` (labels ``p .. p+s-1``) and ``s``
      on vertex ``p-1`` (labels ``p+s .. n-1``); needs ``s >= 1`` and
      ``p >= 2``.

    Parameters:
        params (:class:`FamilyKind`): Family name and parameters.

    Returns:
        :class:`Graph`

    Raises:
        :class:`graphbounds.errors.FamilyError`: On invalid parameters.
    """
    kind, n, s = params.kind, params.n, params.s
    if kind not in FAMILIES:
        raise FamilyError(kind, n, s, 'unknown family')
    if not isinstance(n, int) or not 1 <= n <= MAX_ORDER:
        raise FamilyError(kind, n, s, 'n must be in [1, {0}]'.format(MAX_ORDER))

    if kind == 'path':
        return from_edges(n, _path_edges(0, n))
    if kind == 'cycle':
        if n < 3:
            raise FamilyError(kind, n, s, 'a cycle needs n >= 3')
        return from_edges(n, _path_edges(0, n) + [(n - 1, 0)])
    if kind == 'complete':
        return from_edges(n, [(u, v) for u in range(n)
                              for v in range(u + 1, n)])
    if kind == 'star':
        if n < 2:
            raise FamilyError(kind, n, s, 'a star needs n >= 2')
        return from_edges(n, [(0, v) for v in range(1, n)])

    if not isinstance(s, int) or s < 1:
        raise FamilyError(kind, n, s, 'a double comet needs s >= 1')
    p = n - 2 * s
    if p < 2:
        raise FamilyError(kind, n, s, 'a double comet needs n >= 2s + 2')
    edges = _path_edges(0, p)
    edges += [(0, p + i) for i in range(s)]
    edges += [(p - 1, p + s + i) for i in range(s)]
    return from_edges(n, edges)


def double_comet_sizes(n):
    """Valid leaves-per-side counts ``s`` of a double comet on ``n`` vertices."""
    return list(range(1, (n - 2) // 2 + 1))


def _graph6_length(n):
    return 1 + (n * (n - 1) // 2 + 5) // 6


def encode_graph6(g):
    """
    Encode a graph as graph6 bytes (no trailing newline).

    The size byte is ``n + 63``; the upper triangle follows column by
    column (``x(0,1), x(0,2), x(1,2), x(0,3), ...``), packed six bits per
    byte, most significant bit first, zero-padded, each byte plus 63.
    """
    n = g.n
    rows = g.rows
    out = bytearray([n + 63])
    acc = 0
    nbits = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | (rows[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def decode_graph6(data):
    """
    Decode graph6 bytes into a :class:`Graph`.

    Accepts ``bytes`` or ``str``; a single trailing newline is ignored.

    Raises:
        :class:`graphbounds.errors.Graph6Error`: On a byte outside
            ``[63, 126]``, an order outside ``[1, 62]``, or a bit vector of
            the wrong length.
    """
    if isinstance(data, str):
        try:
            data = data.encode('ascii')
        except UnicodeEncodeError:
            raise Graph6Error(data, 'non-ASCII character')
    text = data
    data = data.rstrip(b'\r\n')
    if not data:
        raise Graph6Error(text, 'empty input')
    for pos, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6Error(
                text, 'byte {0} at offset {1} outside [63, 126]'.format(
                    byte, pos))
    n = data[0] - 63
    if not 1 <= n <= MAX_ORDER:
        raise Graph6Error(text, 'order {0} outside [1, {1}]'.format(
            n, MAX_ORDER))
    expected = _graph6_length(n)
    if len(data) < expected:
        raise Graph6Error(text, 'truncated: expected {0} bytes, got {1}'.format(
            expected, len(data)))
    if len(data) > expected:
        raise Graph6Error(text, 'trailing data: expected {0} bytes, got {1}'.format(
            expected, len(data)))

    rows = [0] * n
    pos = 1
    shift = 6
    for j in range(1, n):
        for i in range(j):
            shift -= 1
            if (data[pos] - 63) >> shift & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            if shift == 0:
                pos += 1
                shift = 6
    return Graph(n, rows)


def read_graph6_file(path):
    """
    Read a newline-delimited graph6 file.

    Blank lines and a leading ``>>graph6<<`` header are skipped.

    Parameters:
        path (str): Path to the file.

    Yields:
        :class:`Graph`: One graph per line, in file order.

    Raises:
        :class:`graphbounds.errors.Graph6Error`: With the 1-based line
            number of the first malformed line.
    """
    with open(path, 'rb') as g6_file:
        for lineno, line in enumerate(g6_file, start=1):
            line = line.strip()
            if line.startswith(GRAPH6_HEADER):
                line = line[len(GRAPH6_HEADER):]
            if not line:
                continue
            try:
                yield decode_graph6(line)
            except Graph6Error as err:
                logger.error('Malformed graph6 on line %i of %s', lineno, path)
                raise Graph6Error(err.text, err.reason, lineno)


def write_graph6_file(graphs, path):
    """
    Write graphs as newline-delimited graph6, replacing ``path`` atomically.

    Returns:
        int: Number of graphs written.
    """
    count = 0
    with atomic_save(path, text_mode=False) as g6_file:
        for graph in graphs:
            g6_file.write(encode_graph6(graph) + b'\n')
            count += 1
    logger.debug('Wrote %i graphs to %s', count, path)
    return count


def bfs_distances(g, source):
    """
    Hop distances from ``source`` to every vertex.

    Returns:
        list: ``dist[v]`` is the length of a shortest ``source``-``v``
        path, or :data:`UNREACHABLE` (``-1``).
    """
    if not 0 <= source < g.n:
        raise GraphError('source {0} outside [0, {1})'.format(source, g.n))
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    rows = g.rows
    while queue:
        u = queue.popleft()
        for v in range(g.n):
            if rows[u] >> v & 1 and dist[v] == UNREACHABLE:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def reachable_mask(rows, source):
    """Bit mask of the vertices reachable from ``source``."""
    seen = 1 << source
    frontier = seen
    while frontier:
        grown = 0
        rest = frontier
        while rest:
            low = rest & -rest
            grown |= rows[low.bit_length() - 1]
            rest ^= low
        frontier = grown & ~seen
        seen |= frontier
    return seen


def is_connected(g):
    """True iff a search from vertex 0 reaches every vertex."""
    return reachable_mask(g.rows, 0) == (1 << g.n) - 1

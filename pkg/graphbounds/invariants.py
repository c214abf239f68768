# coding: utf-8

"""
Graph invariants: Randić index, Laplacian spectrum, algebraic
connectivity, edge connectivity, diameter and minimum degree.

The Laplacian spectrum is computed with the cyclic Jacobi rotation method,
so every eigenvalue comes from the same code path regardless of the numpy
build. Edge connectivity is a global minimum cut found with unit-capacity
augmenting paths (Edmonds–Karp on the graph with each edge as two arcs).
"""

from collections import deque, namedtuple
import logging
import math

import numpy as np

from graphbounds import logconf  # pylint: disable=unused-import
from graphbounds.errors import ConvergenceError, DisconnectedGraphError
from graphbounds.graph import UNREACHABLE, bfs_distances, is_connected

logger = logging.getLogger(__name__)  # pylint: disable=invalid-name

OFF_DIAGONAL_TOLERANCE = 1.0e-12
MAX_SWEEPS = 100
ZERO_TOLERANCE = 1.0e-8
DIAMETER_UNDEFINED = -1

Spectrum = namedtuple('Spectrum', ['eigenvalues', 'residual', 'sweeps'])
Spectrum.__doc__ = """
Laplacian eigenvalues in ascending order, with the largest
``|L v - lambda v|`` over the computed eigenpairs and the number of Jacobi
sweeps used.
"""

InvariantReport = namedtuple('InvariantReport', [
    'n', 'm', 'randic', 'alg_conn', 'diameter', 'min_degree', 'edge_conn',
    'degrees', 'is_regular', 'is_tree'])
InvariantReport.__doc__ = """
Every invariant the bounds refer to, for one graph.

``degrees`` is the degree sequence in ascending order, so no field depends
on the vertex labelling.

``alg_conn`` and ``edge_conn`` are 0 and ``diameter`` is
:data:`DIAMETER_UNDEFINED` for a disconnected graph.
"""


def randic_index(g):
    """
    Randić index: sum over edges ``uv`` of ``1/sqrt(d(u) d(v))``.

    Terms are added in lexicographic edge order with :func:`math.fsum`, so
    the result is correctly rounded and does not depend on vertex labels.
    Isolated vertices contribute nothing.
    """
    degrees = g.degrees()
    return math.fsum(1.0 / math.sqrt(degrees[u] * degrees[v])
                     for u, v in g.edges())


def laplacian_matrix(g):
    """``L = D - A`` as a float :class:`numpy.ndarray`."""
    n = g.n
    lap = np.zeros((n, n))
    for u, row in enumerate(g.rows):
        for v in range(n):
            if row >> v & 1:
                lap[u, v] = -1.0
        lap[u, u] = row.bit_count()
    return lap


def _off_norm(mat):
    off = mat - np.diag(np.diagonal(mat))
    return math.sqrt(float(np.sum(off * off)))


def jacobi_eigen(matrix, tol=OFF_DIAGONAL_TOLERANCE, max_sweeps=MAX_SWEEPS):
    """
    Eigen-decomposition of a real symmetric matrix by cyclic Jacobi sweeps.

    Each sweep rotates every pair ``(p, q)``, ``p < q``, in row order. The
    iteration stops once the off-diagonal Frobenius norm is below ``tol``.

    Parameters:
        matrix: Square symmetric array.
        tol (float): Off-diagonal Frobenius norm to reach.
        max_sweeps (int): Sweep cap.

    Returns:
        tuple: ``(eigenvalues, eigenvectors, sweeps)``; eigenvalues in
        ascending order, eigenvectors as matching columns.

    Raises:
        :class:`graphbounds.errors.ConvergenceError`: If the cap is reached.
    """
    a = np.array(matrix, dtype=float)
    n = a.shape[0]
    vecs = np.identity(n)
    sweeps = 0
    off = _off_norm(a)
    while off >= tol:
        if sweeps == max_sweeps:
            order = np.argsort(np.diagonal(a), kind='stable')
            residual = _residual(matrix, np.diagonal(a)[order], vecs[:, order])
            logger.error('Jacobi sweep cap reached: off-norm %.3e', off)
            raise ConvergenceError(sweeps, off, residual)
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                # Negligible next to both diagonal entries: drop it.
                if (abs(app) + 100.0 * abs(apq) == abs(app) and
                        abs(aqq) + 100.0 * abs(apq) == abs(aqq)):
                    a[p, q] = a[q, p] = 0.0
                    continue
                theta = (aqq - app) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = a[q, p] = 0.0
                vec_p = vecs[:, p].copy()
                vec_q = vecs[:, q].copy()
                vecs[:, p] = c * vec_p - s * vec_q
                vecs[:, q] = s * vec_p + c * vec_q
        off = _off_norm(a)
    order = np.argsort(np.diagonal(a), kind='stable')
    return np.diagonal(a)[order].copy(), vecs[:, order], sweeps


def _residual(matrix, values, vectors):
    if len(values) == 0:
        return 0.0
    diff = np.asarray(matrix, dtype=float) @ vectors - vectors * values
    return float(np.max(np.abs(diff)))


def laplacian_spectrum(g):
    """
    All Laplacian eigenvalues of ``g``, ascending.

    Returns:
        :class:`Spectrum`
    """
    lap = laplacian_matrix(g)
    values, vectors, sweeps = jacobi_eigen(lap)
    residual = _residual(lap, values, vectors)
    return Spectrum(tuple(float(x) for x in values), residual, sweeps)


def algebraic_connectivity(g, spectrum=None):
    """
    Second-smallest Laplacian eigenvalue, read off the spectrum.

    Zero up to rounding exactly when ``g`` is disconnected; 0.0 for a single
    vertex.
    """
    if g.n < 2:
        return 0.0
    if spectrum is None:
        spectrum = laplacian_spectrum(g)
    return spectrum.eigenvalues[1]


def _unit_max_flow(nbrs, n, source, sink, limit):
    # Each edge is a pair of unit arcs; flow is antisymmetric, so the
    # residual capacity of u->v is 1 - flow[u][v].
    flow = [[0] * n for _ in range(n)]
    total = 0
    while total < limit:
        parent = [-1] * n
        parent[source] = source
        queue = deque([source])
        while queue and parent[sink] == -1:
            u = queue.popleft()
            for v in nbrs[u]:
                if parent[v] == -1 and flow[u][v] < 1:
                    parent[v] = u
                    queue.append(v)
        if parent[sink] == -1:
            break
        v = sink
        while v != source:
            u = parent[v]
            flow[u][v] += 1
            flow[v][u] -= 1
            v = u
        total += 1
    return total


def edge_connectivity(g):
    """
    Minimum number of edges whose removal disconnects ``g``.

    Computed as the smallest maximum flow from vertex 0 to every other
    vertex. Returns 0 for a disconnected graph or a single vertex.
    """
    n = g.n
    if n < 2 or not is_connected(g):
        return 0
    nbrs = [g.neighbors(v) for v in range(n)]
    best = min(len(x) for x in nbrs)
    for sink in range(1, n):
        best = min(best, _unit_max_flow(nbrs, n, 0, sink, best))
        if best == 1:
            break
    return best


def diameter(g):
    """
    Largest hop distance between two vertices.

    Raises:
        :class:`graphbounds.errors.DisconnectedGraphError`: If ``g`` is
            disconnected.
    """
    longest = 0
    for v in range(g.n):
        dist = bfs_distances(g, v)
        if UNREACHABLE in dist:
            raise DisconnectedGraphError('diameter')
        longest = max(longest, max(dist))
    return longest


def min_degree(g):
    return min(g.degrees())


def invariant_report(g):
    """
    Compute every invariant of ``g`` with a single spectrum solve.

    Disconnected graphs are accepted: ``alg_conn`` and ``edge_conn`` are 0
    and ``diameter`` is :data:`DIAMETER_UNDEFINED`.

    Returns:
        :class:`InvariantReport`
    """
    degrees = tuple(sorted(g.degrees()))
    m = sum(degrees) // 2
    connected = is_connected(g)
    if connected:
        alg_conn = algebraic_connectivity(g)
        diam = diameter(g)
    else:
        alg_conn = 0.0
        diam = DIAMETER_UNDEFINED
    return InvariantReport(
        n=g.n,
        m=m,
        randic=randic_index(g),
        alg_conn=alg_conn,
        diameter=diam,
        min_degree=min(degrees),
        edge_conn=edge_connectivity(g),
        degrees=degrees,
        is_regular=len(set(degrees)) == 1,
        is_tree=connected and m == g.n - 1)

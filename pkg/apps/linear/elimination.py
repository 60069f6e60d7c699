"""
Gaussian elimination with first-nonzero pivoting.

All routines accept either a ``Matrix`` or a list of rows and never use
tolerances; every result is exact.
"""

import logging
from collections import namedtuple
from fractions import Fraction

from .matrix import Matrix

logger = logging.getLogger(__name__)


RankKernelImage = namedtuple('RankKernelImage', ['rank', 'kernel', 'image'])


def _rows(m):
    if isinstance(m, Matrix):
        return [list(row) for row in m.rows], m.ncols
    rows = [[Fraction(x) for x in row] for row in m]
    return rows, (len(rows[0]) if rows else 0)


def _reduce_in_place(rows, ncols, limit=None):
    """Reduced row echelon form on the first ``limit`` columns."""
    limit = ncols if limit is None else limit
    pivots = []
    r = 0
    for c in range(limit):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        lead = rows[r][c]
        if lead != 1:
            rows[r] = [x / lead for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def row_reduce(m):
    """
    Return ``(rref, pivots)`` where ``pivots`` lists the pivot columns.
    """
    rows, ncols = _rows(m)
    pivots = _reduce_in_place(rows, ncols)
    return Matrix(rows, ncols), tuple(pivots)


def rank(m):
    rows, ncols = _rows(m)
    return len(_reduce_in_place(rows, ncols))


def pivot_columns(m):
    return row_reduce(m)[1]


def kernel_basis(m):
    """Columns spanning the null space, one per free column of the rref."""
    rref, pivots = row_reduce(m)
    ncols = rref.ncols
    pivot_set = set(pivots)
    vectors = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vector = [Fraction(0)] * ncols
        vector[free] = Fraction(1)
        for r, p in enumerate(pivots):
            vector[p] = -rref.rows[r][free]
        vectors.append(vector)
    return Matrix.from_columns(vectors, ncols)


def rank_kernel_image(m):
    """
    Rank, kernel basis and image basis of ``m``.

    The image basis is the set of pivot columns of ``m`` itself, so it is
    expressed in the target basis and is independent.
    """
    if not isinstance(m, Matrix):
        m = Matrix(m)
    rref, pivots = row_reduce(m)
    kernel = kernel_basis(m)
    image = Matrix.from_columns([m.column(p) for p in pivots], m.nrows)
    logger.debug('rank_kernel_image %dx%d: rank %d', m.nrows, m.ncols, len(pivots))
    return RankKernelImage(len(pivots), kernel, image)


def solve(m, b):
    """
    One solution ``x`` of ``m x = b`` with free variables set to zero, or
    ``None`` when the system is inconsistent.
    """
    rows, ncols = _rows(m)
    augmented = [row + [Fraction(value)] for row, value in zip(rows, b)]
    pivots = _reduce_in_place(augmented, ncols + 1, limit=ncols)
    for row in augmented[len(pivots):]:
        if row[ncols]:
            return None
    x = [Fraction(0)] * ncols
    for r, p in enumerate(pivots):
        x[p] = augmented[r][ncols]
    return x


def solve_many(m, vectors):
    """Solve ``m x = b`` for several right-hand sides sharing one elimination."""
    rows, ncols = _rows(m)
    k = len(vectors)
    augmented = [
        row + [Fraction(v[i]) for v in vectors] for i, row in enumerate(rows)
    ]
    pivots = _reduce_in_place(augmented, ncols + k, limit=ncols)
    results = []
    for j in range(k):
        if any(row[ncols + j] for row in augmented[len(pivots):]):
            results.append(None)
            continue
        x = [Fraction(0)] * ncols
        for r, p in enumerate(pivots):
            x[p] = augmented[r][ncols + j]
        results.append(x)
    return results


def independent_columns(vectors, length):
    """Indices of a maximal independent prefix-greedy subset of ``vectors``."""
    if not vectors:
        return []
    return list(pivot_columns(Matrix.from_columns(vectors, length)))

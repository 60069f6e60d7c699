"""
Finite chain and cochain complexes over the rationals and their homology.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from apps.core.exceptions import DegreeMismatch, DegreeOutOfRange, NotACycle, SignConventionFailure

from .elimination import kernel_basis, row_reduce, solve
from .matrix import Matrix

logger = logging.getLogger(__name__)


CHAIN = -1
COCHAIN = 1


class ChainComplexQ:
    """
    Graded vector spaces with labelled bases and differentials.

    ``differentials[n]`` is the matrix of the map out of degree ``n``; it has
    one row per basis element of degree ``n + degree`` and one column per
    basis element of degree ``n``. ``degree`` is -1 for chain complexes and
    +1 for cochain complexes. Missing differentials are zero maps.
    """

    def __init__(self, bases, differentials=None, degree=CHAIN):
        if degree not in (CHAIN, COCHAIN):
            raise DegreeMismatch('Differential degree must be +1 or -1.')
        self.degree = degree
        self.bases = {n: list(labels) for n, labels in bases.items()}
        self.differentials = {}
        for n, m in (differentials or {}).items():
            if not isinstance(m, Matrix):
                m = Matrix(m, len(self.basis(n)))
            expected = (len(self.basis(n + degree)), len(self.basis(n)))
            if m.shape != expected:
                raise DegreeMismatch(
                    f'Differential out of degree {n} has shape {m.shape}, expected {expected}.',
                    witness={'degree': n},
                )
            self.differentials[n] = m
        self._check_square_zero()

    @property
    def degrees(self):
        return sorted(self.bases)

    def basis(self, n):
        return self.bases.get(n, [])

    def dimension(self, n):
        return len(self.basis(n))

    def differential(self, n):
        """Matrix of the differential leaving degree ``n``."""
        m = self.differentials.get(n)
        if m is None:
            return Matrix.zeros(self.dimension(n + self.degree), self.dimension(n))
        return m

    def incoming(self, n):
        """Matrix of the differential arriving in degree ``n``."""
        return self.differential(n - self.degree)

    def _check_square_zero(self):
        for n, m in self.differentials.items():
            after = self.differentials.get(n + self.degree)
            if after is None or not m.ncols or not after.nrows:
                continue
            if not (after @ m).is_zero():
                raise SignConventionFailure(
                    f'Differentials out of degrees {n} and {n + self.degree} do not compose to zero.',
                    witness={'degree': n},
                )

    def homology(self, n):
        return homology(self, n)


@dataclass
class Homology:
    """
    Homology in one degree: representatives are cycles independent modulo
    boundaries, stored as matrix columns in the degree's basis.
    """
    degree: int
    dimension: int
    representatives: Matrix
    boundaries: Matrix
    cycles: Matrix = field(repr=False)

    def coordinates(self, vector):
        """Coordinates of the class of a cycle in the representative basis."""
        vector = [Fraction(x) for x in vector]
        if not self.representatives.nrows:
            return []
        x = solve(self.boundaries.hstack(self.representatives), vector)
        if x is None:
            raise NotACycle('Vector is not a cycle.', witness={'degree': self.degree})
        return x[self.boundaries.ncols:]

    def is_boundary(self, vector):
        return not any(self.coordinates(vector))


def homology(c, n):
    """
    Homology of ``c`` at degree ``n``.

    Representatives are chosen by extending a basis of the boundaries to a
    basis of the cycles, keeping the first cycle columns that are
    independent of what came before.
    """
    if n not in c.bases:
        raise DegreeOutOfRange(f'Degree {n} is outside the complex.', witness={'degree': n})

    dim = c.dimension(n)
    cycles = kernel_basis(c.differential(n)) if dim else Matrix.zeros(0, 0)
    incoming = c.incoming(n)

    if dim == 0:
        empty = Matrix.zeros(0, 0)
        return Homology(n, 0, empty, empty, empty)

    _, boundary_pivots = row_reduce(incoming)
    boundaries = Matrix.from_columns([incoming.column(p) for p in boundary_pivots], dim)

    stacked = boundaries.hstack(cycles)
    _, pivots = row_reduce(stacked)
    offset = boundaries.ncols
    chosen = [p - offset for p in pivots if p >= offset]
    representatives = Matrix.from_columns([cycles.column(j) for j in chosen], dim)

    logger.debug(
        'homology degree %d: dim %d, cycles %d, boundaries %d',
        n, len(chosen), cycles.ncols, boundaries.ncols,
    )
    return Homology(n, len(chosen), representatives, boundaries, cycles)


def betti_numbers(c):
    return {n: homology(c, n).dimension for n in c.degrees}

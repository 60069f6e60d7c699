"""
Immutable dense matrices over exact rationals.
"""

from fractions import Fraction

from apps.core.exceptions import DegreeMismatch
from apps.core.validators import format_rational


def _scalar(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return Fraction(value.replace(' ', ''))
    return Fraction(value)


class Matrix:
    """
    Rectangular grid of ``Fraction`` entries.

    Column vectors are the unit of exchange with the rest of the library:
    kernels, images and homology representatives are matrices whose
    columns are the basis vectors.
    """

    __slots__ = ('rows', 'nrows', 'ncols')

    def __init__(self, rows, ncols=None):
        rows = tuple(tuple(_scalar(x) for x in row) for row in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != ncols:
                raise DegreeMismatch('Matrix rows must all have the same length.')
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def zeros(cls, nrows, ncols):
        return cls([[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns, nrows):
        columns = [list(col) for col in columns]
        return cls([[col[i] for col in columns] for i in range(nrows)], len(columns))

    @property
    def shape(self):
        return self.nrows, self.ncols

    def __getitem__(self, index):
        i, j = index
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.shape, self.rows))

    def __repr__(self):
        return f'Matrix({self.nrows}x{self.ncols})'

    def column(self, j):
        return [row[j] for row in self.rows]

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self):
        return Matrix.from_columns(self.rows, self.ncols)

    @property
    def T(self):
        return self.transpose()

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise DegreeMismatch(
                f'Cannot compose {self.nrows}x{self.ncols} with {other.nrows}x{other.ncols}.'
            )
        other_cols = other.columns()
        return Matrix(
            [[sum((a * b for a, b in zip(row, col) if a and b), Fraction(0))
              for col in other_cols] for row in self.rows],
            other.ncols,
        )

    def __add__(self, other):
        if self.shape != other.shape:
            raise DegreeMismatch('Matrix shapes differ.')
        return Matrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
            self.ncols,
        )

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, coeff):
        coeff = _scalar(coeff)
        return Matrix([[coeff * a for a in row] for row in self.rows], self.ncols)

    def apply(self, vector):
        """Multiply a column vector given as a sequence."""
        if len(vector) != self.ncols:
            raise DegreeMismatch('Vector length does not match matrix columns.')
        return [
            sum((a * b for a, b in zip(row, vector) if a and b), Fraction(0))
            for row in self.rows
        ]

    def hstack(self, other):
        if self.nrows != other.nrows:
            raise DegreeMismatch('Row counts differ.')
        return Matrix(
            [r + s for r, s in zip(self.rows, other.rows)], self.ncols + other.ncols
        )

    def vstack(self, other):
        if self.ncols != other.ncols:
            raise DegreeMismatch('Column counts differ.')
        return Matrix(self.rows + other.rows, self.ncols)

    def is_zero(self):
        return not any(a for row in self.rows for a in row)

    def to_strings(self):
        return [[format_rational(a) for a in row] for row in self.rows]

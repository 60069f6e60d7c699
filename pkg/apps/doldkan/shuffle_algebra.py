"""
The cosimplicial algebra D(A) of a graded-commutative dg ring.

The levelwise product D(A) (x) D(A) -> D(A) is the map of cosimplicial
modules whose normalization is the shuffle map followed by the ring
product:

    x * y = sum over (p, q)-shuffles (mu, nu) of
            sign(mu, nu) pi(s^nu x) pi(s^mu y)

with pi the projection onto the normalized summand. On a general level it
is computed by decomposing the levelwise tensor square into injections
applied to normalized elements.
"""

import logging
from fractions import Fraction
from itertools import combinations

from apps.core.exceptions import SignConventionFailure
from apps.linear.elimination import solve_many
from apps.linear.matrix import Matrix
from apps.linear.vectors import add_into, add_term, to_dense

from .cosimplicial import CosimplicialModule, Denormalization, normalized_vectors
from .shuffles import omitting, shuffles

logger = logging.getLogger(__name__)


class TensorSquare(CosimplicialModule):
    """Levelwise tensor product, structure maps acting diagonally."""

    def __init__(self, left, right, top):
        self.left = left
        self.right = right
        self.top = top
        self._basis = {}

    def basis(self, n):
        cached = self._basis.get(n)
        if cached is None:
            cached = [(a, b) for a in self.left.basis(n) for b in self.right.basis(n)]
            self._basis[n] = cached
        return cached

    def apply(self, theta, target, key):
        a, b = key
        result = {}
        right = self.right.apply(theta, target, b)
        for a2, c in self.left.apply(theta, target, a).items():
            for b2, e in right.items():
                add_term(result, (a2, b2), c * e)
        return result


class ShuffleAlgebra(Denormalization):
    """D(A) with its shuffle product, levels ``0..top``."""

    def __init__(self, ring, top=None):
        top = ring.top_degree + 2 if top is None else top
        bases = {m: ring.indices_in_degree(m) for m in range(ring.top_degree + 1)}
        super().__init__(bases, self._ring_d, top, dict(enumerate(ring.labels)))
        self.ring = ring
        self.square = TensorSquare(self, self, top)
        self._normal = {}
        self._levels = {}
        self._products = {}

    def __repr__(self):
        return f'ShuffleAlgebra({self.ring.name}, top={self.top})'

    def _ring_d(self, i):
        return self.ring.differential.get(i, {})

    def unit(self, n):
        return {(tuple(range(1, n + 1)), self.ring.unit_index): Fraction(1)}

    def lift(self, vector):
        """Ring element placed in the normalized summand of its degree."""
        return {((), i): Fraction(c) for i, c in vector.items()}

    def project(self, x):
        """Ring element of the normalized summand of ``x``."""
        result = {}
        for (missing, i), c in x.items():
            if not missing:
                add_term(result, i, c)
        return result

    def _descend(self, key, n, indices):
        x = {key: Fraction(1)}
        for i in reversed(indices):
            x = self.codegeneracy(i, n, x)
            n -= 1
            if not x:
                break
        return x

    def normalized_product(self, m, w):
        """Shuffle product of a normalized element ``w`` of the tensor square at level m."""
        result = {}
        for p in range(m + 1):
            for mu, nu, sign in shuffles(p, m - p):
                for (a, b), c in w.items():
                    x = self.project(self._descend(a, m, nu))
                    if not x:
                        continue
                    y = self.project(self._descend(b, m, mu))
                    if y:
                        add_into(result, self.ring.multiply(x, y), sign * c)
        return result

    def _square_normal(self, m):
        cached = self._normal.get(m)
        if cached is None:
            cached = normalized_vectors(self.square, m)
            self._normal[m] = cached
        return cached

    def _level(self, n):
        """Columns spanning the tensor square at level n, with their products."""
        cached = self._levels.get(n)
        if cached is not None:
            return cached
        columns, images = [], []
        basis = self.square.basis(n)
        for m in range(n, -1, -1):
            normal = self._square_normal(m)
            for missing in combinations(range(1, n + 1), n - m):
                theta = omitting(missing, n)
                for w in normal:
                    columns.append(to_dense(self.square.operate(theta, n, w), basis))
                    images.append({(missing, i): c for i, c in self.normalized_product(m, w).items()})
        if len(columns) != len(basis):
            raise SignConventionFailure(
                'Tensor square does not decompose into normalized pieces.',
                witness={'level': n, 'pieces': len(columns), 'dimension': len(basis)},
            )
        units = [[Fraction(int(r == k)) for r in range(len(basis))] for k in range(len(basis))]
        solutions = solve_many(Matrix.from_columns(columns, len(basis)), units)
        if any(x is None for x in solutions):
            raise SignConventionFailure(
                'Normalized pieces do not span the tensor square.',
                witness={'level': n},
            )
        coordinates = {
            pair: {col: c for col, c in enumerate(x) if c}
            for pair, x in zip(basis, solutions)
        }
        cached = (coordinates, images)
        self._levels[n] = cached
        logger.debug('Shuffle product table at level %d: %d pieces', n, len(columns))
        return cached

    def multiply_basis(self, n, a, b):
        key = (n, a, b)
        cached = self._products.get(key)
        if cached is None:
            coordinates, images = self._level(n)
            cached = {}
            for col, c in coordinates[(a, b)].items():
                add_into(cached, images[col], c)
            self._products[key] = cached
        return cached

    def multiply(self, n, x, y):
        """Product of two elements of level n."""
        result = {}
        for a, c in x.items():
            for b, e in y.items():
                add_into(result, self.multiply_basis(n, a, b), c * e)
        return result

    def cup(self, p, x, q, y):
        """
        Front p-face of x times back q-face of y at level p + q, read in the
        normalized summand; recovers the ring product.
        """
        n = p + q
        front = {(tuple(range(p + 1, n + 1)), i): Fraction(c) for i, c in x.items()}
        back = self.operate(tuple(range(p, n + 1)), n, self.lift(y))
        return self.project(self.multiply(n, front, back))


def shuffle_algebra(ring, top=None):
    algebra = ShuffleAlgebra(ring, top)
    logger.info('Shuffle algebra of %s up to level %d', ring.name, algebra.top)
    return algebra

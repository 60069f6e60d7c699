"""
Cosimplicial vector spaces, the Dold-Kan denormalization of a cochain
complex and normalization back to cochains.

A cosimplicial module acts on basis keys through monotone maps: a map
theta: [n] -> [k] sends a level-n key to a combination of level-k keys.
Cofaces and codegeneracies are the elementary cases.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from apps.core.exceptions import SignConventionFailure, SimplicialIdentityViolation
from apps.linear.complexes import COCHAIN, ChainComplexQ
from apps.linear.elimination import kernel_basis, solve
from apps.linear.matrix import Matrix
from apps.linear.vectors import add_into, add_term, from_dense, to_dense

from .shuffles import codegeneracy, coface, compose, omitting

logger = logging.getLogger(__name__)


def _sign(n):
    return -1 if n % 2 else 1


class CosimplicialModule:
    """Levels ``0..top``; subclasses provide ``basis`` and ``apply``."""

    top = 0

    def basis(self, n):
        raise NotImplementedError

    def apply(self, theta, target, key):
        """Image of a basis key under theta: [len(theta) - 1] -> [target]."""
        raise NotImplementedError

    def label(self, key):
        return str(key)

    def dimension(self, n):
        return len(self.basis(n))

    def operate(self, theta, target, x):
        result = {}
        for key, c in x.items():
            add_into(result, self.apply(theta, target, key), c)
        return result

    def coface(self, i, n, x):
        return self.operate(coface(i, n), n + 1, x)

    def codegeneracy(self, i, n, x):
        return self.operate(codegeneracy(i, n), n - 1, x)

    def differential(self, n, x):
        """sum (-1)^i d^i from level n to level n + 1."""
        result = {}
        for i in range(n + 2):
            add_into(result, self.coface(i, n, x), _sign(i))
        return result

    def check_identities(self, top=None):
        """Cosimplicial identities on every basis key up to ``top``."""
        top = self.top if top is None else top
        for n in range(top + 1):
            for key in self.basis(n):
                x = {key: Fraction(1)}
                for j in range(n + 3):
                    for i in range(j):
                        if n + 2 <= top:
                            self._expect(
                                self.coface(j, n + 1, self.coface(i, n, x)),
                                self.coface(i, n + 1, self.coface(j - 1, n, x)),
                                'coface', n, key, (i, j),
                            )
                for j in range(n - 1):
                    for i in range(j + 1):
                        self._expect(
                            self.codegeneracy(j, n - 1, self.codegeneracy(i, n, x)),
                            self.codegeneracy(i, n - 1, self.codegeneracy(j + 1, n, x)),
                            'codegeneracy', n, key, (i, j),
                        )
                if n + 1 > top:
                    continue
                for j in range(n + 1):
                    for i in range(n + 2):
                        lifted = self.codegeneracy(j, n + 1, self.coface(i, n, x))
                        if i < j:
                            expected = self.coface(i, n - 1, self.codegeneracy(j - 1, n, x))
                        elif i in (j, j + 1):
                            expected = x
                        else:
                            expected = self.coface(i - 1, n - 1, self.codegeneracy(j, n, x))
                        self._expect(lifted, expected, 'mixed', n, key, (i, j))
        logger.debug('Cosimplicial identities hold up to level %d', top)

    def _expect(self, left, right, kind, n, key, indices):
        if left != right:
            raise SimplicialIdentityViolation(
                f'Cosimplicial {kind} identity fails at level {n}.',
                witness={'key': self.label(key), 'indices': list(indices)},
            )


class Denormalization(CosimplicialModule):
    """
    D(V) for a cochain complex V with ``bases[m]`` and ``d(key)``.

    Level-n keys are ``(missing, key)``: the summand of an injection
    [m] -> [n] fixing 0 whose image misses ``missing``, a subset of
    {1, ..., n} of size n - m. Elements of V are normalized (killed by
    every codegeneracy) and satisfy dv = sum (-1)^i d^i v.
    """

    def __init__(self, bases, d, top, labels=None):
        self.bases = {m: list(keys) for m, keys in bases.items() if keys}
        self._d = d
        self.top = top
        self._labels = labels or {}
        self._basis = {}

    def degree_keys(self, m):
        return self.bases.get(m, [])

    def basis(self, n):
        cached = self._basis.get(n)
        if cached is None:
            cached = []
            for m in range(n, -1, -1):
                for missing in combinations(range(1, n + 1), n - m):
                    cached.extend((missing, key) for key in self.degree_keys(m))
            self._basis[n] = cached
        return cached

    def label(self, key):
        missing, inner = key
        text = self._labels.get(inner, str(inner))
        if not missing:
            return text
        return ''.join(f'd{j}' for j in reversed(missing)) + f'({text})'

    def apply(self, theta, target, key):
        missing, inner = key
        n = len(theta) - 1
        image = compose(theta, omitting(missing, n))
        if len(set(image)) < len(image):
            return {}
        skipped = omitting(image, target)
        if image[0] == 0:
            return {(skipped, inner): Fraction(1)}
        # the summand is d^0 applied to an injection fixing 0
        rest = skipped[1:]
        spread = omitting(rest, target)
        result = {}
        for other, c in self._d(inner).items():
            add_term(result, (rest, other), c)
        for i in range(1, len(spread)):
            add_term(result, (tuple(sorted(rest + (spread[i],))), inner), -_sign(i))
        return result


def denormalize(complex_, top=None):
    """Dold-Kan denormalization of a cochain complex, up to level ``top``."""
    degrees = [n for n in complex_.degrees if complex_.dimension(n)]
    if top is None:
        top = (max(degrees) if degrees else 0) + 2
    bases = {m: [(m, k) for k in range(complex_.dimension(m))] for m in degrees}
    labels = {(m, k): label for m in degrees for k, label in enumerate(complex_.basis(m))}

    def d(key):
        m, k = key
        matrix = complex_.differential(m)
        return {(m + 1, r): matrix[r, k] for r in range(matrix.nrows) if matrix[r, k]}

    module = Denormalization(bases, d, top, labels)
    logger.debug('Denormalized complex up to level %d: dims %s',
                 top, [module.dimension(n) for n in range(top + 1)])
    return module


@dataclass
class Normalization:
    complex: ChainComplexQ
    vectors: dict = field(default_factory=dict)

    def inclusion(self, n):
        """Normalized basis of level n as sparse vectors."""
        return self.vectors[n]


def normalized_vectors(module, n):
    """Basis of the common kernel of the codegeneracies out of level n."""
    basis = module.basis(n)
    if n == 0 or not basis:
        return [{key: Fraction(1)} for key in basis]
    lower = module.basis(n - 1)
    rows = []
    for i in range(n):
        images = [to_dense(module.codegeneracy(i, n, {key: Fraction(1)}), lower) for key in basis]
        rows.extend([image[r] for image in images] for r in range(len(lower)))
    kernel = kernel_basis(Matrix(rows, len(basis)))
    return [from_dense(column, basis) for column in kernel.columns()]


def normalize(module, top=None):
    """
    Normalized cochains: the common kernel of the codegeneracies with
    d = sum (-1)^i d^i, for levels below ``top``.
    """
    top = module.top if top is None else top
    vectors = {n: normalized_vectors(module, n) for n in range(top + 1)}

    bases = {}
    differentials = {}
    for n in range(top + 1):
        bases[n] = [_vector_label(module, v, n, k) for k, v in enumerate(vectors[n])]
    for n in range(top):
        target = module.basis(n + 1)
        columns = [to_dense(v, target) for v in vectors[n + 1]]
        matrix = Matrix.from_columns(columns, len(target))
        images = []
        for v in vectors[n]:
            x = solve(matrix, to_dense(module.differential(n, v), target))
            if x is None:
                raise SignConventionFailure(
                    'Differential leaves the normalized cochains.',
                    witness={'level': n},
                )
            images.append(x)
        differentials[n] = Matrix.from_columns(images, len(vectors[n + 1]))
    return Normalization(ChainComplexQ(bases, differentials, degree=COCHAIN), vectors)


def _vector_label(module, vector, n, position):
    if len(vector) == 1:
        (key, c), = vector.items()
        if c == 1:
            return module.label(key)
    return f'n{n}_{position}'

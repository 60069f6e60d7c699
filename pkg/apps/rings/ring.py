"""
Finite-dimensional graded-commutative rings given by a basis multiplication
table, optionally with a differential of degree +1.
"""

import logging
from fractions import Fraction
from itertools import product as cartesian

from apps.core.exceptions import (
    DegreeMismatch, NotAssociative, NotConnected, NotGradedCommutative,
    SignConventionFailure, UnitMissing, UnknownBasisLabel,
)
from apps.linear.elimination import kernel_basis
from apps.linear.matrix import Matrix
from apps.linear.vectors import add_into, add_term, combination, sub

logger = logging.getLogger(__name__)


def koszul(p, q):
    """Sign (-1)^(p*q)."""
    return -1 if (p * q) % 2 else 1


class GradedRing:
    """
    Basis ``labels`` with ``degrees``; ``products[(i, j)]`` and
    ``differential[i]`` are sparse combinations over basis indices.

    Products of the unit with anything are implied and need not be listed.
    Rings computed as cohomology keep their cocycle ``representatives``.
    """

    representatives = None

    def __init__(self, labels, degrees, unit, products=None, differential=None, name=None):
        self.labels = list(labels)
        self.degrees = list(degrees)
        self.name = name
        self._index = {label: i for i, label in enumerate(self.labels)}
        if unit not in self._index:
            raise UnitMissing(f'Unit {unit!r} is not a basis label.', witness=[unit])
        self.unit = unit
        self.unit_index = self._index[unit]
        self.products = {
            key: dict(value) for key, value in (products or {}).items() if value
        }
        self.differential = {
            key: dict(value) for key, value in (differential or {}).items() if value
        }
        self._fill_unit_products()

    def _fill_unit_products(self):
        u = self.unit_index
        for i in range(len(self.labels)):
            for key in ((u, i), (i, u)):
                expected = {i: Fraction(1)}
                if key in self.products and self.products[key] != expected:
                    raise UnitMissing(
                        'Declared unit is not a two-sided identity.',
                        witness=[self.labels[key[0]], self.labels[key[1]]],
                    )
                self.products[key] = expected

    def __repr__(self):
        return f'GradedRing({self.name or ""}, dim={len(self.labels)})'

    def __len__(self):
        return len(self.labels)

    @property
    def is_dg(self):
        return bool(self.differential)

    @property
    def top_degree(self):
        return max(self.degrees) if self.degrees else 0

    def index(self, label):
        try:
            return self._index[label]
        except KeyError:
            raise UnknownBasisLabel(f'Unknown basis label {label!r}.', witness=[label])

    def degree(self, label):
        return self.degrees[self.index(label)]

    def indices_in_degree(self, n):
        return [i for i, d in enumerate(self.degrees) if d == n]

    def reduced_indices(self, min_degree=1):
        """Basis indices other than the unit, of degree at least ``min_degree``."""
        return [
            i for i, d in enumerate(self.degrees)
            if i != self.unit_index and d >= min_degree
        ]

    def dimensions(self):
        return [len(self.indices_in_degree(n)) for n in range(self.top_degree + 1)]

    def as_vector(self, element):
        """Index combination from a label or a ``{label: coefficient}`` mapping."""
        if isinstance(element, str):
            return {self.index(element): Fraction(1)}
        return combination((self.index(label), Fraction(c)) for label, c in element.items())

    def labelled(self, vector):
        return {self.labels[i]: c for i, c in sorted(vector.items())}

    def multiply_basis(self, i, j):
        return self.products.get((i, j), {})

    def multiply(self, u, v):
        result = {}
        for i, a in u.items():
            for j, b in v.items():
                add_into(result, self.multiply_basis(i, j), a * b)
        return result

    def d(self, u):
        result = {}
        for i, a in u.items():
            add_into(result, self.differential.get(i, {}), a)
        return result

    def differential_matrix(self, n):
        """Matrix of d from degree ``n`` to degree ``n + 1``."""
        source = self.indices_in_degree(n)
        target = self.indices_in_degree(n + 1)
        return Matrix(
            [[self.differential.get(j, {}).get(i, 0) for j in source] for i in target],
            len(source),
        )

    def betti(self):
        if not self.is_dg:
            return self.dimensions()
        from .cohomology import ring_cohomology

        return ring_cohomology(self).dimensions()

    def validate(self):
        validate_ring(self)
        return self


def _check_degrees(ring):
    for (i, j), value in ring.products.items():
        for k in value:
            if ring.degrees[k] != ring.degrees[i] + ring.degrees[j]:
                raise DegreeMismatch(
                    'Product does not respect degree.',
                    witness=[ring.labels[i], ring.labels[j], ring.labels[k]],
                )
    for i, value in ring.differential.items():
        for k in value:
            if ring.degrees[k] != ring.degrees[i] + 1:
                raise DegreeMismatch(
                    'Differential must raise degree by one.',
                    witness=[ring.labels[i], ring.labels[k]],
                )


def _check_commutative(ring):
    n = len(ring.labels)
    for i in range(n):
        for j in range(i, n):
            sign = koszul(ring.degrees[i], ring.degrees[j])
            ab = ring.multiply_basis(i, j)
            ba = ring.multiply_basis(j, i)
            if sub(ab, {k: sign * c for k, c in ba.items()}):
                logger.warning('Graded commutativity fails on (%s, %s)', ring.labels[i], ring.labels[j])
                raise NotGradedCommutative(
                    f'{ring.labels[i]}*{ring.labels[j]} != (-1)^(|a||b|) {ring.labels[j]}*{ring.labels[i]}',
                    witness=[ring.labels[i], ring.labels[j]],
                )


def _check_associative(ring):
    n = len(ring.labels)
    nonunit = [i for i in range(n) if i != ring.unit_index]
    top = ring.top_degree
    for i, j, k in cartesian(nonunit, repeat=3):
        if ring.degrees[i] + ring.degrees[j] + ring.degrees[k] > top:
            continue
        left = ring.multiply(ring.multiply_basis(i, j), {k: Fraction(1)})
        right = ring.multiply({i: Fraction(1)}, ring.multiply_basis(j, k))
        if sub(left, right):
            logger.warning('Associativity fails on (%s, %s, %s)', *(ring.labels[x] for x in (i, j, k)))
            raise NotAssociative(
                'Product is not associative.',
                witness=[ring.labels[i], ring.labels[j], ring.labels[k]],
            )


def _check_differential(ring):
    if not ring.is_dg:
        return
    n = len(ring.labels)
    for i in range(n):
        dd = ring.d(ring.d({i: Fraction(1)}))
        if dd:
            raise SignConventionFailure('Ring differential does not square to zero.', witness=[ring.labels[i]])
    for i in range(n):
        for j in range(n):
            left = ring.d(ring.multiply_basis(i, j))
            right = ring.multiply(ring.d({i: Fraction(1)}), {j: Fraction(1)})
            add_into(right, ring.multiply({i: Fraction(1)}, ring.d({j: Fraction(1)})), koszul(ring.degrees[i], 1))
            if sub(left, right):
                raise SignConventionFailure(
                    'Ring differential violates the Leibniz rule.',
                    witness=[ring.labels[i], ring.labels[j]],
                )


def _check_connected(ring):
    if any(d < 0 for d in ring.degrees):
        raise DegreeMismatch('Ring degrees must be non-negative.')
    if ring.degrees[ring.unit_index] != 0:
        raise UnitMissing('Unit must have degree 0.', witness=[ring.unit])
    zero = ring.indices_in_degree(0)
    closed = kernel_basis(ring.differential_matrix(0)).ncols if ring.is_dg else len(zero)
    if closed != 1:
        raise NotConnected(
            f'Degree-0 cohomology has dimension {closed}.',
            witness=[ring.labels[i] for i in zero],
        )


def validate_ring(ring):
    """
    Check the unit, degrees, graded commutativity, associativity, the
    differential and connectedness. Raises the first violated axiom with a
    witness.
    """
    _check_connected(ring)
    _check_degrees(ring)
    _check_commutative(ring)
    _check_associative(ring)
    _check_differential(ring)
    logger.debug('Validated %r', ring)


def cup(ring, a, b):
    """
    Product of two elements given as labels or ``{label: coefficient}``
    mappings. Returns a ``{label: Fraction}`` mapping.
    """
    return ring.labelled(ring.multiply(ring.as_vector(a), ring.as_vector(b)))


def build_ring(basis, unit, products=(), differential=(), name=None):
    """
    Convenience constructor from label-level data.

    ``basis`` is a sequence of ``(label, degree)``; ``products`` a sequence
    of ``(left, right, {label: coeff})``; ``differential`` a sequence of
    ``(source, {label: coeff})``.
    """
    labels = [label for label, _ in basis]
    degrees = [degree for _, degree in basis]
    index = {label: i for i, label in enumerate(labels)}

    def lookup(label):
        if label not in index:
            raise UnknownBasisLabel(f'Unknown basis label {label!r}.', witness=[label])
        return index[label]

    table = {}
    for left, right, value in products:
        entry = {}
        for label, coeff in value.items():
            add_term(entry, lookup(label), Fraction(coeff))
        table[(lookup(left), lookup(right))] = entry
    d = {}
    for source, value in differential:
        entry = {}
        for label, coeff in value.items():
            add_term(entry, lookup(label), Fraction(coeff))
        d[lookup(source)] = entry
    return GradedRing(labels, degrees, unit, table, d, name=name)

"""
Finite groups and finite simplicial groups.

Group elements are indices into ``labels``. A simplicial group exposes its
levels elementwise; the constant and nerve constructions cover the cases
the torsor enumeration needs.
"""

import logging
from functools import cached_property
from itertools import product

from sympy.combinatorics import Permutation, PermutationGroup

from apps.core.exceptions import (
    NotAssociative,
    ParseError,
    PropertyCheckFailed,
    SimplicialIdentityViolation,
    UnitMissing,
)

logger = logging.getLogger(__name__)


class FiniteGroup:
    """A finite group given by its multiplication table."""

    def __init__(self, labels, table, generators=None, name=None, characters=None):
        self.labels = list(labels)
        self.table = [list(row) for row in table]
        self.name = name
        self.characters = characters
        self._index = {label: i for i, label in enumerate(self.labels)}
        self.identity = self._find_identity()
        self.generators = list(generators) if generators is not None else self._greedy_generators()

    def __repr__(self):
        return f'FiniteGroup({self.name or "?"}, order={len(self)})'

    def __len__(self):
        return len(self.labels)

    @property
    def elements(self):
        return range(len(self))

    def index(self, label):
        try:
            return self._index[label]
        except KeyError:
            raise ParseError(f'Unknown group element {label!r}.', witness=[label])

    def label(self, g):
        return self.labels[g]

    def multiply(self, a, b):
        return self.table[a][b]

    @cached_property
    def inverses(self):
        found = {}
        for a in self.elements:
            for b in self.elements:
                if self.table[a][b] == self.identity:
                    found[a] = b
                    break
            else:
                raise ParseError(
                    f'Group element {self.labels[a]!r} has no inverse.',
                    witness=[self.labels[a]],
                )
        return found

    def inverse(self, a):
        return self.inverses[a]

    def conjugate(self, g, a):
        """g a g^-1."""
        return self.multiply(self.multiply(g, a), self.inverse(g))

    def power(self, a, exponent):
        result, base = self.identity, a if exponent >= 0 else self.inverse(a)
        for _ in range(abs(exponent)):
            result = self.multiply(result, base)
        return result

    def evaluate(self, word, values):
        """Value of ``[(generator, exponent), ...]`` under ``values``."""
        result = self.identity
        for gen, exponent in word:
            result = self.multiply(result, self.power(values[gen], exponent))
        return result

    def subgroup(self, elements):
        """Subgroup generated by ``elements``."""
        found = {self.identity}
        frontier = [self.identity]
        while frontier:
            a = frontier.pop()
            for g in elements:
                b = self.multiply(a, g)
                if b not in found:
                    found.add(b)
                    frontier.append(b)
        return found

    @cached_property
    def conjugacy_classes(self):
        classes, seen = [], set()
        for a in self.elements:
            if a in seen:
                continue
            orbit = sorted({self.conjugate(g, a) for g in self.elements})
            seen.update(orbit)
            classes.append(orbit)
        return classes

    @property
    def is_abelian(self):
        return all(self.table[a][b] == self.table[b][a] for a in self.elements for b in self.elements)

    def _find_identity(self):
        for e in self.elements:
            if all(self.table[e][a] == a == self.table[a][e] for a in self.elements):
                return e
        raise UnitMissing('Group table has no identity element.')

    def _greedy_generators(self):
        chosen, span = [], {self.identity}
        for a in self.elements:
            if a not in span:
                chosen.append(a)
                span = self.subgroup(chosen)
        return chosen

    def validate(self):
        n = len(self)
        for row in self.table:
            if len(row) != n or any(not 0 <= b < n for b in row):
                raise ParseError('Group table is not a square table of elements.')
        for a, b, c in product(self.elements, repeat=3):
            if self.multiply(self.multiply(a, b), c) != self.multiply(a, self.multiply(b, c)):
                raise NotAssociative(
                    'Group multiplication is not associative.',
                    witness=[self.labels[a], self.labels[b], self.labels[c]],
                )
        self.inverses  # raises when an element has no inverse
        if self.subgroup(self.generators) != set(self.elements):
            raise ParseError('Listed generators do not generate the group.')
        logger.debug('Validated %r', self)
        return self


def from_permutations(permutations, name=None):
    """Group generated by permutations given in one-line notation."""
    generators = [list(p) for p in permutations]
    degree = len(generators[0]) if generators else 0
    if any(sorted(p) != list(range(degree)) for p in generators):
        raise ParseError('Generators must be permutations of the same degree.')
    if not generators:
        return FiniteGroup(['e'], [[0]], [], name=name)
    generators = [Permutation(p, size=degree) for p in generators]
    closure = PermutationGroup(generators)
    # Identity first: it is the lexicographically smallest array form.
    elements = sorted(closure.elements, key=lambda p: p.array_form)
    position = {tuple(p.array_form): i for i, p in enumerate(elements)}
    # (p q)(k) = p(q(k)); sympy's q*p applies q first.
    table = [[position[tuple((q * p).array_form)] for q in elements] for p in elements]
    labels = ['.'.join(str(v) for v in p.array_form) for p in elements]
    logger.debug('Permutation group %s of order %d', name or '<unnamed>', closure.order())
    return FiniteGroup(labels, table, [position[tuple(g.array_form)] for g in generators], name=name)


def trivial():
    return FiniteGroup(['e'], [[0]], [], name='1')


def cyclic(n):
    return FiniteGroup(
        [str(k) for k in range(n)],
        [[(a + b) % n for b in range(n)] for a in range(n)],
        [1] if n > 1 else [],
        name=f'Z{n}',
    )


def symmetric(n):
    """S_n on {0, ..., n-1}, generated by (0 1) and the n-cycle."""
    if n < 2:
        return trivial()
    swap = [1, 0] + list(range(2, n))
    cycle = list(range(1, n)) + [0]
    return from_permutations([swap, cycle] if n > 2 else [swap], name=f'S{n}')


def klein_four():
    return from_permutations([[1, 0, 3, 2], [2, 3, 0, 1]], name='V4')


GROUPS = {
    '1': trivial,
    'Z2': lambda: cyclic(2),
    'Z3': lambda: cyclic(3),
    'Z4': lambda: cyclic(4),
    'V4': klein_four,
    'S3': lambda: symmetric(3),
}


class FinSimplicialGroup:
    """
    Levelwise finite simplicial group. Subclasses provide ``elements``,
    the group law and the structure maps on elements.
    """

    name = None

    def elements(self, n):
        raise NotImplementedError

    def identity(self, n):
        raise NotImplementedError

    def multiply(self, n, a, b):
        raise NotImplementedError

    def inverse(self, n, a):
        raise NotImplementedError

    def face(self, i, n, g):
        """d_i: G_n -> G_(n-1)."""
        raise NotImplementedError

    def degeneracy(self, i, n, g):
        """s_i: G_n -> G_(n+1)."""
        raise NotImplementedError

    def label(self, n, g):
        return str(g)

    def verify(self, top):
        """Homomorphism property and simplicial identities up to level ``top``."""
        for n in range(top + 1):
            elements = list(self.elements(n))
            for a in elements:
                for b in elements:
                    ab = self.multiply(n, a, b)
                    for i in range(n + 1):
                        if n and self.face(i, n, ab) != self.multiply(
                            n - 1, self.face(i, n, a), self.face(i, n, b)
                        ):
                            raise PropertyCheckFailed(
                                f'Face d{i} is not a homomorphism at level {n}.',
                                witness=[self.label(n, a), self.label(n, b)],
                            )
                        if n < top and self.degeneracy(i, n, ab) != self.multiply(
                            n + 1, self.degeneracy(i, n, a), self.degeneracy(i, n, b)
                        ):
                            raise PropertyCheckFailed(
                                f'Degeneracy s{i} is not a homomorphism at level {n}.',
                                witness=[self.label(n, a), self.label(n, b)],
                            )
                self._check_identities(n, top, a)
        logger.debug('Simplicial group %s verified up to level %d', self.name, top)
        return True

    def _check_identities(self, n, top, g):
        def expect(left, right, kind, indices):
            if left != right:
                raise SimplicialIdentityViolation(
                    f'Simplicial group {kind} identity fails at level {n}.',
                    witness={'element': self.label(n, g), 'indices': list(indices)},
                )

        for j in range(n + 1):
            for i in range(j):
                if n >= 2:
                    expect(self.face(i, n - 1, self.face(j, n, g)),
                           self.face(j - 1, n - 1, self.face(i, n, g)), 'face', (i, j))
        if n >= top:
            return
        for j in range(n + 1):
            for i in range(j + 1):
                if n + 2 <= top:
                    expect(self.degeneracy(i, n + 1, self.degeneracy(j, n, g)),
                           self.degeneracy(j + 1, n + 1, self.degeneracy(i, n, g)), 'degeneracy', (i, j))
            for i in range(n + 2):
                lowered = self.face(i, n + 1, self.degeneracy(j, n, g))
                if i < j:
                    expected = self.degeneracy(j - 1, n - 1, self.face(i, n, g))
                elif i in (j, j + 1):
                    expected = g
                else:
                    expected = self.degeneracy(j, n - 1, self.face(i - 1, n, g))
                expect(lowered, expected, 'mixed', (i, j))


class ConstantGroup(FinSimplicialGroup):
    """The constant simplicial group on a finite group."""

    def __init__(self, group):
        self.group = group
        self.name = group.name

    def elements(self, n):
        return self.group.elements

    def identity(self, n):
        return self.group.identity

    def multiply(self, n, a, b):
        return self.group.multiply(a, b)

    def inverse(self, n, a):
        return self.group.inverse(a)

    def face(self, i, n, g):
        return g

    def degeneracy(self, i, n, g):
        return g

    def label(self, n, g):
        return self.group.label(g)


class NerveGroup(FinSimplicialGroup):
    """
    The nerve of a finite abelian group, a simplicial abelian group with
    level n equal to A^n; W-bar of it classifies degree-2 cohomology.
    """

    def __init__(self, group):
        if not group.is_abelian:
            raise ParseError('The nerve group needs an abelian group.', witness=[group.name])
        self.group = group
        self.name = f'B{group.name}'

    def elements(self, n):
        return list(product(self.group.elements, repeat=n))

    def identity(self, n):
        return (self.group.identity,) * n

    def multiply(self, n, a, b):
        return tuple(self.group.multiply(x, y) for x, y in zip(a, b))

    def inverse(self, n, a):
        return tuple(self.group.inverse(x) for x in a)

    def face(self, i, n, g):
        if i == 0:
            return g[1:]
        if i == n:
            return g[:-1]
        return g[:i - 1] + (self.group.multiply(g[i - 1], g[i]),) + g[i + 1:]

    def degeneracy(self, i, n, g):
        return g[:i] + (self.group.identity,) + g[i:]

    def label(self, n, g):
        return '(' + ','.join(self.group.label(x) for x in g) + ')'


def simplicial_group(group, kind='constant'):
    if kind == 'nerve':
        return NerveGroup(group)
    return ConstantGroup(group)

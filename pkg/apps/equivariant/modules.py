"""
Graded rational representations of finite groups.

A module stores one matrix per distinguished generator in each degree;
the matrices of the other elements are products along a breadth-first
spanning tree of the Cayley graph and are checked against the group table.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

from sympy import Matrix as SymbolicMatrix
from sympy import factor_list, symbols

from apps.core.exceptions import ParseError, PropertyCheckFailed
from apps.linear.elimination import kernel_basis, row_reduce
from apps.linear.matrix import Matrix

logger = logging.getLogger(__name__)

Z = symbols('z')


class GammaModule:
    """
    ``bases[n]`` labels degree n; ``actions[n][g]`` is the matrix of the
    generator ``g`` (an element index) acting on it from the left.
    """

    def __init__(self, group, bases, actions=None, name=None):
        self.group = group
        self.bases = {n: list(labels) for n, labels in bases.items()}
        self.actions = {n: dict((actions or {}).get(n, {})) for n in self.bases}
        self.name = name
        self._matrices = {}
        for n, matrices in self.actions.items():
            size = len(self.bases[n])
            for g, m in matrices.items():
                if m.shape != (size, size):
                    raise ParseError(
                        f'Action of {group.label(g)!r} in degree {n} has shape {m.shape}.',
                        witness={'degree': n, 'element': group.label(g)},
                    )

    def __repr__(self):
        return f'GammaModule({self.name or "?"}, {self.dimensions()})'

    @classmethod
    def trivial(cls, group, bases, name=None):
        return cls(group, bases, name=name)

    @classmethod
    def regular(cls, group, degree=0):
        """Q[group] with group acting by left multiplication."""
        size = len(group)
        actions = {}
        for g in group.generators:
            rows = [[0] * size for _ in range(size)]
            for h in group.elements:
                rows[group.multiply(g, h)][h] = 1
            actions[g] = Matrix(rows, size)
        return cls(group, {degree: list(group.labels)}, {degree: actions}, name=f'Q[{group.name}]')

    @property
    def degrees(self):
        return sorted(self.bases)

    def basis(self, n):
        return self.bases.get(n, [])

    def dimension(self, n):
        return len(self.basis(n))

    def dimensions(self):
        return {n: self.dimension(n) for n in self.degrees}

    def generator_matrix(self, g, n):
        m = self.actions.get(n, {}).get(g)
        return Matrix.identity(self.dimension(n)) if m is None else m

    def matrices(self, n):
        """Matrix of every element in degree n."""
        cached = self._matrices.get(n)
        if cached is None:
            group = self.group
            cached = {group.identity: Matrix.identity(self.dimension(n))}
            frontier = [group.identity]
            while frontier:
                following = []
                for a in frontier:
                    for g in group.generators:
                        b = group.multiply(a, g)
                        if b not in cached:
                            cached[b] = cached[a] @ self.generator_matrix(g, n)
                            following.append(b)
                frontier = following
            self._matrices[n] = cached
        return cached

    def matrix(self, gamma, n):
        return self.matrices(n)[gamma]

    def trace(self, gamma, n):
        m = self.matrix(gamma, n)
        return sum((m[i, i] for i in range(m.nrows)), Fraction(0))

    def validate(self):
        """The matrices respect the group law in every degree."""
        group = self.group
        for n in self.degrees:
            matrices = self.matrices(n)
            if len(matrices) != len(group):
                raise PropertyCheckFailed('Group generators do not reach every element.')
            for a in group.elements:
                for b in group.elements:
                    if matrices[group.multiply(a, b)] != matrices[a] @ matrices[b]:
                        raise PropertyCheckFailed(
                            f'Action in degree {n} is not a representation.',
                            witness={'degree': n, 'elements': [group.label(a), group.label(b)]},
                        )
        logger.debug('Validated %r', self)
        return self

    def apply(self, gamma, n, vector):
        return self.matrix(gamma, n).apply(vector)


@dataclass
class GradedSubspace:
    """The columns of ``spans[n]`` span degree n."""
    spans: dict

    def dimension(self, n):
        span = self.spans.get(n)
        return span.ncols if span is not None else 0

    def dimensions(self):
        return {n: self.dimension(n) for n in sorted(self.spans)}


def _column_space(m):
    _, pivots = row_reduce(m)
    return Matrix.from_columns([m.column(p) for p in pivots], m.nrows)


def averaging_projector(m, n):
    """(1/|G|) sum of the matrices of all elements."""
    size = m.dimension(n)
    total = Matrix.zeros(size, size)
    for matrix in m.matrices(n).values():
        total = total + matrix
    return total.scale(Fraction(1, len(m.group)))


def invariants(m):
    """Invariant subspace in each degree, as the image of the averaging projector."""
    spans = {}
    for n in m.degrees:
        spans[n] = _column_space(averaging_projector(m, n)) if m.dimension(n) else Matrix.zeros(0, 0)
    result = GradedSubspace(spans)
    logger.debug('Invariants of %r: %s', m, result.dimensions())
    return result


@dataclass
class IsotypicComponent:
    """``multiplicity`` counts copies of the irreducible when characters are known."""
    label: str
    dimension: int
    multiplicity: int = None

    def document(self):
        document = {'label': self.label, 'dimension': self.dimension}
        if self.multiplicity is not None:
            document['multiplicity'] = self.multiplicity
        return document


def class_of(group):
    """Element index to the position of its class in the character table."""
    table = group.characters
    position = {}
    for k, rep in enumerate(table['classes']):
        for c in group.conjugacy_classes:
            if rep in c:
                position.update({g: k for g in c})
    return position


def character_multiplicities(m, n):
    """<chi, trace> for every irreducible of the group's character table."""
    group = m.group
    table = group.characters
    position = class_of(group)
    traces = {gamma: m.trace(gamma, n) for gamma in group.elements}
    identity = position[group.identity]
    components = []
    for name, values in table['irreducibles'].items():
        inner = sum(
            (Fraction(values[position[group.inverse(gamma)]]) * traces[gamma] for gamma in group.elements),
            Fraction(0),
        ) / len(group)
        if inner.denominator != 1 or inner < 0:
            raise PropertyCheckFailed(
                f'Character {name!r} has multiplicity {inner} in degree {n}.',
                witness={'character': name, 'degree': n},
            )
        if inner:
            degree = Fraction(values[identity])
            components.append(IsotypicComponent(name, int(inner * degree), int(inner)))
    return components


def _fraction(value):
    return Fraction(int(value.p), int(value.q))


def _class_sum_constants(group):
    """a[i][j][k]: occurrences of the k-th class representative in C_i C_j."""
    classes = group.conjugacy_classes
    reps = [c[0] for c in classes]
    constants = [[[0] * len(classes) for _ in classes] for _ in classes]
    for i, ci in enumerate(classes):
        for j, cj in enumerate(classes):
            for x in ci:
                for y in cj:
                    xy = group.multiply(x, y)
                    if xy in reps:
                        constants[i][j][reps.index(xy)] += 1
    return constants


def primitive_central_element(group):
    """
    Coefficients c with z = sum c_k C_k generating the centre of Q[group],
    and the irreducible factors of its characteristic polynomial there.
    """
    classes = group.conjugacy_classes
    count = len(classes)
    constants = _class_sum_constants(group)
    for t in range(2, 2 + count ** 3):
        coefficients = [t ** k for k in range(count)]
        left = [
            [sum(coefficients[i] * constants[i][j][k] for i in range(count)) for j in range(count)]
            for k in range(count)
        ]
        _, factors = factor_list(SymbolicMatrix(left).charpoly(Z).as_expr(), Z)
        if all(multiplicity == 1 for _, multiplicity in factors):
            logger.debug('Primitive central element of %s: coefficients %s', group.name, coefficients)
            return coefficients, [f for f, _ in factors]
    raise PropertyCheckFailed(f'No primitive central element found for {group.name}.')


def _evaluate(factor, matrix):
    coefficients = [_fraction(c) for c in factor.as_poly(Z).all_coeffs()]
    result = Matrix.zeros(matrix.nrows, matrix.ncols)
    identity = Matrix.identity(matrix.nrows)
    for c in coefficients:
        result = result @ matrix + identity.scale(c)
    return result


def rational_blocks(m, n):
    """
    Isotypic blocks over Q: kernels of the irreducible factors of a
    primitive central element acting in degree n.
    """
    group = m.group
    size = m.dimension(n)
    if not size:
        return []
    coefficients, factors = primitive_central_element(group)
    central = Matrix.zeros(size, size)
    for c, members in zip(coefficients, group.conjugacy_classes):
        for gamma in members:
            central = central + m.matrix(gamma, n).scale(c)
    trivial_value = sum(c * len(members) for c, members in zip(coefficients, group.conjugacy_classes))
    components = []
    for factor in factors:
        dimension = kernel_basis(_evaluate(factor, central)).ncols
        if not dimension:
            continue
        roots = factor.as_poly(Z).all_coeffs()
        is_trivial = len(roots) == 2 and _fraction(-roots[1] / roots[0]) == trivial_value
        components.append(IsotypicComponent('trivial' if is_trivial else str(factor), dimension))
    return components


def isotypic_decomposition(m, n):
    """
    Isotypic components in degree n: named by the character table when the
    group carries one, rational blocks otherwise.
    """
    if m.group.characters:
        components = character_multiplicities(m, n)
    else:
        components = rational_blocks(m, n)
    total = sum(c.dimension for c in components)
    if total != m.dimension(n):
        raise PropertyCheckFailed(
            f'Isotypic components in degree {n} have total dimension {total}, expected {m.dimension(n)}.',
            witness={'degree': n, 'components': [c.document() for c in components]},
        )
    return components

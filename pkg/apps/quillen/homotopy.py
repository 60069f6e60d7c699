"""
Homotopy groups of free chain Lie models: the n-th group is the homology
of the model in degree n - 1, graded by formality weight when the
differential preserves it.
"""

import logging
from dataclasses import dataclass, field

from apps.core.exceptions import DegreeOutOfRange, NotACycle
from apps.core.validators import format_rational
from apps.lie.generators import Truncation
from apps.lie.words import enumerate_lyndon
from apps.linear.complexes import ChainComplexQ, homology
from apps.linear.elimination import rank
from apps.linear.matrix import Matrix

logger = logging.getLogger(__name__)


@dataclass
class Block:
    """Homology of one (degree, weight) block; ``weight`` is None when the
    differential is not weight-homogeneous."""
    degree: int
    weight: object
    words: list
    homology: object
    complete: bool = True

    @property
    def dimension(self):
        return self.homology.dimension if self.complete else 0

    def classes(self):
        return [
            {w: c for w, c in zip(self.words, column) if c}
            for column in self.homology.representatives.columns()
        ]

    def coordinates(self, element):
        vector = [element.get(w, 0) for w in self.words]
        return self.homology.coordinates(vector)


@dataclass
class HomotopyEntry:
    n: int
    dim: int
    weights: dict
    stable: bool
    classes: list = field(default_factory=list)
    incomplete: list = field(default_factory=list)
    lcs: dict = None


@dataclass
class HomotopyTable:
    entries: list
    max_degree: int
    max_weight: int
    homogeneous: bool
    name: str = None

    def dims(self):
        return {entry.n: entry.dim for entry in self.entries}

    def entry(self, n):
        return next(e for e in self.entries if e.n == n)

    def document(self, algebra=None):
        rows = []
        for entry in self.entries:
            row = {
                'n': entry.n,
                'dim': entry.dim,
                'weights': {str(w): d for w, d in sorted(entry.weights.items()) if d},
                'stable': entry.stable,
            }
            if entry.incomplete:
                row['incomplete_weights'] = sorted(entry.incomplete)
            if entry.lcs is not None:
                row['lcs'] = {str(w): r for w, r in sorted(entry.lcs.items())}
            if algebra is not None and entry.classes:
                row['classes'] = [
                    {
                        'weight': weight,
                        'element': {k: format_rational(c) for k, c in algebra.render(element).items()},
                    }
                    for weight, element in entry.classes
                ]
            rows.append(row)
        return {
            'name': self.name,
            'max_degree': self.max_degree,
            'max_weight': self.max_weight,
            'weight_graded': self.homogeneous,
            'homotopy': rows,
        }


def words_by_degree(dgl):
    groups = {}
    for b in dgl.algebra.basis:
        groups.setdefault(dgl.algebra.degree(b), []).append(b)
    return groups


def differential_matrix(dgl, sources, targets):
    index = {w: i for i, w in enumerate(targets)}
    rows = [[0] * len(sources) for _ in targets]
    for j, source in enumerate(sources):
        for w, c in dgl.differential.on_basis(source).items():
            if w in index:
                rows[index[w]][j] = c
    return Matrix(rows, len(sources))


def block_homology(dgl, lower, middle, upper, k):
    """Homology at degree k of the words of degrees k - 1, k and k + 1."""
    complex_ = ChainComplexQ(
        {k - 1: lower, k: middle, k + 1: upper},
        {k: differential_matrix(dgl, middle, lower), k + 1: differential_matrix(dgl, upper, middle)},
    )
    return homology(complex_, k)


def degree_blocks(dgl, k, by_degree=None, homogeneous=None):
    """Homology blocks of the model in degree ``k``."""
    by_degree = by_degree if by_degree is not None else words_by_degree(dgl)
    if homogeneous is None:
        homogeneous = dgl.is_weight_homogeneous()
    max_weight = dgl.truncation.max_weight
    lower, middle, upper = (by_degree.get(d, []) for d in (k - 1, k, k + 1))
    if not homogeneous:
        return [Block(k, None, middle, block_homology(dgl, lower, middle, upper, k))]

    def split(words):
        groups = {}
        for w in words:
            groups.setdefault(dgl.formality_weight(w), []).append(w)
        return groups

    lower_f, middle_f, upper_f = split(lower), split(middle), split(upper)
    blocks = []
    for f in sorted(middle_f):
        complete = k == 0 or (f - k) < max_weight
        h = block_homology(dgl, lower_f.get(f, []), middle_f[f], upper_f.get(f, []), k)
        blocks.append(Block(k, f, middle_f[f], h, complete))
    return blocks


def is_stable(dgl, k):
    """
    True when raising the weight bound cannot change homology in degree
    ``k``: no generator of degree 0 and no basis word of degree <= k + 1
    beyond the weight bound.
    """
    generators = dgl.generators
    if not len(generators):
        return True
    dmin = generators.min_degree
    if dmin == 0:
        return False
    top = (k + 1) // dmin
    max_weight = dgl.truncation.max_weight
    if top <= max_weight:
        return True
    for word in enumerate_lyndon(generators, Truncation(k + 1, top)):
        if len(word) > max_weight:
            return False
        degree = generators.word_degree(word)
        if degree % 2 and 2 * len(word) > max_weight and 2 * degree <= k + 1:
            return False
    return True


def lcs_ranks(dgl, by_degree=None):
    """
    Ranks of the lower central series quotients of H_0 by bracket weight.
    """
    by_degree = by_degree if by_degree is not None else words_by_degree(dgl)
    zero = by_degree.get(0, [])
    boundaries = differential_matrix(dgl, by_degree.get(1, []), zero)
    ranks = {}

    def projected_rank(limit):
        rows = [boundaries.rows[i] for i, w in enumerate(zero) if w.weight < limit]
        return rank(rows) if rows and boundaries.ncols else 0

    for w in range(1, dgl.truncation.max_weight + 1):
        count = sum(1 for b in zero if b.weight == w)
        ranks[w] = count - (projected_rank(w + 1) - projected_rank(w))
    return ranks


def homotopy_groups(m, t=None):
    """
    Table of n -> dim H_{n-1}(m) for 1 <= n <= N, with weight splitting,
    stability flags and class representatives.
    """
    max_degree = m.truncation.max_degree if t is None else min(t.max_degree, m.truncation.max_degree)
    by_degree = words_by_degree(m)
    homogeneous = m.is_weight_homogeneous()
    entries = []
    for n in range(1, max_degree + 1):
        k = n - 1
        blocks = degree_blocks(m, k, by_degree, homogeneous)
        weights, classes, incomplete = {}, [], []
        for block in blocks:
            if not block.complete:
                incomplete.append(block.weight)
                continue
            if block.dimension:
                if block.weight is not None:
                    weights[block.weight] = block.dimension
                classes.extend((block.weight, c) for c in block.classes())
        entry = HomotopyEntry(
            n=n,
            dim=sum(b.dimension for b in blocks),
            weights=weights,
            stable=not incomplete and is_stable(m, k),
            classes=classes,
            incomplete=incomplete,
        )
        if n == 1:
            entry.lcs = lcs_ranks(m, by_degree)
        entries.append(entry)
    logger.info('Homotopy of %s: %s', m.name, {e.n: e.dim for e in entries})
    return HomotopyTable(entries, max_degree, m.truncation.max_weight, homogeneous, m.name)


@dataclass
class WhiteheadProduct:
    n: int
    element: dict
    weight: object
    coordinates: dict

    @property
    def is_zero(self):
        return not any(c for coords in self.coordinates.values() for c in coords)


def _weight_of(m, x):
    weights = {m.formality_weight(b) for b in x}
    return weights.pop() if len(weights) == 1 else None


def class_coordinates(m, z, k):
    """Coordinates of the homology class of a cycle of degree ``k`` per block."""
    if k + 1 > m.truncation.max_degree:
        raise DegreeOutOfRange(
            f'Degree {k} needs boundaries beyond the degree bound.', witness={'degree': k}
        )
    coordinates = {}
    for block in degree_blocks(m, k):
        part = {w: c for w, c in z.items() if w in set(block.words)}
        coordinates[block.weight] = block.coordinates(part) if part else [0] * block.homology.dimension
    return coordinates


def whitehead_bracket(m, x, y):
    """
    Bracket of two homotopy classes given by cycle representatives,
    reduced modulo boundaries.
    """
    for label, element in (('x', x), ('y', y)):
        if m.D(element):
            raise NotACycle(
                f'Representative {label} is not a cycle.',
                witness=m.algebra.render(element),
            )
    z = m.algebra.bracket(x, y)
    wx, wy = _weight_of(m, x), _weight_of(m, y)
    weight = wx + wy if wx is not None and wy is not None else None
    if not z:
        degree = (m.algebra.element_degree(x) or 0) + (m.algebra.element_degree(y) or 0)
        return WhiteheadProduct(degree + 1, {}, weight, {})
    k = m.algebra.element_degree(z)
    return WhiteheadProduct(k + 1, z, weight, class_coordinates(m, z, k))

"""
Adams E^1 page of a connected ring: the weight filtration of its free
chain Lie model. A basis word of degree k and bracket weight w sits at
(p, q) = (-w, k + w); d^1 is the part of D raising weight by one.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from apps.core.exceptions import PropertyCheckFailed, SignConventionFailure
from apps.lie.words import LieWord
from apps.linear.complexes import ChainComplexQ, homology
from apps.linear.matrix import Matrix
from apps.rings.cohomology import ring_cohomology

from .construction import build_G
from .homotopy import differential_matrix

logger = logging.getLogger(__name__)


def _sign(n):
    return -1 if n % 2 else 1


@dataclass
class AdamsPage:
    name: str
    max_degree: int
    max_weight: int
    E1: dict
    d1: dict
    E2: dict = field(default_factory=dict)
    words: dict = field(default_factory=dict, repr=False)

    def dimension(self, p, q):
        return self.E1.get((p, q), 0)

    def abutment_bound(self):
        """Upper bound for dim pi_n from the complete part of E^2, by n."""
        bound = {}
        for (p, q), dim in self.E2.items():
            n = p + q + 1
            bound[n] = bound.get(n, 0) + dim
        return {n: d for n, d in sorted(bound.items()) if n <= self.max_degree}

    def document(self):
        ps = range(-self.max_weight, 0)
        qs = range(0, self.max_degree + self.max_weight + 1)
        return {
            'name': self.name,
            'max_degree': self.max_degree,
            'max_weight': self.max_weight,
            'p': list(ps),
            'q': list(qs),
            'E1': [[self.E1.get((p, q), 0) for q in qs] for p in ps],
            'E2': [[self.E2.get((p, q)) for q in qs] for p in ps],
            'd1': [
                {'source': [p, q], 'target': [p - 1, q], 'matrix': [list(r) for r in m.to_strings()]}
                for (p, q), m in sorted(self.d1.items())
                if m.nrows and m.ncols
            ],
        }


def cup_transpose_matrix(ring, model, sources, targets):
    """
    d^1 on column p = -1 computed from the structure constants of ``ring``
    alone: the transpose of the cup product on reduced classes, with the
    signs of the shifted generators.
    """
    generators = model.generators
    index = {w: i for i, w in enumerate(targets)}
    rows = [[Fraction(0)] * len(sources) for _ in targets]
    vdeg = {label: degree for label, degree in generators}
    positions = {label: i for i, label in enumerate(generators.labels)}
    for col, source in enumerate(sources):
        x = generators.labels[source.word[0]]
        j = ring.index(x)
        outer = -_sign(vdeg[x] + 1)
        for (i, i2), value in ring.products.items():
            c = value.get(j)
            if not c:
                continue
            left, right = ring.labels[i], ring.labels[i2]
            if left not in positions or right not in positions:
                continue
            sigma = _sign(vdeg[left] * (vdeg[right] + 1))
            a, b = positions[left], positions[right]
            if a == b:
                if vdeg[left] % 2 == 0:
                    continue
                word, coeff = LieWord((a,), True), outer * sigma * c
            elif a < b:
                word, coeff = LieWord((a, b), False), outer * sigma * c / 2
            else:
                swap = -_sign(vdeg[left] * vdeg[right])
                word, coeff = LieWord((b, a), False), outer * sigma * swap * c / 2
            if word in index:
                rows[index[word]][col] += coeff
    return Matrix(rows, len(sources))


def adams_E1(a, t):
    """
    E^1 page with d^1 matrices for the connected ring ``a`` (its cohomology
    when it carries a differential) in the window ``t``.
    """
    ring = ring_cohomology(a)
    model = build_G(ring, t)
    algebra = model.algebra
    words = {}
    for b in algebra.basis:
        k = algebra.degree(b)
        words.setdefault((-b.weight, k + b.weight), []).append(b)
    E1 = {pq: len(ws) for pq, ws in words.items()}

    d1 = {}
    for (p, q), sources in words.items():
        targets = words.get((p - 1, q), [])
        d1[(p, q)] = differential_matrix(model, sources, targets)
    for (p, q), m in d1.items():
        after = d1.get((p - 1, q))
        if after is not None and m.ncols and after.nrows and m.nrows and not (after @ m).is_zero():
            raise SignConventionFailure('d1 does not square to zero.', witness={'p': p, 'q': q})

    for (p, q), sources in words.items():
        if p != -1:
            continue
        targets = words.get((p - 1, q), [])
        expected = cup_transpose_matrix(ring, model, sources, targets)
        if expected != d1[(p, q)]:
            raise PropertyCheckFailed(
                'd1 on the first column differs from the transposed cup product.',
                witness={'p': p, 'q': q},
            )

    E2 = {}
    for (p, q), sources in words.items():
        w, k = -p, p + q
        if not ((w < t.max_weight or k == 0) and (k < t.max_degree or w == 1)):
            continue
        complex_ = ChainComplexQ(
            {0: words.get((p - 1, q), []), 1: sources, 2: words.get((p + 1, q), [])},
            {1: d1[(p, q)], 2: d1.get((p + 1, q), Matrix.zeros(len(sources), 0))},
        )
        dim = homology(complex_, 1).dimension
        if dim:
            E2[(p, q)] = dim
    logger.info('Adams E1 of %s: %d nonzero entries', ring.name, len(E1))
    return AdamsPage(ring.name, t.max_degree, t.max_weight, E1, d1, E2, words)

"""
Minimal models of free dg Lie algebras by elimination of contractible
generator pairs.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field

from apps.core.exceptions import PropertyCheckFailed
from apps.lie.algebra import FreeLieAlgebra
from apps.lie.derivations import LieMap
from apps.lie.words import LieWord
from apps.linear.complexes import ChainComplexQ, homology

from .dgl import substitute

logger = logging.getLogger(__name__)


@dataclass
class Elimination:
    removed: str
    target: str
    coefficient: object


@dataclass
class MinimalModel:
    model: object
    eliminations: list = field(default_factory=list)

    def document(self):
        return {
            **self.model.document(),
            'eliminated': [[e.removed, e.target] for e in self.eliminations],
        }


def abelianization_homology(dgl):
    """
    Homology of the generators under the linear part of D, by degree. For a
    model of a ring this is the reduced cohomology shifted down by one.
    """
    generators = dgl.generators
    bases, differentials = {}, {}
    for label, degree in generators:
        bases.setdefault(degree, []).append(label)
    for degree, labels in bases.items():
        targets = bases.get(degree - 1, [])
        if not targets:
            continue
        index = {label: i for i, label in enumerate(targets)}
        rows = [[0] * len(labels) for _ in targets]
        for j, label in enumerate(labels):
            for b, c in dgl.linear_part(label).items():
                rows[index[generators.labels[b.word[0]]]][j] = c
        differentials[degree] = rows
    complex_ = ChainComplexQ(bases, differentials)
    dims = {n: homology(complex_, n).dimension for n in sorted(bases)}
    return {n: d for n, d in dims.items() if d}


def _next_pair(dgl):
    """Generator u with a linear differential, the first generator w it hits."""
    best = None
    generators = dgl.generators
    for u_index, u in enumerate(generators.labels):
        linear = dgl.linear_part(u)
        if not linear:
            continue
        w_index = min(b.word[0] for b in linear)
        key = (generators.degrees[w_index], w_index, u_index)
        if best is None or key < best[0]:
            best = (key, u, generators.labels[w_index], linear[LieWord((w_index,), False)])
    return best


def _solve_for(dgl, u, w, c):
    """
    Image of ``w`` in the quotient by u and Du: w = -(Du - c w) / c,
    iterated to a fixpoint through the weight filtration.
    """
    source = dgl.algebra
    remainder = dict(dgl.image(u))
    remainder.pop(LieWord((source.generators.index(w),), False))
    kept = [label for label in source.generators.labels if label not in (u, w)]
    target = FreeLieAlgebra([(label, source.generators.degree(label)) for label in kept], dgl.truncation)
    image = {}
    for _ in range(dgl.truncation.max_weight):
        images = {label: target.generator(label) for label in kept}
        images[w] = image
        phi = LieMap(source, target, images)
        updated = target.truncate({b: -x / c for b, x in phi(remainder).items()})
        if updated == image:
            break
        image = updated
    return image


def minimal_model(m, t=None):
    """
    Minimal free dg Lie algebra weakly equivalent to ``m``: eliminates
    pairs (u, w) with Du = c w + (brackets), lowest degree first, and
    certifies the result by the homology of the abelianizations.
    """
    expected = abelianization_homology(m)
    current, eliminations = m, []
    while True:
        pair = _next_pair(current)
        if pair is None:
            break
        _, u, w, c = pair
        logger.debug('Eliminating pair %s -> %s (coefficient %s)', u, w, c)
        image = _solve_for(current, u, w, c)
        current, _ = substitute(current, {u: None, w: image}, name=m.name)
        eliminations.append(Elimination(u, w, c))

    counts = {n: d for n, d in sorted(Counter(current.generators.degrees).items())}
    if counts != expected:
        raise PropertyCheckFailed(
            'Minimal model changed the homology of the abelianization.',
            witness={'expected': expected, 'found': counts},
        )
    logger.info('Minimal model of %s: %d generators after %d eliminations',
                m.name, len(current.generators), len(eliminations))
    return MinimalModel(current, eliminations)

"""
Homotopy groups of the free chain Lie model of an equivariant cohomology
ring, as representations of the group, with weights.

The group acts on the model's generators by the contragredient of the
deck action, (gamma v)(x) = v(gamma^-1 x), and on the free Lie algebra by
the induced automorphisms. The differential must commute with them.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from apps.core.exceptions import PropertyCheckFailed
from apps.lie.derivations import LieMap
from apps.linear.matrix import Matrix
from apps.linear.vectors import sub
from apps.quillen.construction import build_Gbar
from apps.quillen.homotopy import degree_blocks, homotopy_groups, words_by_degree

from .cohomology import equivariant_cohomology
from .modules import GammaModule, isotypic_decomposition

logger = logging.getLogger(__name__)


def generator_action(model, cohomology, gamma):
    """Automorphism of the model's free Lie algebra induced by ``gamma``."""
    ring, module, group = cohomology.ring, cohomology.module, cohomology.group
    inverse = group.inverse(gamma)
    images = {}
    for label, _ in model.generators:
        n = ring.degree(label)
        local = module.basis(n)
        row = module.matrix(inverse, n).rows[local.index(label)]
        images[label] = {}
        for target, c in zip(local, row):
            if c:
                images[label].update({b: c * v for b, v in model.algebra.generator(target).items()})
    return LieMap(model.algebra, model.algebra, images)


def check_equivariant(model, actions, group):
    """D gamma = gamma D on every generator."""
    for gamma, action in actions.items():
        for label in model.generators.labels:
            x = model.algebra.generator(label)
            difference = sub(model.algebra.truncate(action(model.D(x))), model.D(action(x)))
            if any(difference.values()):
                raise PropertyCheckFailed(
                    'Model differential does not commute with the group action.',
                    witness={'element': group.label(gamma), 'generator': label},
                )
    return True


@dataclass
class WeightedTable:
    """Homotopy table whose entries carry isotypic components per weight."""
    table: object
    group: object
    modules: dict = field(default_factory=dict)
    isotypic: dict = field(default_factory=dict)

    def dims(self):
        return self.table.dims()

    def components(self, n, weight=None):
        """Isotypic components of the n-th group, summed over weights unless one is given."""
        totals = {}
        for w, components in self.isotypic.get(n, {}).items():
            if weight is not None and w != weight:
                continue
            for c in components:
                totals[c.label] = totals.get(c.label, 0) + c.dimension
        return totals

    def document(self, algebra=None):
        document = self.table.document(algebra)
        document['group'] = self.group.name
        for row in document['homotopy']:
            n = row['n']
            row['isotypic'] = self.components(n)
            row['isotypic_by_weight'] = {
                str(w): {c.label: c.dimension for c in components}
                for w, components in sorted(self.isotypic.get(n, {}).items(), key=lambda item: str(item[0]))
                if components
            }
        return document


def equivariant_homotopy(space, rho, group, truncation):
    """
    Homotopy groups of X relative to the monodromy ``rho``, computed from
    the model of the cover's cohomology ring with the group acting. The
    cochain algebra is assumed formal; no check is made.
    """
    cohomology = equivariant_cohomology(space, rho, group)
    model = build_Gbar(cohomology.ring, truncation, name=cohomology.cover.name)
    actions = {gamma: generator_action(model, cohomology, gamma) for gamma in group.generators}
    check_equivariant(model, actions, group)
    table = homotopy_groups(model, truncation)
    by_degree = words_by_degree(model)
    homogeneous = model.is_weight_homogeneous()
    result = WeightedTable(table, group)
    for entry in table.entries:
        blocks = [b for b in degree_blocks(model, entry.n - 1, by_degree, homogeneous) if b.complete]
        bases, matrices = {}, {}
        for block in blocks:
            classes = block.classes()
            bases[block.weight] = [f'{entry.n}:{block.weight}:{k}' for k in range(len(classes))]
            matrices[block.weight] = {
                gamma: Matrix.from_columns(
                    [block.coordinates(_restrict(action(c), block.words)) for c in classes],
                    len(classes),
                )
                for gamma, action in actions.items()
            }
        module = GammaModule(group, bases, matrices, name=f'pi_{entry.n}').validate()
        result.modules[entry.n] = module
        result.isotypic[entry.n] = {w: isotypic_decomposition(module, w) for w in module.degrees}
    logger.info('Equivariant homotopy of %s with %s: %s', space.name, group.name,
                {n: result.components(n) for n in result.isotypic if table.dims()[n]})
    return result


def _restrict(element, words):
    keep = set(words)
    return {w: Fraction(c) for w, c in element.items() if w in keep}

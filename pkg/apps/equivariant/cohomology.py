"""
Cohomology with coefficients in the functions on a finite group, computed
as the cohomology of the covering space with its deck action.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

from apps.core.exceptions import NotSurjectiveMonodromy, PropertyCheckFailed
from apps.linear.complexes import Homology, homology
from apps.linear.matrix import Matrix
from apps.simplicial.cochains import cochain_complex, cohomology_ring
from apps.simplicial.covering import covering_complex, is_surjective, parse_monodromy

from .modules import GammaModule, isotypic_decomposition

logger = logging.getLogger(__name__)


@dataclass
class EquivariantCohomology:
    ring: object
    module: GammaModule
    cover: object
    monodromy: dict

    @property
    def group(self):
        return self.module.group

    def act(self, gamma, vector):
        """Action on a sparse ring vector over basis indices."""
        ring = self.ring
        result = {}
        for n in self.module.degrees:
            indices = ring.indices_in_degree(n)
            dense = [vector.get(i, 0) for i in indices]
            if not any(dense):
                continue
            for i, c in zip(indices, self.module.apply(gamma, n, dense)):
                if c:
                    result[i] = c
        return result

    def document(self):
        group = self.group
        return {
            'space': self.cover.base.name,
            'group': group.name,
            'monodromy': {edge: group.label(g) for edge, g in sorted(self.monodromy.items())},
            'betti': self.ring.dimensions(),
            'degrees': [
                {
                    'n': n,
                    'basis': self.module.basis(n),
                    'action': {
                        group.label(g): self.module.generator_matrix(g, n).to_strings()
                        for g in group.generators
                    },
                    'isotypic': [c.document() for c in isotypic_decomposition(self.module, n)],
                }
                for n in self.module.degrees
            ],
        }


def deck_action(cover, ring, n, gamma):
    """Matrix of gamma on H^n in the basis of the ring's classes of degree n."""
    labels = [ring.labels[i] for i in ring.indices_in_degree(n)]
    if not labels:
        return Matrix.zeros(0, 0)
    cochains = cochain_complex(cover)
    size = cochains.dimension(n)
    h = homology(cochains, n)
    reps = Matrix.from_columns([ring.representatives[label][1] for label in labels], size)
    classes = Homology(n, len(labels), reps, h.boundaries, h.cycles)
    deck = cover.deck_matrix(gamma, n, cochains.basis(n))
    return Matrix.from_columns(
        [classes.coordinates(deck.apply(column)) for column in reps.columns()], len(labels),
    )


def check_multiplicative(result):
    """gamma(ab) = (gamma a)(gamma b) on every pair of basis classes."""
    ring, group = result.ring, result.group
    size = len(ring)
    for gamma in group.generators:
        images = [result.act(gamma, {i: Fraction(1)}) for i in range(size)]
        for i in range(size):
            for j in range(size):
                left = result.act(gamma, ring.multiply({i: Fraction(1)}, {j: Fraction(1)}))
                right = ring.multiply(images[i], images[j])
                if {k: c for k, c in left.items() if c} != {k: c for k, c in right.items() if c}:
                    raise PropertyCheckFailed(
                        'Deck action is not multiplicative.',
                        witness={
                            'element': group.label(gamma),
                            'classes': [ring.labels[i], ring.labels[j]],
                        },
                    )
    return True


def equivariant_cohomology(space, rho, group):
    """
    H*(X) with coefficients in O(group) along the monodromy ``rho``: the
    cohomology ring of the rho-cover and the deck action on it.

    ``rho`` is an edge labelling or one of 'trivial' and 'nontrivial'.
    Raises NotSurjectiveMonodromy when its image is a proper subgroup.
    """
    monodromy = parse_monodromy(space, group, rho)
    if not is_surjective(group, monodromy):
        raise NotSurjectiveMonodromy(
            f'Monodromy does not generate {group.name}.',
            witness={edge: group.label(g) for edge, g in monodromy.items()},
        )
    cover = covering_complex(space, group, monodromy)
    ring = cohomology_ring(cover, name=cover.name)
    bases, actions = {}, {}
    for n in range(ring.top_degree + 1):
        bases[n] = [ring.labels[i] for i in ring.indices_in_degree(n)]
        actions[n] = {gamma: deck_action(cover, ring, n, gamma) for gamma in group.generators}
    module = GammaModule(group, bases, actions, name=f'H*({cover.name})').validate()
    result = EquivariantCohomology(ring, module, cover, monodromy)
    check_multiplicative(result)
    logger.info(
        'Equivariant cohomology of %s with %s: betti %s',
        space.name, group.name, ring.dimensions(),
    )
    return result

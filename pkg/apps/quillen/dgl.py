"""
Free differential graded Lie algebras: a truncated free Lie algebra with a
square-zero derivation of degree -1.
"""

import logging

from apps.core.exceptions import SignConventionFailure
from apps.core.validators import format_rational
from apps.lie.algebra import FreeLieAlgebra
from apps.lie.derivations import Derivation, LieMap, verify_square_zero

logger = logging.getLogger(__name__)


class FreeDGLie:
    """
    ``letter_weights`` assigns each generator its formality weight (the
    cohomological degree of the class it is dual to). The weight of a word
    is the sum over its letters, which is homological degree plus bracket
    length for generators coming from a cohomology ring.
    """

    def __init__(self, algebra, images, letter_weights=None, name=None, verify=True):
        self.algebra = algebra
        self.truncation = algebra.truncation
        self.differential = Derivation(algebra, images, degree=-1)
        generators = algebra.generators
        self.letter_weights = dict(letter_weights) if letter_weights else {
            label: degree + 1 for label, degree in generators
        }
        self._letter_weight_list = [self.letter_weights[label] for label in generators.labels]
        self.name = name
        if verify:
            self.verify()

    def __repr__(self):
        return f'FreeDGLie({self.name or ""}, {self.algebra!r})'

    @property
    def generators(self):
        return self.algebra.generators

    def D(self, x):
        return self.differential(x)

    def verify(self):
        failing = verify_square_zero(self.differential)
        if failing is not None:
            raise SignConventionFailure(
                'Differential does not square to zero.',
                witness=failing.render(self.generators),
            )
        logger.debug('Verified D^2 = 0 on %d basis words', len(self.algebra.basis))

    def formality_weight(self, b):
        return sum(self._letter_weight_list[i] for i in b.letters())

    def image(self, label):
        return self.differential.image(label)

    def linear_part(self, label):
        return {b: c for b, c in self.image(label).items() if b.weight == 1}

    def is_minimal(self):
        """Differential of every generator is decomposable."""
        return all(not self.linear_part(label) for label in self.generators.labels)

    def is_weight_homogeneous(self):
        """Whether D preserves formality weight on generators."""
        for label in self.generators.labels:
            w = self.letter_weights[label]
            if any(self.formality_weight(b) != w for b in self.image(label)):
                return False
        return True

    @property
    def min_degree(self):
        return self.generators.min_degree

    def document(self):
        render = self.algebra.render
        return {
            'generators': [
                {'label': label, 'degree': degree, 'weight': self.letter_weights[label]}
                for label, degree in self.generators
            ],
            'differential': {
                label: {k: format_rational(c) for k, c in render(self.image(label)).items()}
                for label in self.generators.labels
                if self.image(label)
            },
        }


def substitute(dgl, images, name=None):
    """
    Quotient of ``dgl`` by generators listed in ``images``. Each listed
    generator maps to the given element of the new algebra (``None`` for
    zero); remaining generators map to themselves. The new differential
    is the image of the old one.
    """
    kept = [(label, degree) for label, degree in dgl.generators if label not in images]
    target = FreeLieAlgebra(kept, dgl.truncation)
    phi_images = {label: target.generator(label) for label, _ in kept}
    for label, image in images.items():
        phi_images[label] = image or {}
    phi = LieMap(dgl.algebra, target, phi_images)
    new_images = {label: target.truncate(phi(dgl.image(label))) for label, _ in kept}
    weights = {label: dgl.letter_weights[label] for label, _ in kept}
    return FreeDGLie(target, new_images, weights, name=name or dgl.name), phi

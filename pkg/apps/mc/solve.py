"""
Weight-by-weight extension of a Maurer-Cartan seed.

With delta the bracket-length preserving part of d, a partial solution w
of weight < k extends to weight k when the weight-k part R of its residual
is a delta-boundary: delta eta = -R. Otherwise weight k is the first
obstruction.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

from apps.core.validators import format_rational
from apps.linear.elimination import solve
from apps.linear.matrix import Matrix
from apps.linear.vectors import add_into, from_dense, to_dense

from .tensor import TensorDGLA

logger = logging.getLogger(__name__)


@dataclass
class MCSolution:
    element: dict
    obstruction: dict = None

    @property
    def ok(self):
        return self.obstruction is None

    def document(self, tensor):
        def render(x):
            return {
                label: {word: format_rational(c) for word, c in lie.items()}
                for label, lie in tensor.render(x).items()
            }

        document = {'ok': self.ok, 'element': render(self.element)}
        if self.obstruction is not None:
            document['obstruction'] = {
                'weight': self.obstruction['weight'],
                'residual': render(self.obstruction['residual']),
            }
        return document


def _keys(tensor, degree, weight):
    ring, algebra = tensor.ring, tensor.algebra
    return [
        (i, b)
        for b in algebra.basis if b.weight == weight
        for i in range(len(ring))
        if ring.degrees[i] - algebra.degree(b) == degree
    ]


def _extend(tensor, residual, weight):
    """eta with delta eta = -residual in weight ``weight``, or ``None``."""
    sources = _keys(tensor, 1, weight)
    images = [tensor.weight_part(tensor.d({key: Fraction(1)}), weight) for key in sources]
    targets = sorted({key for image in images for key in image} | set(residual))
    matrix = Matrix(
        [[image.get(key, 0) for image in images] for key in targets],
        len(sources),
    )
    x = solve(matrix, [-c for c in to_dense(residual, targets)])
    if x is None:
        return None
    return from_dense(x, sources)


def mc_solve(a, g, seed, t=None):
    """
    Extend ``seed`` to a Maurer-Cartan element, weight by weight up to the
    window of ``g`` (or ``t``), reporting the first obstruction.
    """
    tensor = a if isinstance(a, TensorDGLA) else TensorDGLA(a, g)
    tensor.check_degree(seed, 1, 'seed')
    top = tensor.algebra.truncation.max_weight
    if t is not None:
        top = min(top, t.max_weight)
    omega = dict(seed)
    for weight in range(1, top + 1):
        residual = tensor.weight_part(tensor.mc_residual(omega), weight)
        if not residual:
            continue
        eta = _extend(tensor, residual, weight) if weight > 1 else None
        if eta is None:
            logger.info('MC extension obstructed at weight %d', weight)
            return MCSolution(omega, {'weight': weight, 'residual': residual})
        add_into(omega, eta)
        logger.debug('MC correction at weight %d: %d terms', weight, len(eta))
    return MCSolution(omega)

"""
Free chain Lie models of connected (dg) rings.

The model of a ring A is free on the reduced dual of A shifted down by
one, with differential dual to d and to the cup product:

    D v_j = -(-1)^|x_j| ( sum_k delta^j_k v_k
                          + 1/2 sum_{i,i'} (-1)^((|x_i|-1)|x_i'|) c^j_{ii'} [v_i, v_i'] )

where delta^j_k is the coefficient of x_j in d x_k and c^j_{ii'} the
coefficient of x_j in x_i x_i'. Classes of degree 0 other than the unit
would give generators of degree -1; they are dropped.
"""

import logging
from fractions import Fraction

from apps.lie.algebra import FreeLieAlgebra
from apps.linear.elimination import row_reduce
from apps.linear.vectors import add_into
from apps.rings.dual import dualize_reduced

from .dgl import FreeDGLie, substitute

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


def _sign(n):
    return -1 if n % 2 else 1


def model_differential(ring, algebra):
    """Images of the generators under D, keyed by ring label."""
    data = dualize_reduced(ring)
    degrees = data.cohomological_degrees
    generator_set = set(degrees)
    images = {}
    for label in degrees:
        j = ring.index(label)
        image = {}
        for source, coeff in data.linear.get(label, {}).items():
            add_into(image, algebra.generator(source), coeff)
        for (i, i2), value in ring.products.items():
            c = value.get(j)
            if not c:
                continue
            left, right = ring.labels[i], ring.labels[i2]
            if left not in generator_set or right not in generator_set:
                continue
            sign = _sign((degrees[left] - 1) * degrees[right])
            add_into(
                image,
                algebra.bracket(algebra.generator(left), algebra.generator(right)),
                HALF * sign * c,
            )
        images[label] = {b: -_sign(degrees[label]) * c for b, c in image.items()}
    return images


def build_G(ring, truncation, name=None):
    """
    Free chain Lie model of ``ring`` in the ``truncation`` window. Raises
    SignConventionFailure if the differential does not square to zero.
    """
    data = dualize_reduced(ring)
    algebra = FreeLieAlgebra(data.generators, truncation)
    images = model_differential(ring, algebra)
    weights = {label: data.cohomological_degrees[label] for label, _ in data.generators}
    logger.debug('build_G %s: %d generators', ring.name, len(data.generators))
    return FreeDGLie(algebra, images, weights, name=name or ring.name)


def killed_duals(ring):
    """
    Degree-1 basis labels whose duals span the annihilator of a complement
    U of d(A^0) in A^1: the pivot columns of the transposed d.
    """
    sources = [i for i in ring.indices_in_degree(0) if i != ring.unit_index]
    targets = ring.indices_in_degree(1)
    if not sources or not targets:
        return []
    transposed = [
        [ring.differential.get(s, {}).get(t, 0) for t in targets]
        for s in sources
    ]
    _, pivots = row_reduce(transposed)
    return [ring.labels[targets[p]] for p in pivots]


def build_Gbar(ring, truncation, name=None):
    """
    Quotient of build_G by the ideal generated by the duals of d(A^0). For
    rings with d = 0 on A^0 this is build_G.
    """
    model = build_G(ring, truncation, name=name)
    killed = killed_duals(ring)
    if not killed:
        return model
    logger.debug('build_Gbar %s: killing %s', ring.name, killed)
    quotient, _ = substitute(model, {label: None for label in killed}, name=name or ring.name)
    return quotient

"""
Cohomology rings of cochain algebras.

``algebra_cohomology`` is shared by dg rings, simplicial cochains with the
Alexander-Whitney cup product and Chevalley-Eilenberg cochains: anything
that can present a cochain complex and a product on cochain vectors.
"""

import logging
from fractions import Fraction

from apps.core.exceptions import NotACycle, NotConnected, PropertyCheckFailed
from apps.linear.complexes import COCHAIN, ChainComplexQ, Homology, homology
from apps.linear.matrix import Matrix
from apps.linear.vectors import from_dense, to_dense

from .ring import GradedRing

logger = logging.getLogger(__name__)


def _class_label(basis, vector, degree, position, taken):
    nonzero = [(i, c) for i, c in enumerate(vector) if c]
    if len(nonzero) == 1 and nonzero[0][1] == 1 and basis[nonzero[0][0]] not in taken:
        return basis[nonzero[0][0]]
    label = f'h{degree}_{position}'
    while label in taken:
        label += "'"
    return label


def algebra_cohomology(cochains, multiply, unit_vector, name=None, degrees=None):
    """
    Cohomology ring of a cochain algebra.

    ``multiply(p, u, q, v)`` multiplies dense cochain vectors of degrees p
    and q and returns a dense vector of degree p + q. Products landing
    outside the complex are dropped. Only ``degrees`` (default: all)
    receive classes, so the complex may extend one degree further. The
    result is validated: a cochain product that is only homotopy
    commutative still has to produce a graded-commutative ring here.
    """
    classes = {}
    labels, class_degrees = [], []
    taken = set()

    degrees = cochains.degrees if degrees is None else [n for n in cochains.degrees if n in degrees]
    for n in degrees:
        h = homology(cochains, n)
        if n == 0:
            if h.dimension != 1:
                raise NotConnected(f'Degree-0 cohomology has dimension {h.dimension}.')
            reps = Matrix.from_columns([unit_vector], cochains.dimension(0))
            h = Homology(0, 1, reps, h.boundaries, h.cycles)
        classes[n] = h
        for position, column in enumerate(h.representatives.columns()):
            label = _class_label(cochains.basis(n), column, n, position, taken)
            taken.add(label)
            labels.append(label)
            class_degrees.append(n)

    offsets, start = {}, 0
    for n in degrees:
        offsets[n] = start
        start += classes[n].dimension

    products = {}
    for p in degrees:
        for q in degrees:
            if p == 0 or q == 0 or p + q not in classes or not classes[p + q].dimension:
                continue
            for i, u in enumerate(classes[p].representatives.columns()):
                for j, v in enumerate(classes[q].representatives.columns()):
                    value = multiply(p, u, q, v)
                    try:
                        coords = classes[p + q].coordinates(value)
                    except NotACycle:
                        raise PropertyCheckFailed(
                            'Product of cocycles is not a cocycle.',
                            witness=[labels[offsets[p] + i], labels[offsets[q] + j]],
                        )
                    entry = {
                        offsets[p + q] + k: Fraction(c) for k, c in enumerate(coords) if c
                    }
                    if entry:
                        products[(offsets[p] + i, offsets[q] + j)] = entry

    ring = GradedRing(labels, class_degrees, labels[offsets[0]], products, name=name)
    ring.validate()
    ring.representatives = {
        labels[offsets[n] + k]: (n, column)
        for n in degrees
        for k, column in enumerate(classes[n].representatives.columns())
    }
    logger.debug('Cohomology ring %r with betti %s', ring, ring.dimensions())
    return ring


def ring_cochains(ring):
    """The cochain complex underlying a dg ring."""
    top = ring.top_degree
    bases = {n: [ring.labels[i] for i in ring.indices_in_degree(n)] for n in range(top + 1)}
    differentials = {n: ring.differential_matrix(n) for n in range(top)}
    return ChainComplexQ(bases, differentials, degree=COCHAIN)


def ring_cohomology(ring):
    """Cohomology ring of a dg ring; a ring with d = 0 is returned as is."""
    if not ring.is_dg:
        return ring
    cochains = ring_cochains(ring)
    index_by_degree = {n: ring.indices_in_degree(n) for n in cochains.degrees}

    def multiply(p, u, q, v):
        product = ring.multiply(
            from_dense(u, index_by_degree[p]), from_dense(v, index_by_degree[q])
        )
        return to_dense(product, index_by_degree[p + q])

    unit = to_dense({ring.unit_index: Fraction(1)}, index_by_degree[0])
    return algebra_cohomology(cochains, multiply, unit, name=ring.name)

"""
Rational cochains of simplicial sets.

``cochain_complex`` gives the normalized cochains (functions on
nondegenerate simplices); ``cochain_module`` the full cosimplicial module
Q^(X_n), whose Dold-Kan normalization recovers the same complex. Cup
products use the Alexander-Whitney front and back faces.
"""

import logging
from fractions import Fraction

from apps.doldkan.cosimplicial import CosimplicialModule
from apps.linear.complexes import COCHAIN, ChainComplexQ
from apps.linear.matrix import Matrix
from apps.rings.cohomology import algebra_cohomology

logger = logging.getLogger(__name__)


def cochain_complex(space, top=None):
    """Normalized cochains in degrees ``0..top`` (default: the dimension)."""
    top = space.dimension if top is None else top
    bases = {n: list(space.nondegenerate.get(n, [])) for n in range(top + 1)}
    differentials = {}
    for n in range(top):
        position = {label: k for k, label in enumerate(bases[n])}
        rows = []
        for label in bases[n + 1]:
            row = [Fraction(0)] * len(bases[n])
            for i, face in enumerate(space.faces[label]):
                if not face.is_degenerate:
                    row[position[face.label]] += -1 if i % 2 else 1
            rows.append(row)
        differentials[n] = Matrix(rows, len(bases[n]))
    return ChainComplexQ(bases, differentials, degree=COCHAIN)


def cup_product(space, bases, p, u, q, v):
    """(u cup v)(y) = u(front p-face of y) v(back q-face of y) on dense vectors."""
    n = p + q
    front_map, back_map = tuple(range(p + 1)), tuple(range(p, n + 1))
    position_p = {label: k for k, label in enumerate(bases[p])}
    position_q = {label: k for k, label in enumerate(bases[q])}
    result = []
    for label in bases.get(n, []):
        y = space.simplex(label)
        front, back = space.apply(front_map, y), space.apply(back_map, y)
        if front.is_degenerate or back.is_degenerate:
            result.append(Fraction(0))
        else:
            result.append(Fraction(u[position_p[front.label]]) * v[position_q[back.label]])
    return result


def cohomology_ring(space, name=None):
    """
    H*(X; Q) with the Alexander-Whitney cup product. The cochain product
    is not graded-commutative; the ring is validated at cohomology.
    """
    cochains = cochain_complex(space)
    bases = {n: cochains.basis(n) for n in cochains.degrees}

    def multiply(p, u, q, v):
        return cup_product(space, bases, p, u, q, v)

    unit = [Fraction(1)] * cochains.dimension(0)
    ring = algebra_cohomology(cochains, multiply, unit, name=name or space.name)
    logger.info('Cohomology of %s: betti %s', space.name or '<unnamed>', ring.dimensions())
    return ring


class CochainModule(CosimplicialModule):
    """Q^(X_n) with basis the characteristic functions of all n-simplices."""

    def __init__(self, space, top):
        self.space = space
        self.top = top

    def basis(self, n):
        return self.space.simplices(n)

    def label(self, key):
        return key.render()

    def apply(self, theta, target, key):
        return {
            y: Fraction(1)
            for y in self.space.simplices(target)
            if self.space.apply(theta, y) == key
        }


def cochain_module(space, top=None):
    top = space.dimension + 1 if top is None else top
    return CochainModule(space, top)

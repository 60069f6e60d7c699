"""
The tensor dg Lie algebra A (x) g of a dg ring and a free dg Lie algebra.

Elements are sparse dicts keyed by ``(ring index, LieWord)``. The total
degree of a (x) x is |a| - |x|, so Maurer-Cartan elements live in
A^(n+1) (x) g_n and gauge parameters in A^n (x) g_n.

    d(a (x) x) = da (x) x + (-1)^|a| a (x) Dx
    [a (x) x, b (x) y] = (-1)^(|x||b|) ab (x) [x, y]
"""

import logging
from fractions import Fraction

from apps.core.exceptions import DegreeMismatch
from apps.lie.algebra import FreeLieAlgebra
from apps.lie.words import letter
from apps.linear.vectors import add_into, add_term

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


def koszul(p, q):
    return -1 if (p * q) % 2 else 1


class TensorDGLA:

    def __init__(self, ring, dgl):
        self.ring = ring
        self.dgl = dgl
        self.algebra = dgl.algebra

    @property
    def is_free(self):
        return isinstance(self.algebra, FreeLieAlgebra)

    @property
    def depth(self):
        """Bound on the length of iterated brackets that can be nonzero."""
        truncation = getattr(self.algebra, 'truncation', None)
        if truncation is not None:
            return truncation.max_weight
        return self.algebra.nilpotency

    def __repr__(self):
        return f'TensorDGLA({self.ring.name}, {self.dgl.name})'

    def key_degree(self, key):
        i, b = key
        return self.ring.degrees[i] - self.algebra.degree(b)

    def element(self, components):
        """Element from ``{ring label: Lie element}``."""
        result = {}
        for label, lie in components.items():
            i = self.ring.index(label)
            for b, c in lie.items():
                add_term(result, (i, b), Fraction(c))
        return result

    def components(self, x):
        """``{ring index: Lie element}``."""
        parts = {}
        for (i, b), c in x.items():
            parts.setdefault(i, {})[b] = c
        return parts

    def render(self, x):
        return {
            self.ring.labels[i]: self.algebra.render(lie)
            for i, lie in sorted(self.components(x).items())
        }

    def check_degree(self, x, degree, role='element'):
        for key in x:
            if self.key_degree(key) != degree:
                i, b = key
                raise DegreeMismatch(
                    f'Component of the {role} has total degree {self.key_degree(key)}, expected {degree}.',
                    witness=[self.ring.labels[i], *self.algebra.render({b: 1})],
                )

    def weight_part(self, x, weight):
        return {key: c for key, c in x.items() if key[1].weight == weight}

    def d(self, x):
        result = {}
        ring, derivation = self.ring, self.dgl.differential
        for (i, b), c in x.items():
            for k, e in ring.differential.get(i, {}).items():
                add_term(result, (k, b), c * e)
            sign = koszul(1, ring.degrees[i])
            for b2, e in derivation.on_basis(b).items():
                add_term(result, (i, b2), sign * c * e)
        return result

    def bracket(self, x, y):
        result = {}
        ring, algebra = self.ring, self.algebra
        for (i, b), c in x.items():
            db = algebra.degree(b)
            for (j, b2), c2 in y.items():
                product = ring.multiply_basis(i, j)
                if not product:
                    continue
                lie = algebra.bracket({b: 1}, {b2: 1})
                if not lie:
                    continue
                sign = koszul(db, ring.degrees[j]) * c * c2
                for k, e in product.items():
                    for b3, f in lie.items():
                        add_term(result, (k, b3), sign * e * f)
        return result

    def mc_residual(self, omega):
        """d omega + 1/2 [omega, omega]."""
        residual = self.d(omega)
        return add_into(residual, self.bracket(omega, omega), HALF)

    def tautological_element(self):
        """
        Sum of x (x) v_x over the generators of a model built from this ring;
        a Maurer-Cartan element by construction of the model differential.
        """
        element = {}
        for label, _ in self.dgl.generators:
            key = (self.ring.index(label), letter(self.algebra.generators.index(label)))
            add_term(element, key, Fraction(1))
        return element

"""
Weight-truncated envelope A (x) T(V) of a tensor dg Lie algebra, where T(V)
is the tensor algebra on the Lie generators. Only word length is cut;
the degree window is applied when projecting back to Lie elements, since
D lowers degree. Elements are sparse dicts keyed by ``(ring index, word)``;
exp and log are finite sums because every letter raises weight.
"""

import logging
from fractions import Fraction

from apps.linear.vectors import add_into, add_term, scale

from .tensor import koszul

logger = logging.getLogger(__name__)


class TensorEnvelope:

    def __init__(self, ring, algebra, dgl=None):
        self.ring = ring
        self.algebra = algebra
        self.dgl = dgl
        self.generators = algebra.generators
        self.truncation = algebra.truncation

    def one(self):
        return {(self.ring.unit_index, ()): Fraction(1)}

    def _fits(self, word):
        return len(word) <= self.truncation.max_weight

    def embed(self, x):
        """Image of a tensor Lie element."""
        result = {}
        for (i, b), c in x.items():
            for word, e in self.algebra.expand(b).items():
                add_term(result, (i, word), c * e)
        return result

    def project(self, X):
        """Inverse of ``embed`` on Lie elements; raises PropertyCheckFailed otherwise."""
        parts = {}
        for (i, word), c in X.items():
            parts.setdefault(i, {})[word] = c
        result = {}
        for i, poly in parts.items():
            for b, c in self.algebra.decompose(poly).items():
                if self.algebra.in_window(b):
                    add_term(result, (i, b), c)
        return result

    def multiply(self, X, Y):
        result = {}
        ring = self.ring
        for (i, w1), c1 in X.items():
            d1 = self.generators.word_degree(w1)
            for (j, w2), c2 in Y.items():
                word = w1 + w2
                if not self._fits(word):
                    continue
                product = ring.multiply_basis(i, j)
                if not product:
                    continue
                sign = koszul(d1, ring.degrees[j]) * c1 * c2
                for k, e in product.items():
                    add_term(result, (k, word), sign * e)
        return result

    def exp(self, X):
        """exp of an element without constant term."""
        result, term = self.one(), self.one()
        for k in range(1, self.truncation.max_weight + 1):
            term = scale(self.multiply(term, X), Fraction(1, k))
            if not term:
                break
            add_into(result, term)
        return result

    def log(self, X):
        """log of an element with constant term 1."""
        z = add_into(dict(X), self.one(), -1)
        result, power = {}, self.one()
        for k in range(1, self.truncation.max_weight + 1):
            power = self.multiply(power, z)
            if not power:
                break
            add_into(result, power, Fraction((-1) ** (k + 1), k))
        return result

    def _d_word(self, word):
        """D extended to words as a derivation of T(V)."""
        result = {}
        prefix_degree = 0
        for position, i in enumerate(word):
            image = self.dgl.differential.images.get(i)
            if image:
                sign = koszul(1, prefix_degree)
                for middle, e in self.algebra.expand_element(image).items():
                    new = word[:position] + middle + word[position + 1:]
                    if self._fits(new):
                        add_term(result, new, sign * e)
            prefix_degree += self.generators.degrees[i]
        return result

    def d(self, X):
        result = {}
        ring = self.ring
        for (i, word), c in X.items():
            for k, e in ring.differential.get(i, {}).items():
                add_term(result, (k, word), c * e)
            sign = koszul(1, ring.degrees[i]) * c
            for new, e in self._d_word(word).items():
                add_term(result, (i, new), sign * e)
        return result

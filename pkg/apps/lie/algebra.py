"""
Truncated free graded Lie algebras with brackets computed through the
tensor algebra.

A Lie element is a ``dict`` mapping ``LieWord`` to ``Fraction``. Every
basis element has an expansion in the tensor algebra (``dict`` word ->
``Fraction``) whose lexicographically smallest word is its leading word
with coefficient 1: the Lyndon word itself, or ``ww`` for a square.
Decomposing a tensor polynomial back into the basis peels off leading
words greedily.
"""

import logging
from fractions import Fraction

from apps.core.exceptions import PropertyCheckFailed
from apps.linear.vectors import add_into, add_term

from .generators import GradedGenerators, Truncation
from .words import LieWord, group_by_degree_weight, is_lyndon, letter, lyndon_basis, standard_factorization

logger = logging.getLogger(__name__)


def koszul(p, q):
    return -1 if (p * q) % 2 else 1


def tensor_multiply(x, y):
    """Concatenation product in the tensor algebra."""
    result = {}
    for a, ca in x.items():
        for b, cb in y.items():
            add_term(result, a + b, ca * cb)
    return result


class FreeLieAlgebra:
    """
    Free graded Lie algebra on ``generators`` in a ``truncation`` window.
    Brackets drop terms outside the window.
    """

    def __init__(self, generators, truncation):
        if not isinstance(generators, GradedGenerators):
            generators = GradedGenerators(generators)
        self.generators = generators
        self.truncation = truncation
        self._basis = None
        self._expansions = {}
        self._brackets = {}

    def __repr__(self):
        return f'FreeLieAlgebra({self.generators!r}, N={self.truncation.max_degree}, L={self.truncation.max_weight})'

    @property
    def basis(self):
        if self._basis is None:
            self._basis = lyndon_basis(self.generators, self.truncation)
        return self._basis

    def blocks(self):
        """Basis grouped by (degree, weight)."""
        return group_by_degree_weight(self.basis, self.generators)

    def degree(self, b):
        return self.generators.word_degree(b.letters())

    def element_degree(self, x):
        degrees = {self.degree(b) for b in x}
        return degrees.pop() if len(degrees) == 1 else None

    def in_window(self, b):
        return self.truncation.contains(self.degree(b), b.weight)

    def generator(self, label):
        return {letter(self.generators.index(label)): Fraction(1)}

    def word_element(self, labels, square=False):
        """Basis element from a list of generator labels."""
        word = tuple(self.generators.index(label) for label in labels)
        return {LieWord(word, square): Fraction(1)}

    def render(self, x):
        return {b.render(self.generators): c for b, c in sorted(x.items())}

    # tensor algebra

    def expand(self, b):
        cached = self._expansions.get(b)
        if cached is not None:
            return cached
        if b.square:
            p = self.expand(LieWord(b.word, False))
            result = tensor_multiply(p, p)
        elif len(b.word) == 1:
            result = {b.word: Fraction(1)}
        else:
            u, v = standard_factorization(b.word)
            result = self._commutator(self.expand(LieWord(u, False)), self.expand(LieWord(v, False)),
                                      self.generators.word_degree(u), self.generators.word_degree(v))
        self._expansions[b] = result
        return result

    def _commutator(self, x, y, dx, dy):
        result = tensor_multiply(x, y)
        add_into(result, tensor_multiply(y, x), -koszul(dx, dy))
        return result

    def expand_element(self, x):
        result = {}
        for b, c in x.items():
            add_into(result, self.expand(b), c)
        return result

    def decompose(self, poly):
        """Write a Lie polynomial in the super-Lyndon basis."""
        poly = dict(poly)
        result = {}
        while poly:
            lead = min(poly, key=lambda w: (len(w), w))
            coeff = poly[lead]
            if is_lyndon(lead):
                b = LieWord(lead, False)
            else:
                half = len(lead) // 2
                w = lead[:half]
                if len(lead) % 2 or lead[half:] != w or not is_lyndon(w) or self.generators.word_degree(w) % 2 == 0:
                    raise PropertyCheckFailed(
                        'Tensor polynomial is not a Lie element.',
                        witness=self.generators.spell(lead),
                    )
                b = LieWord(w, True)
            add_term(result, b, coeff)
            add_into(poly, self.expand(b), -coeff)
        return result

    # Lie structure

    def _bracket_basis(self, a, b):
        key = (a, b)
        cached = self._brackets.get(key)
        if cached is not None:
            return cached
        da, db = self.degree(a), self.degree(b)
        if not self.truncation.contains(da + db, a.weight + b.weight):
            result = {}
        else:
            result = self.decompose(self._commutator(self.expand(a), self.expand(b), da, db))
        self._brackets[key] = result
        return result

    def bracket(self, x, y):
        result = {}
        for a, ca in x.items():
            for b, cb in y.items():
                add_into(result, self._bracket_basis(a, b), ca * cb)
        return result

    def truncate(self, x):
        return {b: c for b, c in x.items() if self.in_window(b)}

    def weight_part(self, x, weight):
        return {b: c for b, c in x.items() if b.weight == weight}


def lie_weight_dims(module, p, truncation):
    """
    Dimensions per degree of the weight-``p`` part of the free graded Lie
    algebra on ``module``, given as generators or ``(label, degree)`` pairs.
    """
    if isinstance(module, dict):
        module = [(f'e{degree}_{i}', degree) for degree, count in module.items() for i in range(count)]
    generators = module if isinstance(module, GradedGenerators) else GradedGenerators(module)
    window = Truncation(truncation.max_degree, p)
    dims = {}
    for b in lyndon_basis(generators, window):
        if b.weight == p:
            degree = generators.word_degree(b.letters())
            dims[degree] = dims.get(degree, 0) + 1
    return dict(sorted(dims.items()))

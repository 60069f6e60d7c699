"""
Derivations and homomorphisms of truncated free Lie algebras, both
determined by their values on generators.
"""

import logging
from fractions import Fraction

from apps.core.exceptions import DegreeMismatch
from apps.linear.vectors import add_into, combination

from .words import LieWord, standard_factorization

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


def koszul(p, q):
    return -1 if (p * q) % 2 else 1


class Derivation:
    """
    Graded derivation of homological ``degree`` (``-1`` for differentials):
    D[a, b] = [Da, b] + (-1)^(|D||a|) [a, Db].
    """

    def __init__(self, algebra, images, degree=-1):
        self.algebra = algebra
        self.degree = degree
        self.images = {}
        generators = algebra.generators
        for label, image in images.items():
            index = generators.index(label)
            image = {b: Fraction(c) for b, c in image.items() if c}
            for b in image:
                if algebra.degree(b) != generators.degrees[index] + degree:
                    raise DegreeMismatch(
                        f'Image of {label!r} has degree {algebra.degree(b)}, '
                        f'expected {generators.degrees[index] + degree}.',
                        witness=[label, b.render(generators)],
                    )
            self.images[index] = algebra.truncate(image)
        self._cache = {}

    def __repr__(self):
        return f'Derivation(degree={self.degree}, generators={len(self.images)})'

    def image(self, label):
        return self.images.get(self.algebra.generators.index(label), {})

    def on_basis(self, b):
        cached = self._cache.get(b)
        if cached is not None:
            return cached
        algebra = self.algebra
        if len(b.word) == 1 and not b.square:
            result = self.images.get(b.word[0], {})
        elif b.square:
            w = {LieWord(b.word, False): Fraction(1)}
            dw = self.on_basis(LieWord(b.word, False))
            sign = koszul(self.degree, algebra.degree(LieWord(b.word, False)))
            result = algebra.bracket(dw, w)
            add_into(result, algebra.bracket(w, dw), sign)
            result = {k: HALF * c for k, c in result.items()}
        else:
            u, v = standard_factorization(b.word)
            pu, pv = LieWord(u, False), LieWord(v, False)
            sign = koszul(self.degree, algebra.degree(pu))
            result = algebra.bracket(self.on_basis(pu), {pv: Fraction(1)})
            add_into(result, algebra.bracket({pu: Fraction(1)}, self.on_basis(pv)), sign)
        self._cache[b] = result
        return result

    def __call__(self, x):
        result = {}
        for b, c in x.items():
            add_into(result, self.on_basis(b), c)
        return result

    def linear_part(self):
        """Weight-1 part of the images on generators, by generator index."""
        return {
            index: {b: c for b, c in image.items() if b.weight == 1}
            for index, image in self.images.items()
        }


def extend_derivation(algebra, images, degree=-1):
    """Derivation extending ``images`` (generator label -> element)."""
    return Derivation(algebra, images, degree)


def verify_square_zero(derivation, basis=None):
    """First basis word with D(D(word)) != 0, or ``None``."""
    for b in basis if basis is not None else derivation.algebra.basis:
        if derivation(derivation.on_basis(b)):
            logger.warning('D^2 != 0 on %s', b.render(derivation.algebra.generators))
            return b
    return None


class LieMap:
    """
    Homomorphism between truncated free Lie algebras determined by the
    images of the source generators; generators not listed map to zero.
    """

    def __init__(self, source, target, images):
        self.source = source
        self.target = target
        self.images = {
            source.generators.index(label): combination(image.items())
            for label, image in images.items()
        }
        self._cache = {}

    def on_basis(self, b):
        cached = self._cache.get(b)
        if cached is not None:
            return cached
        if b.square:
            w = self.on_basis(LieWord(b.word, False))
            result = {k: HALF * c for k, c in self.target.bracket(w, w).items()}
        elif len(b.word) == 1:
            result = self.images.get(b.word[0], {})
        else:
            u, v = standard_factorization(b.word)
            result = self.target.bracket(self.on_basis(LieWord(u, False)), self.on_basis(LieWord(v, False)))
        self._cache[b] = result
        return result

    def __call__(self, x):
        result = {}
        for b, c in x.items():
            add_into(result, self.on_basis(b), c)
        return result

"""
Super-Lyndon words: the basis of a free graded Lie algebra.

A basis element is either a Lyndon word with its standard bracketing or
the square ``[w, w]`` of a Lyndon word of odd degree. Words are tuples of
letter positions in a ``GradedGenerators`` order.
"""

import logging
from collections import namedtuple

from django.conf import settings

from apps.core.exceptions import TruncationTooLarge

logger = logging.getLogger(__name__)


class LieWord(namedtuple('LieWord', ['word', 'square'])):
    """Basis element; ``square`` marks [w, w] for odd w."""

    __slots__ = ()

    @property
    def weight(self):
        return len(self.word) * (2 if self.square else 1)

    def letters(self):
        return self.word + self.word if self.square else self.word

    def render(self, generators):
        text = bracketing(self.word, generators)
        return f'[{text},{text}]' if self.square else text


def letter(i):
    return LieWord((i,), False)


def is_lyndon(word):
    """Strictly smaller than each of its proper suffixes."""
    return bool(word) and all(word < word[i:] for i in range(1, len(word)))


def standard_factorization(word):
    """
    Split a Lyndon word of length >= 2 as ``u v`` with ``v`` its longest
    proper Lyndon suffix.
    """
    for i in range(1, len(word)):
        if is_lyndon(word[i:]):
            return word[:i], word[i:]
    raise ValueError(f'{word} has no proper Lyndon suffix')


def bracketing(word, generators):
    if len(word) == 1:
        return generators.labels[word[0]]
    u, v = standard_factorization(word)
    return f'[{bracketing(u, generators)},{bracketing(v, generators)}]'


def enumerate_lyndon(generators, truncation, guard=None):
    """
    Lyndon words with length <= max_weight and degree <= max_degree, by a
    prenecklace search pruned on degree.
    """
    k = len(generators)
    degrees = generators.degrees
    max_len = truncation.max_weight
    max_deg = truncation.max_degree
    guard = guard or settings.MALCEV['BASIS_GUARD']
    found = []
    word = [0] * (max_len + 1)

    def extend(t, p, degree):
        # word[1:t] is a prenecklace of period p
        if t - 1 > 0 and (t - 1) == p:
            found.append(tuple(word[1:t]))
            if len(found) > guard:
                raise TruncationTooLarge(
                    f'More than {guard} Lyndon words in the window.',
                    witness={'max_degree': max_deg, 'max_weight': max_len},
                )
        if t > max_len:
            return
        start = word[t - p] if t > 1 else 0
        for j in range(start, k):
            if degree + degrees[j] > max_deg:
                continue
            word[t] = j
            extend(t + 1, p if (t > 1 and j == word[t - p]) else t, degree + degrees[j])

    extend(1, 1, 0)
    return found


def lyndon_basis(generators, truncation, guard=None):
    """
    Super-Lyndon basis in the window, sorted by (degree, weight, word,
    square).
    """
    basis = []
    for word in enumerate_lyndon(generators, truncation, guard):
        basis.append(LieWord(word, False))
        degree = generators.word_degree(word)
        if degree % 2 and truncation.contains(2 * degree, 2 * len(word)):
            basis.append(LieWord(word, True))
    guard = guard or settings.MALCEV['BASIS_GUARD']
    if len(basis) > guard:
        raise TruncationTooLarge(
            f'Basis of {len(basis)} words exceeds the guard {guard}.',
            witness={'max_degree': truncation.max_degree, 'max_weight': truncation.max_weight},
        )
    basis.sort(key=lambda b: (generators.word_degree(b.letters()), b.weight, b.word, b.square))
    logger.debug('Super-Lyndon basis: %d words for %r', len(basis), truncation)
    return basis


def group_by_degree_weight(basis, generators):
    groups = {}
    for b in basis:
        groups.setdefault((generators.word_degree(b.letters()), b.weight), []).append(b)
    return groups

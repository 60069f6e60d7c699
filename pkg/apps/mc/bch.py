"""
Baker-Campbell-Hausdorff products computed as log(exp x exp y) in the
truncated tensor algebra.
"""

import logging
from functools import lru_cache

from django.conf import settings

from apps.core.exceptions import DegreeMismatch, TruncationTooLarge
from apps.lie.algebra import FreeLieAlgebra
from apps.lie.generators import Truncation
from apps.lie.words import standard_factorization
from apps.linear.vectors import add_into
from apps.rings.catalog import point

from .envelope import TensorEnvelope

logger = logging.getLogger(__name__)


def _lift(x):
    return {(0, b): c for b, c in x.items()}


def _check_even(algebra, x):
    for b in x:
        if algebra.degree(b) % 2:
            raise DegreeMismatch(
                'BCH products need components of even degree.',
                witness=b.render(algebra.generators),
            )


def _check_size(algebra, x, y):
    letters = {i for element in (x, y) for b in element for i in b.letters()}
    weight = algebra.truncation.max_weight
    words = sum(len(letters) ** k for k in range(weight + 1))
    guard = settings.MALCEV['BASIS_GUARD']
    if words > guard:
        raise TruncationTooLarge(
            'BCH envelope exceeds the basis guard.',
            witness={'words': words, 'guard': guard},
        )


def bch(algebra, x, y, t=None):
    """
    log(exp(x) exp(y)) for Lie elements of ``algebra``; ``t`` overrides its
    truncation window.
    """
    if t is not None:
        algebra = FreeLieAlgebra(algebra.generators, t)
    _check_even(algebra, x)
    _check_even(algebra, y)
    _check_size(algebra, x, y)
    envelope = TensorEnvelope(point(), algebra)
    product = envelope.multiply(envelope.exp(envelope.embed(_lift(x))), envelope.exp(envelope.embed(_lift(y))))
    result = {b: c for (_, b), c in envelope.project(envelope.log(product)).items()}
    logger.debug('BCH at weight %d has %d terms', algebra.truncation.max_weight, len(result))
    return result


@lru_cache(maxsize=None)
def bch_polynomial(weight):
    """BCH series of two degree-0 generators x < y up to ``weight``."""
    algebra = FreeLieAlgebra([('x', 0), ('y', 0)], Truncation(0, weight))
    return algebra, bch(algebra, algebra.generator('x'), algebra.generator('y'))


def bch_evaluate(bracket, x, y, depth):
    """
    BCH product in any Lie algebra where brackets of more than ``depth``
    elements vanish: the universal series evaluated through ``bracket``.
    """
    if depth < 1:
        return {}
    _, series = bch_polynomial(depth)
    values = {(0,): dict(x), (1,): dict(y)}

    def value(word):
        cached = values.get(word)
        if cached is None:
            u, v = standard_factorization(word)
            cached = bracket(value(u), value(v))
            values[word] = cached
        return cached

    result = {}
    for b, c in series.items():
        add_into(result, value(b.word), c)
    return result

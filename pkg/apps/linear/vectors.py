"""
Sparse linear combinations over the rationals.

A combination is a plain ``dict`` mapping hashable basis keys to nonzero
``Fraction`` coefficients. Functions here never mutate their inputs unless
the name says so (``add_into``).
"""

from fractions import Fraction


def combination(items=()):
    """Build a pruned combination from (key, coefficient) pairs."""
    result = {}
    for key, coeff in items:
        add_term(result, key, coeff)
    return result


def add_term(target, key, coeff):
    if not coeff:
        return target
    value = target.get(key, 0) + Fraction(coeff)
    if value:
        target[key] = value
    else:
        target.pop(key, None)
    return target


def add_into(target, source, coeff=1):
    """target += coeff * source, in place."""
    if not coeff:
        return target
    coeff = Fraction(coeff)
    for key, value in source.items():
        add_term(target, key, coeff * value)
    return target


def add(*vectors):
    result = {}
    for vector in vectors:
        add_into(result, vector)
    return result


def sub(a, b):
    return add_into(dict(a), b, -1)


def scale(vector, coeff):
    coeff = Fraction(coeff)
    if not coeff:
        return {}
    return {key: coeff * value for key, value in vector.items()}


def linear_combination(pairs):
    """Sum of coeff * vector over (coeff, vector) pairs."""
    result = {}
    for coeff, vector in pairs:
        add_into(result, vector, coeff)
    return result


def is_zero(vector):
    return not any(vector.values())


def apply_linear(vector, image_of):
    """Extend ``image_of(key) -> combination`` linearly."""
    result = {}
    for key, coeff in vector.items():
        add_into(result, image_of(key), coeff)
    return result


def to_dense(vector, keys):
    index = {key: i for i, key in enumerate(keys)}
    dense = [Fraction(0)] * len(keys)
    for key, coeff in vector.items():
        dense[index[key]] += coeff
    return dense


def from_dense(values, keys):
    return combination(zip(keys, values))

"""
Monotone maps between ordinals [n] = {0, ..., n} and shuffle permutations.

A monotone map [k] -> [n] is a tuple of length k + 1 listing its values.
One shuffle routine serves the shuffle product of cosimplicial algebras
and the Eilenberg-Zilber bracket of simplicial Lie algebras.
"""

from functools import lru_cache
from itertools import combinations


def coface(i, n):
    """d^i: [n] -> [n + 1], skipping i."""
    return tuple(j if j < i else j + 1 for j in range(n + 1))


def codegeneracy(i, n):
    """s^i: [n] -> [n - 1], hitting i twice."""
    return tuple(j if j <= i else j - 1 for j in range(n + 1))


def compose(outer, inner):
    """outer o inner."""
    return tuple(outer[j] for j in inner)


def omitting(missing, n):
    """The injection into [n] whose image misses ``missing``."""
    skip = set(missing)
    return tuple(j for j in range(n + 1) if j not in skip)


@lru_cache(maxsize=None)
def shuffles(p, q):
    """
    (mu, nu, sign) over (p, q)-shuffles: mu and nu partition {0, ..., p+q-1}
    into increasing sequences of lengths p and q; sign is that of the
    permutation (mu_1, ..., mu_p, nu_1, ..., nu_q).
    """
    result = []
    for mu in combinations(range(p + q), p):
        chosen = set(mu)
        nu = tuple(j for j in range(p + q) if j not in chosen)
        inversions = sum(1 for a in mu for b in nu if a > b)
        result.append((mu, nu, -1 if inversions % 2 else 1))
    return tuple(result)


def surjections(n):
    """Monotone surjections [n] -> [m] for every m, identity first."""
    found = []
    for m in range(n, -1, -1):
        for jumps in combinations(range(1, n + 1), m):
            steps = set(jumps)
            value, eta = 0, [0]
            for t in range(1, n + 1):
                value += t in steps
                eta.append(value)
            found.append(tuple(eta))
    return found

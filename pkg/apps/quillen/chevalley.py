"""
Chevalley-Eilenberg cochains of a free dg Lie algebra: the graded
polynomial ring on the shifted dual of the basis, with differential dual
to D and to the bracket.

For a basis word e of degree |e| there is a generator xi_e of degree
|e| + 1, and

    D xi_e = - sum (-1)^(|e'| + 1) delta^e_e' xi_e'
             - 1/2 sum (-1)^(|e'|(|e''| + 1)) C^e_e'e'' xi_e' xi_e''

where delta^e_e' is the coefficient of e in D e' and C^e_e'e'' the
coefficient of e in [e', e''].

When D preserves formality weight the complex splits into blocks of
fixed total weight; blocks up to the cutoff are complete and exact.
Otherwise monomials are cut at polynomial degree ``cutoff``.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from django.conf import settings

from apps.core.exceptions import SignConventionFailure, TruncationTooLarge
from apps.linear.complexes import COCHAIN, ChainComplexQ, homology
from apps.linear.matrix import Matrix
from apps.linear.vectors import add_term, from_dense, to_dense
from apps.rings.cohomology import algebra_cohomology, ring_cohomology

from .construction import build_G

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


def _sign(n):
    return -1 if n % 2 else 1


class CECochains:
    """
    Monomials are sorted tuples of generator indices; odd generators occur
    at most once.
    """

    def __init__(self, dgl, cutoff=None, budget=None):
        self.dgl = dgl
        truncation = dgl.truncation
        self.homogeneous = dgl.is_weight_homogeneous()
        if self.homogeneous:
            complete = min(truncation.max_weight, truncation.max_degree + 1)
            if cutoff is not None and cutoff > complete:
                logger.warning('CE weight cutoff %d lowered to %d', cutoff, complete)
            self.cutoff = complete if cutoff is None else min(cutoff, complete)
            self.bound = self.cutoff
        else:
            self.cutoff = truncation.max_weight if cutoff is None else cutoff
            self.bound = max(truncation.max_degree - 1, 0)
        self.budget = budget or settings.MALCEV['ENUMERATION_BUDGET']

        algebra = dgl.algebra
        self.words = [
            b for b in algebra.basis
            if not self.homogeneous or dgl.formality_weight(b) <= self.cutoff
        ]
        self.degrees = [algebra.degree(b) + 1 for b in self.words]
        self.weights = [dgl.formality_weight(b) for b in self.words]
        self.labels = ['s' + b.render(dgl.generators) for b in self.words]
        self._position = {b: i for i, b in enumerate(self.words)}

        self.monomials = self._enumerate()
        self._allowed = set(self.monomials)
        self.generator_images = self._generator_images()
        self._check_square_zero()
        logger.info('CE cochains of %s: %d generators, %d monomials',
                    dgl.name, len(self.words), len(self.monomials))

    # monomials

    def degree(self, monomial):
        return sum(self.degrees[i] for i in monomial)

    def weight(self, monomial):
        return sum(self.weights[i] for i in monomial)

    def block(self, monomial):
        return self.weight(monomial) if self.homogeneous else None

    def label(self, monomial):
        return '*'.join(self.labels[i] for i in monomial) or '1'

    def _admissible(self, degree, weight, length):
        if self.homogeneous:
            return weight <= self.cutoff
        return length <= self.cutoff and degree <= self.bound + 1

    def _enumerate(self):
        found = []

        def extend(start, monomial, degree, weight):
            found.append(tuple(monomial))
            if len(found) > self.budget:
                raise TruncationTooLarge(
                    'Chevalley-Eilenberg monomials exceed the enumeration budget.',
                    witness={'budget': self.budget},
                )
            for i in range(start, len(self.words)):
                d, w = self.degrees[i], self.weights[i]
                if not self._admissible(degree + d, weight + w, len(monomial) + 1):
                    continue
                monomial.append(i)
                extend(i + 1 if d % 2 else i, monomial, degree + d, weight + w)
                monomial.pop()

        extend(0, [], 0, 0)
        return sorted(found, key=lambda m: (self.degree(m), m))

    def product(self, a, b):
        """Sign and sorted monomial of a * b, or (0, None) when it vanishes."""
        sign = 1
        for x in a:
            if self.degrees[x] % 2 == 0:
                continue
            for y in b:
                if self.degrees[y] % 2 == 0:
                    continue
                if x == y:
                    return 0, None
                if y < x:
                    sign = -sign
        return sign, tuple(sorted(a + b))

    def multiply(self, u, v):
        """Product of sparse cochains, dropping monomials outside the complex."""
        result = {}
        for a, ca in u.items():
            for b, cb in v.items():
                sign, m = self.product(a, b)
                if sign and m in self._allowed:
                    add_term(result, m, sign * ca * cb)
        return result

    # differential

    def _generator_images(self):
        dgl = self.dgl
        algebra = dgl.algebra
        images = [{} for _ in self.words]
        for j, source in enumerate(self.words):
            for e, coeff in dgl.differential.on_basis(source).items():
                i = self._position.get(e)
                if i is not None:
                    add_term(images[i], (j,), -_sign(algebra.degree(source) + 1) * coeff)
        if self.homogeneous or self.cutoff >= 2:
            for j, left in enumerate(self.words):
                for k, right in enumerate(self.words):
                    if self.homogeneous and self.weights[j] + self.weights[k] > self.cutoff:
                        continue
                    sign, m = self.product((j,), (k,))
                    if not sign:
                        continue
                    koszul = _sign(algebra.degree(left) * (algebra.degree(right) + 1))
                    for e, coeff in algebra.bracket({left: 1}, {right: 1}).items():
                        i = self._position.get(e)
                        if i is not None:
                            add_term(images[i], m, -HALF * koszul * coeff * sign)
        return [{m: c for m, c in image.items() if m in self._allowed} for image in images]

    def differential(self, u):
        """D on a sparse cochain, as a derivation."""
        result = {}
        for monomial, c in u.items():
            prefix_degree = 0
            for position, g in enumerate(monomial):
                outer = _sign(prefix_degree) * c
                prefix, suffix = monomial[:position], monomial[position + 1:]
                for term, coeff in self.generator_images[g].items():
                    s1, m1 = self.product(prefix, term)
                    if not s1:
                        continue
                    s2, m2 = self.product(m1, suffix)
                    if s2 and m2 in self._allowed:
                        add_term(result, m2, outer * s1 * s2 * coeff)
                prefix_degree += self.degrees[g]
        return result

    def _check_square_zero(self):
        for i, label in enumerate(self.labels):
            if self.degrees[i] >= self.bound:
                continue
            if self.differential(self.generator_images[i]):
                raise SignConventionFailure(
                    'Chevalley-Eilenberg differential does not square to zero.',
                    witness=label,
                )

    # cohomology

    def basis(self, n, block=None):
        return [
            m for m in self.monomials
            if self.degree(m) == n and (block is None or self.block(m) == block)
        ]

    def complex(self, block=None):
        top = self.bound + 1
        bases = {n: self.basis(n, block) for n in range(top + 1)}
        differentials = {}
        for n in range(top):
            source, target = bases[n], bases[n + 1]
            index = {m: r for r, m in enumerate(target)}
            rows = [[0] * len(source) for _ in target]
            for col, m in enumerate(source):
                for image, c in self.differential({m: Fraction(1)}).items():
                    if image in index:
                        rows[index[image]][col] = c
            differentials[n] = Matrix(rows, len(source))
        return ChainComplexQ(bases, differentials, degree=COCHAIN)

    def blocks(self):
        return sorted({self.block(m) for m in self.monomials}, key=lambda b: (b is None, b))

    def cohomology_dims(self):
        """dim H^n for n up to ``bound``, summed over weight blocks."""
        dims = {n: 0 for n in range(self.bound + 1)}
        for block in self.blocks():
            complex_ = self.complex(block)
            for n in dims:
                dims[n] += homology(complex_, n).dimension
        return dims

    def cohomology_ring(self):
        cochains = self.complex()
        bases = {n: cochains.basis(n) for n in cochains.degrees}

        def multiply(p, u, q, v):
            if p + q not in bases:
                return []
            product = self.multiply(from_dense(u, bases[p]), from_dense(v, bases[q]))
            return to_dense(product, bases[p + q])

        relabelled = ChainComplexQ(
            {n: [self.label(m) for m in basis] for n, basis in bases.items()},
            cochains.differentials,
            degree=COCHAIN,
        )
        return algebra_cohomology(
            relabelled, multiply, [1], name=self.dgl.name, degrees=range(self.bound + 1),
        )

    @property
    def flags(self):
        flags = []
        if not self.homogeneous and any(d == 2 for d in self.degrees):
            flags.append(f'polynomial_cutoff={self.cutoff}')
        return flags


def ce_cochains(m, t=None, cutoff=None):
    """
    Chevalley-Eilenberg cochains of ``m``. The window of ``m`` bounds the
    generators; ``t`` may only narrow the weight cutoff.
    """
    if t is not None and cutoff is None:
        cutoff = t.max_weight
    return CECochains(m, cutoff=cutoff)


@dataclass
class RoundTrip:
    name: str
    bound: int
    expected: dict
    found: dict
    flags: list = field(default_factory=list)

    @property
    def ok(self):
        return self.expected == self.found

    def document(self):
        return {
            'name': self.name,
            'bound': self.bound,
            'expected': self.expected,
            'found': self.found,
            'ok': self.ok,
            'flags': self.flags,
        }


def round_trip(ring, t):
    """
    Compare the betti numbers of ``ring`` with the cohomology of the
    Chevalley-Eilenberg cochains of its free chain Lie model.
    """
    ring = ring_cohomology(ring)
    cochains = ce_cochains(build_G(ring, t), t)
    found = cochains.cohomology_dims()
    betti = ring.dimensions()
    expected = {n: betti[n] if n < len(betti) else 0 for n in found}
    result = RoundTrip(ring.name, cochains.bound, expected, found, cochains.flags)
    log = logger.info if result.ok else logger.warning
    log('CE round trip of %s: expected %s, found %s', ring.name, expected, found)
    return result

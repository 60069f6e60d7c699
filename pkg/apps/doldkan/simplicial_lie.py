"""
Simplicial Lie algebras over Q and their normalized chain Lie algebras.

A level-n element is a sparse dict over ``basis(n)``. A monotone map
theta: [k] -> [n] acts from level n to level k; faces and degeneracies are
the cases theta = d^i and theta = s^i.
"""

import logging
from fractions import Fraction
from itertools import product

from apps.core.exceptions import PropertyCheckFailed, SimplicialIdentityViolation
from apps.linear.elimination import independent_columns, solve_many
from apps.linear.matrix import Matrix
from apps.linear.vectors import add_into, scale, to_dense

from .shuffles import codegeneracy, coface, compose, shuffles, surjections

logger = logging.getLogger(__name__)


def _sign(n):
    return -1 if n % 2 else 1


def factor(f):
    """Epi-mono factorization of a monotone map: ``f = mono o epi``."""
    image = sorted(set(f))
    position = {v: j for j, v in enumerate(image)}
    return tuple(position[v] for v in f), tuple(image)


def nilpotency_of(algebra):
    truncation = getattr(algebra, 'truncation', None)
    if truncation is not None:
        return truncation.max_weight
    return algebra.nilpotency


class SimplicialLie:
    """Levels ``0..top``; subclasses provide ``basis``, ``apply`` and ``bracket_basis``."""

    top = 0
    nilpotency = 1
    name = 'g'

    def basis(self, n):
        raise NotImplementedError

    def apply(self, theta, n, key):
        raise NotImplementedError

    def bracket_basis(self, n, a, b):
        return {}

    def label(self, key):
        return str(key)

    def dimension(self, n):
        return len(self.basis(n))

    def operate(self, theta, n, x):
        result = {}
        for key, c in x.items():
            add_into(result, self.apply(theta, n, key), c)
        return result

    def face(self, i, n, x):
        """d_i from level n to level n - 1."""
        return self.operate(coface(i, n - 1), n, x)

    def degeneracy(self, i, n, x):
        """s_i from level n to level n + 1."""
        return self.operate(codegeneracy(i, n + 1), n, x)

    def bracket(self, n, x, y):
        result = {}
        for a, c in x.items():
            for b, e in y.items():
                add_into(result, self.bracket_basis(n, a, b), c * e)
        return result

    def verify(self, top=None):
        """Simplicial identities, and faces and degeneracies preserving brackets."""
        top = self.top if top is None else top
        for n in range(top + 1):
            for key in self.basis(n):
                x = {key: Fraction(1)}
                for j in range(n + 1):
                    for i in range(j):
                        if n >= 2:
                            self._expect(self.face(i, n - 1, self.face(j, n, x)),
                                         self.face(j - 1, n - 1, self.face(i, n, x)), 'face', n, key)
                    if n + 2 > top:
                        continue
                    for i in range(j + 1):
                        self._expect(self.degeneracy(i, n + 1, self.degeneracy(j, n, x)),
                                     self.degeneracy(j + 1, n + 1, self.degeneracy(i, n, x)),
                                     'degeneracy', n, key)
                if n + 1 > top:
                    continue
                for j in range(n + 1):
                    lifted = self.degeneracy(j, n, x)
                    for i in range(n + 2):
                        moved = self.face(i, n + 1, lifted)
                        if i < j:
                            expected = self.degeneracy(j - 1, n - 1, self.face(i, n, x))
                        elif i in (j, j + 1):
                            expected = x
                        else:
                            expected = self.degeneracy(j, n - 1, self.face(i - 1, n, x))
                        self._expect(moved, expected, 'mixed', n, key)
            self._verify_homomorphisms(n, top)
        logger.debug('Simplicial Lie identities hold for %s up to level %d', self.name, top)

    def _verify_homomorphisms(self, n, top):
        for a, b in product(self.basis(n), repeat=2):
            x, y = {a: Fraction(1)}, {b: Fraction(1)}
            bracket = self.bracket(n, x, y)
            maps = [(self.face, i, n - 1) for i in range(n + 1) if n > 0]
            if n + 1 <= top:
                maps += [(self.degeneracy, i, n + 1) for i in range(n + 1)]
            for op, i, target in maps:
                left = op(i, n, bracket)
                right = self.bracket(target, op(i, n, x), op(i, n, y))
                if left != right:
                    raise PropertyCheckFailed(
                        'Structure map does not preserve the bracket.',
                        witness={'level': n, 'pair': [self.label(a), self.label(b)]},
                    )

    def _expect(self, left, right, kind, n, key):
        if left != right:
            raise SimplicialIdentityViolation(
                f'Simplicial {kind} identity fails at level {n}.',
                witness={'key': self.label(key)},
            )


class ConstantLie(SimplicialLie):
    """The constant simplicial Lie algebra on a nilpotent Lie algebra of degree 0."""

    def __init__(self, algebra, top=3, name=None):
        self.algebra = algebra
        self.top = top
        self.nilpotency = nilpotency_of(algebra)
        self.name = name or 'const'

    def basis(self, n):
        return self.algebra.basis

    def apply(self, theta, n, key):
        return {key: Fraction(1)}

    def bracket_basis(self, n, a, b):
        return self.algebra.bracket({a: 1}, {b: 1})

    def label(self, key):
        (text, _), = self.algebra.render({key: 1}).items()
        return text


class AbelianLie(SimplicialLie):
    """
    The Dold-Kan simplicial vector space of a chain complex V, abelian.

    Level-n keys are ``(eta, v)`` with eta: [n] -> [m] a monotone surjection
    and v a basis key of V_m.
    """

    nilpotency = 1

    def __init__(self, complex_, top=3, name=None):
        self.complex = complex_
        self.top = top
        self.name = name or 'gamma'
        self._basis = {}

    def basis(self, n):
        cached = self._basis.get(n)
        if cached is None:
            cached = [
                (eta, (eta[-1], k))
                for eta in surjections(n)
                for k in range(self.complex.dimension(eta[-1]))
            ]
            self._basis[n] = cached
        return cached

    def apply(self, theta, n, key):
        eta, (m, k) = key
        epi, mono = factor(compose(eta, theta))
        if mono == tuple(range(m + 1)):
            return {(epi, (m, k)): Fraction(1)}
        if mono == tuple(range(1, m + 1)):
            matrix = self.complex.differential(m)
            return {(epi, (m - 1, r)): matrix[r, k] for r in range(matrix.nrows) if matrix[r, k]}
        return {}

    def label(self, key):
        eta, (m, k) = key
        text = self.complex.basis(m)[k]
        if eta == tuple(range(len(eta))):
            return text
        return f'{text}<{"".join(map(str, eta))}>'


class NerveTensorLie(SimplicialLie):
    """
    Q[B(Z/order)] (x) h: simplices of the nerve of a cyclic group with
    coefficients in a Lie algebra h of degree 0, multiplied simplexwise.
    """

    def __init__(self, algebra, order, top=3, name=None):
        self.algebra = algebra
        self.order = order
        self.top = top
        self.nilpotency = nilpotency_of(algebra)
        self.name = name or f'nerve{order}'
        self._basis = {}

    def basis(self, n):
        cached = self._basis.get(n)
        if cached is None:
            cached = [
                (simplex, b)
                for simplex in product(range(self.order), repeat=n)
                for b in self.algebra.basis
            ]
            self._basis[n] = cached
        return cached

    def apply(self, theta, n, key):
        simplex, b = key
        moved = tuple(
            sum(simplex[theta[j - 1]:theta[j]]) % self.order
            for j in range(1, len(theta))
        )
        return {(moved, b): Fraction(1)}

    def bracket_basis(self, n, a, b):
        (s, x), (t, y) = a, b
        simplex = tuple((u + v) % self.order for u, v in zip(s, t))
        return {(simplex, z): c for z, c in self.algebra.bracket({x: 1}, {y: 1}).items()}

    def label(self, key):
        simplex, b = key
        (text, _), = self.algebra.render({b: 1}).items()
        return f'{text}{list(simplex)}'

    def base_point(self, n):
        """
        The inclusion of the constant algebra at the level-n simplex
        (0, ..., 0), as ``{key: {key: c}}`` for push_lie.
        """
        simplex = (0,) * n
        return {b: {(simplex, b): Fraction(1)} for b in self.algebra.basis}

    def at_base_point(self, x):
        """Element of A (x) h rewritten with level-0 keys of this algebra."""
        return {(i, ((), b)): c for (i, b), c in x.items()}


class ChainDifferential:
    """Degree -1 differential of a chain Lie algebra."""

    def __init__(self, algebra):
        self.algebra = algebra

    def on_basis(self, b):
        return self.algebra.d_basis(b)

    def __call__(self, x):
        result = {}
        for b, c in x.items():
            add_into(result, self.on_basis(b), c)
        return result


class ChainLieAlgebra:
    """
    A finite dg Lie algebra in degrees ``0..top`` with keys ``(n, k)``.

    Brackets landing above ``top`` are dropped, so the axioms are only
    checked where every degree involved stays within the window.
    """

    def __init__(self, name, bases, bracket_basis, d_basis, top, nilpotency):
        self.name = name
        self.bases = {n: list(labels) for n, labels in bases.items()}
        self.top = top
        self.nilpotency = nilpotency
        self._bracket_basis = bracket_basis
        self._d_basis = d_basis
        self._brackets = {}
        self.differential = ChainDifferential(self)

    def __repr__(self):
        return f'ChainLieAlgebra({self.name}, dims={self.dimensions()})'

    @property
    def algebra(self):
        return self

    @property
    def basis(self):
        return [(n, k) for n in sorted(self.bases) for k in range(len(self.bases[n]))]

    def dimensions(self):
        return [len(self.bases.get(n, [])) for n in range(self.top + 1)]

    def degree(self, b):
        return b[0]

    def render(self, x):
        return {self.bases[n][k]: c for (n, k), c in sorted(x.items())}

    def d_basis(self, b):
        return self._d_basis(b)

    def bracket(self, x, y):
        result = {}
        for a, c in x.items():
            for b, e in y.items():
                key = (a, b)
                cached = self._brackets.get(key)
                if cached is None:
                    cached = self._bracket_basis(a, b) if a[0] + b[0] <= self.top else {}
                    self._brackets[key] = cached
                add_into(result, cached, c * e)
        return result

    def check_axioms(self):
        """Graded antisymmetry, Jacobi and Leibniz within the window, and d^2 = 0."""
        d = self.differential
        basis = self.basis
        for a in basis:
            if d(d({a: 1})):
                raise PropertyCheckFailed('Differential does not square to zero.', witness=self.render({a: 1}))
        for a, b in product(basis, repeat=2):
            x, y = {a: Fraction(1)}, {b: Fraction(1)}
            p, q = a[0], b[0]
            if p + q > self.top:
                continue
            swapped = self.bracket(y, x)
            if add_into(dict(self.bracket(x, y)), swapped, _sign(p * q)):
                raise PropertyCheckFailed('Bracket is not graded antisymmetric.',
                                          witness=[*self.render(x), *self.render(y)])
            leibniz = add_into(dict(self.bracket(d(x), y)), self.bracket(x, d(y)), _sign(p))
            if d(self.bracket(x, y)) != leibniz:
                raise PropertyCheckFailed('Differential is not a derivation of the bracket.',
                                          witness=[*self.render(x), *self.render(y)])
            for c in basis:
                r = c[0]
                if p + q + r > self.top:
                    continue
                z = {c: Fraction(1)}
                total = scale(self.bracket(x, self.bracket(y, z)), _sign(p * r))
                add_into(total, self.bracket(y, self.bracket(z, x)), _sign(q * p))
                add_into(total, self.bracket(z, self.bracket(x, y)), _sign(r * q))
                if total:
                    raise PropertyCheckFailed('Jacobi identity fails.',
                                              witness=[*self.render(x), *self.render(y), *self.render(z)])
        logger.debug('Chain Lie axioms hold for %s', self.name)


class NormalizedLie(ChainLieAlgebra):
    """N(g): g_n modulo degeneracies with the shuffle bracket."""

    def __init__(self, g, top):
        self.g = g
        self.lifts = {}
        self._quotient = {}
        bases = {}
        for n in range(top + 1):
            self._split(n)
            bases[n] = [g.label(key) for key in self.lifts[n]]
        super().__init__(f'N({g.name})', bases, self._shuffle_bracket, self._face_sum, top, g.nilpotency)

    def _split(self, n):
        g = self.g
        basis = g.basis(n)
        degenerate = []
        if n:
            for i in range(n):
                for key in g.basis(n - 1):
                    image = g.degeneracy(i, n - 1, {key: Fraction(1)})
                    if image:
                        degenerate.append(to_dense(image, basis))
        units = [[Fraction(int(r == k)) for r in range(len(basis))] for k in range(len(basis))]
        chosen = independent_columns(degenerate + units, len(basis))
        kept = len([i for i in chosen if i < len(degenerate)])
        self.lifts[n] = [basis[i - len(degenerate)] for i in chosen if i >= len(degenerate)]
        columns = [(degenerate + units)[i] for i in chosen]
        solutions = solve_many(Matrix.from_columns(columns, len(basis)), units) if basis else []
        self._quotient[n] = {
            key: {(n, k): c for k, c in enumerate(x[kept:]) if c}
            for key, x in zip(basis, solutions)
        }

    def quotient(self, n, x):
        """Class of a level-n element of g."""
        result = {}
        for key, c in x.items():
            add_into(result, self._quotient[n][key], c)
        return result

    def lift(self, b):
        n, k = b
        return {self.lifts[n][k]: Fraction(1)}

    def _face_sum(self, b):
        n = b[0]
        if n == 0:
            return {}
        x = self.lift(b)
        total = {}
        for i in range(n + 1):
            add_into(total, self.g.face(i, n, x), _sign(i))
        return self.quotient(n - 1, total)

    def _shuffle_bracket(self, a, b):
        p, q = a[0], b[0]
        n = p + q
        result = {}
        for mu, nu, sign in shuffles(p, q):
            x = self.lift(a)
            for level, i in enumerate(nu, start=p):
                x = self.g.degeneracy(i, level, x)
            y = self.lift(b)
            for level, i in enumerate(mu, start=q):
                y = self.g.degeneracy(i, level, y)
            add_into(result, self.g.bracket(n, x, y), sign)
        return self.quotient(n, result)


def normalize_lie(g, top=None):
    """Normalized chain Lie algebra of ``g`` in degrees ``0..top``."""
    top = g.top if top is None else top
    algebra = NormalizedLie(g, top)
    logger.info('Normalized %s: dims %s', g.name, algebra.dimensions())
    return algebra

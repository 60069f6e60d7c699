"""
Maurer-Cartan elements and gauges of a cosimplicial algebra D(A) with
coefficients in a simplicial Lie algebra g, and their normalization to
A (x) N(g).

A simplicial MC element is ``{n: eta_n}`` with eta_n = log omega_n in
D^(n+1)A (x) g_n, keyed by ``(D(A) key, g key)``. It satisfies

    s^0 eta_n = 0
    d_i eta_n = d^(i+1) eta_(n-1)                        for i > 0
    d_0 eta_n = bch(d^1 eta_(n-1), -d^0 eta_(n-1))
    s_i eta_n = s^(i+1) eta_(n+1)

where lower indices act on g and upper ones on D(A). A gauge is
``{n: u_n}`` with u_n in D^nA (x) g_n, d_i u_n = d^i u_(n-1) for i > 0 and
s_i u_n = s^i u_(n+1); it acts by

    (u * eta)_n = bch(bch(d_0 u_(n+1), eta_n), -d^0 u_n).
"""

import logging
from fractions import Fraction
from functools import partial

from apps.core.exceptions import NotMC, PropertyCheckFailed, SimplicialIdentityViolation
from apps.linear.elimination import kernel_basis, rank
from apps.linear.matrix import Matrix
from apps.linear.vectors import add_into, add_term, scale, to_dense
from apps.mc.bch import bch_evaluate
from apps.mc.gauge import is_mc, series_action
from apps.mc.tensor import TensorDGLA

from .shuffles import codegeneracy, coface
from .simplicial_lie import normalize_lie

logger = logging.getLogger(__name__)


def on_ring(algebra, theta, target, x):
    """Apply a cosimplicial operator to the D(A) factor."""
    result = {}
    for (r, xi), c in x.items():
        for r2, e in algebra.apply(theta, target, r).items():
            add_term(result, (r2, xi), c * e)
    return result


def on_lie(g, theta, n, x):
    """Apply a simplicial operator to the level-n g factor."""
    result = {}
    for (r, xi), c in x.items():
        for xi2, e in g.apply(theta, n, xi).items():
            add_term(result, (r, xi2), c * e)
    return result


def bracket(algebra, g, k, n, x, y):
    """[r (x) xi, s (x) zeta] = rs (x) [xi, zeta] in D^kA (x) g_n."""
    result = {}
    for (r, xi), c in x.items():
        for (s, zeta), e in y.items():
            lie = g.bracket_basis(n, xi, zeta)
            if not lie:
                continue
            for t, f in algebra.multiply_basis(k, r, s).items():
                for omega, h in lie.items():
                    add_term(result, (t, omega), c * e * f * h)
    return result


def _bch(algebra, g, k, n, x, y):
    return bch_evaluate(partial(bracket, algebra, g, k, n), x, y, g.nilpotency)


def _face(g, i, n, x):
    return on_lie(g, coface(i, n - 1), n, x)


def _degeneracy(g, i, n, x):
    return on_lie(g, codegeneracy(i, n + 1), n, x)


def residuals(algebra, g, eta, top=None):
    """
    ``{(identity, level, index): difference}`` for every violated
    identity of a simplicial MC element up to ``top``.
    """
    top = max(eta, default=0) if top is None else top
    failures = {}

    def expect(name, n, i, left, right):
        difference = add_into(dict(left), right, -1)
        if difference:
            failures[(name, n, i)] = difference

    for n in range(top + 1):
        x = eta.get(n, {})
        expect('codegeneracy', n, 0, on_ring(algebra, codegeneracy(0, n + 1), n, x), {})
        if n:
            previous = eta.get(n - 1, {})
            for i in range(1, n + 1):
                expect('face', n, i, _face(g, i, n, x), on_ring(algebra, coface(i + 1, n), n + 1, previous))
            moved = _bch(
                algebra, g, n + 1, n - 1,
                on_ring(algebra, coface(1, n), n + 1, previous),
                scale(on_ring(algebra, coface(0, n), n + 1, previous), -1),
            )
            expect('face', n, 0, _face(g, 0, n, x), moved)
        if n + 1 <= top:
            following = eta.get(n + 1, {})
            for i in range(n + 1):
                expect('degeneracy', n, i, _degeneracy(g, i, n, x),
                       on_ring(algebra, codegeneracy(i + 1, n + 2), n + 1, following))
    return failures


def check_simplicial_mc(algebra, g, eta, top=None):
    failures = residuals(algebra, g, eta, top)
    if failures:
        (name, n, i), difference = min(failures.items())
        raise NotMC(
            f'Simplicial Maurer-Cartan {name} identity fails at level {n}.',
            witness={'index': i, 'terms': len(difference)},
        )
    return True


def normalized_tensor(algebra, g, top):
    return TensorDGLA(algebra.ring, normalize_lie(g, top))


def from_normalized(omega, ng):
    """Rewrite keys of A (x) N(constant h) as keys of A (x) h."""
    return {(i, ng.lifts[n][k]): c for (i, (n, k)), c in omega.items()}


def _normalize(algebra, ng, levels):
    result = {}
    for n, x in levels.items():
        for (r, xi), c in x.items():
            missing, i = r
            if missing:
                continue
            for b, e in ng.quotient(n, {xi: c}).items():
                add_term(result, (i, b), e)
    return result


def mc_normalize(algebra, g, eta, tensor=None):
    """
    N(omega) in A (x) N(g). Residual components in the top level depend on
    the next level and are not checked.
    """
    check_simplicial_mc(algebra, g, eta)
    top = max(eta, default=0)
    tensor = tensor or normalized_tensor(algebra, g, top)
    omega = _normalize(algebra, tensor.dgl, eta)
    verdict = is_mc(tensor, None, omega)
    cutoff = max(top, 1)
    residual = {key: c for key, c in verdict.residual.items() if key[1][0] < cutoff}
    if residual:
        raise PropertyCheckFailed(
            'Normalized element is not Maurer-Cartan.',
            witness=tensor.render(residual),
        )
    logger.debug('Normalized MC element over levels 0..%d: %d terms', top, len(omega))
    return omega


def check_gauge(algebra, g, u, top=None):
    top = max(u, default=0) if top is None else top
    for n in range(top + 1):
        x = u.get(n, {})
        for i in range(1, n + 1):
            if _face(g, i, n, x) != on_ring(algebra, coface(i, n - 1), n, u.get(n - 1, {})):
                raise SimplicialIdentityViolation(
                    f'Gauge face identity fails at level {n}.', witness={'index': i},
                )
        if n + 1 > top:
            continue
        for i in range(n + 1):
            if _degeneracy(g, i, n, x) != on_ring(algebra, codegeneracy(i, n + 1), n, u.get(n + 1, {})):
                raise SimplicialIdentityViolation(
                    f'Gauge degeneracy identity fails at level {n}.', witness={'index': i},
                )
    return True


def gauge_multiply(algebra, g, u, v):
    """Levelwise product of two gauges."""
    return {
        n: _bch(algebra, g, n, n, u.get(n, {}), v.get(n, {}))
        for n in sorted(set(u) | set(v))
    }


def simplicial_gauge_act(algebra, g, u, eta):
    """Action on levels below the top level of ``u``."""
    top = max(u, default=0)
    result = {}
    for n in range(top):
        shifted = _face(g, 0, n + 1, u.get(n + 1, {}))
        pushed = on_ring(algebra, coface(0, n), n + 1, u.get(n, {}))
        inner = _bch(algebra, g, n + 1, n, shifted, eta.get(n, {}))
        result[n] = _bch(algebra, g, n + 1, n, inner, scale(pushed, -1))
    return result


def gauge_normalize(algebra, g, u, tensor=None):
    """N(u), of total degree 0 in A (x) N(g)."""
    check_gauge(algebra, g, u)
    tensor = tensor or normalized_tensor(algebra, g, max(u, default=0))
    return _normalize(algebra, tensor.dgl, u)


def gauge_compatibility(algebra, g, u, eta):
    """
    Check N(u)(N(omega)) = N(u * omega) below the top level of ``u``;
    returns the normalized result.
    """
    top = max(u, default=0)
    tensor = normalized_tensor(algebra, g, top)
    moved = simplicial_gauge_act(algebra, g, u, eta)
    check_simplicial_mc(algebra, g, moved)
    left = series_action(tensor, gauge_normalize(algebra, g, u, tensor), mc_normalize(algebra, g, eta, tensor))
    left = {key: c for key, c in left.items() if key[1][0] < top}
    right = mc_normalize(algebra, g, moved, tensor)
    if left != right:
        raise PropertyCheckFailed(
            'Gauge action does not commute with normalization.',
            witness=tensor.render(add_into(dict(left), right, -1)),
        )
    return right


def constant_lift(algebra, omega, top):
    """Simplicial MC element of a constant g from omega in A^1 (x) g."""
    eta = {0: {(((), i), b): Fraction(c) for (i, b), c in omega.items()}}
    for n in range(1, top + 1):
        eta[n] = on_ring(algebra, coface(2, n), n + 1, eta[n - 1])
    return eta


def constant_gauge_lift(algebra, u, top):
    """Simplicial gauge of a constant g from u in A^0 (x) g."""
    lifted = {0: {(((), i), b): Fraction(c) for (i, b), c in u.items()}}
    for n in range(1, top + 1):
        lifted[n] = on_ring(algebra, coface(1, n - 1), n, lifted[n - 1])
    return lifted


def push_ring(levels, images):
    """Image under a ring map ``images[index] = {index: c}``, applied summandwise."""
    result = {}
    for n, x in levels.items():
        moved = {}
        for ((missing, i), xi), c in x.items():
            for j, e in images.get(i, {}).items():
                add_term(moved, ((missing, j), xi), c * e)
        result[n] = moved
    return result


def abelian_mc_dimensions(algebra, g, top):
    """
    For abelian g the simplicial MC identities are linear. Returns the
    dimension of their solutions restricted to levels below ``top``, the
    dimension of degree-1 cocycles of A (x) N(g), and the rank of N on the
    solutions.
    """
    if g.nilpotency > 1:
        raise PropertyCheckFailed('Linear MC count needs an abelian simplicial Lie algebra.')
    unknowns = [
        (n, (r, xi))
        for n in range(top + 1)
        for r in algebra.basis(n + 1)
        for xi in g.basis(n)
    ]
    columns = [
        residuals(algebra, g, {n: {key: Fraction(1)}}, top)
        for n, key in unknowns
    ]
    rows = list(dict.fromkeys(
        (name, key) for column in columns for name, difference in column.items() for key in difference
    ))
    matrix = Matrix(
        [[column.get(name, {}).get(key, 0) for column in columns] for name, key in rows],
        len(unknowns),
    )
    solutions = kernel_basis(matrix) if rows else Matrix.identity(len(unknowns))
    solution_columns = solutions.columns()

    lower = [j for j, (n, _) in enumerate(unknowns) if n < top]
    projected = Matrix([[column[j] for column in solution_columns] for j in lower], len(solution_columns))

    tensor = normalized_tensor(algebra, g, top)
    ring, ng = algebra.ring, tensor.dgl
    keys = [
        (i, b) for b in ng.basis for i in range(len(ring))
        if tensor.key_degree((i, b)) == 1
    ]
    images = [tensor.d({key: Fraction(1)}) for key in keys]
    targets = sorted({key for image in images for key in image})
    differential = Matrix([[image.get(t, 0) for image in images] for t in targets], len(keys))
    cocycles = len(keys) - rank(differential)

    normalized = []
    for column in solution_columns:
        eta = {}
        for c, (n, key) in zip(column, unknowns):
            if c:
                eta.setdefault(n, {})[key] = c
        normalized.append(to_dense(_normalize(algebra, ng, eta), keys))
    normalized_rank = rank(Matrix.from_columns(normalized, len(keys))) if normalized else 0

    dimensions = (rank(projected) if lower else 0, cocycles, normalized_rank)
    logger.info('Abelian MC dimensions for %s: %s', g.name, dimensions)
    return dimensions


def push_lie(levels, images):
    """
    Image under a levelwise map of simplicial Lie algebras
    ``images[key] = {key: c}``, or ``images(n)`` returning the table of
    level n.
    """
    result = {}
    for n, x in levels.items():
        table = images(n) if callable(images) else images
        moved = {}
        for (r, xi), c in x.items():
            for zeta, e in table.get(xi, {}).items():
                add_term(moved, (r, zeta), c * e)
        result[n] = moved
    return result

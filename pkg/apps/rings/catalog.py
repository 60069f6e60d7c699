"""
Standard rings used by the commands, the API examples and the tests.
The JSON files under ``samples/rings`` describe the same rings.
"""

from .ring import build_ring


def sphere(n):
    """H*(S^n)."""
    return build_ring([('1', 0), ('x', n)], '1', name=f'S{n}').validate()


def cp2():
    return build_ring(
        [('1', 0), ('x', 2), ('y', 4)], '1',
        [('x', 'x', {'y': 1})],
        name='CP2',
    ).validate()


def truncated_polynomial(degree, height, name=None):
    """Q[x]/(x^(height+1)) with |x| = degree (even)."""
    basis = [('1', 0)] + [(f'x{k}', degree * k) for k in range(1, height + 1)]
    products = [
        (f'x{i}', f'x{j}', {f'x{i + j}': 1})
        for i in range(1, height + 1)
        for j in range(1, height + 1)
        if i + j <= height
    ]
    return build_ring(basis, '1', products, name=name).validate()


def surface(genus, name=None):
    """
    Cohomology of a closed orientable surface: a_i * b_i = w = -b_i * a_i.
    """
    if genus == 1:
        a, b = ['a'], ['b']
    else:
        a = [f'a{i}' for i in range(1, genus + 1)]
        b = [f'b{i}' for i in range(1, genus + 1)]
    basis = [('1', 0)] + [(label, 1) for pair in zip(a, b) for label in pair] + [('w', 2)]
    products = []
    for x, y in zip(a, b):
        products.append((x, y, {'w': 1}))
        products.append((y, x, {'w': -1}))
    return build_ring(basis, '1', products, name=name or f'genus{genus}').validate()


def torus():
    return surface(1, name='torus')


def sphere_product():
    """H*(S^2 x S^2)."""
    return build_ring(
        [('1', 0), ('x1', 2), ('x2', 2), ('z', 4)], '1',
        [('x1', 'x2', {'z': 1}), ('x2', 'x1', {'z': 1})],
        name='S2xS2',
    ).validate()


def wedge_of_circles(count):
    basis = [('1', 0)] + [(f'a{i}', 1) for i in range(1, count + 1)]
    return build_ring(basis, '1', name=f'wedge{count}').validate()


def circle_model():
    """
    A dg ring quasi-isomorphic to H*(S^1) with nontrivial degree-0 part:
    d e = f, d g = h, e*a = a*e = g, f*a = h = -a*f.
    """
    return build_ring(
        [('1', 0), ('e', 0), ('f', 1), ('a', 1), ('g', 1), ('h', 2)], '1',
        [
            ('e', 'a', {'g': 1}), ('a', 'e', {'g': 1}),
            ('f', 'a', {'h': 1}), ('a', 'f', {'h': -1}),
        ],
        [('e', {'f': 1}), ('g', {'h': 1})],
        name='circle_model',
    ).validate()


def heisenberg():
    """Degree-1 classes a, b, c with ab = w = -ba and dc = w."""
    return build_ring(
        [('1', 0), ('a', 1), ('b', 1), ('c', 1), ('w', 2)], '1',
        [('a', 'b', {'w': 1}), ('b', 'a', {'w': -1})],
        [('c', {'w': 1})],
        name='heisenberg',
    ).validate()


def sphere_with_acyclic_pair(low=2):
    """
    H*(S^2) plus an acyclic pair p -> q in degrees low, low + 1 with all
    products zero.
    """
    return build_ring(
        [('1', 0), ('p', low), ('q', low + 1), ('x', 2)], '1',
        [],
        [('p', {'q': 1})],
        name=f'S2_plus_acyclic{low}',
    ).validate()


def killed_square():
    """
    A dg model of S^2 whose square vanishes only up to homotopy:
    x * x = q = d p.
    """
    return build_ring(
        [('1', 0), ('x', 2), ('p', 3), ('q', 4)], '1',
        [('x', 'x', {'q': 1})],
        [('p', {'q': 1})],
        name='killed_square',
    ).validate()


def point():
    return build_ring([('1', 0)], '1', name='point').validate()


RINGS = {
    'S2': lambda: sphere(2),
    'S3': lambda: sphere(3),
    'S4': lambda: sphere(4),
    'CP2': cp2,
    'torus': torus,
    'genus2': lambda: surface(2),
    'S2xS2': sphere_product,
    'circle_model': circle_model,
    'heisenberg': heisenberg,
}

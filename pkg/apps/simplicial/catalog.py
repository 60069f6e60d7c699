"""
Standard simplicial sets. The JSON files under ``samples/spaces`` describe
the same spaces.
"""

from .sets import build_space, from_complex


def point():
    return build_space({0: ['v']}, {}, name='point')


def circle():
    return build_space({0: ['v'], 1: ['e']}, {'e': [((), 'v'), ((), 'v')]}, name='circle')


def wedge_of_circles(count):
    edges = [f'e{i}' for i in range(1, count + 1)]
    return build_space(
        {0: ['v'], 1: edges},
        {e: [((), 'v'), ((), 'v')] for e in edges},
        name=f'wedge{count}',
    )


def sphere(n):
    """One vertex and one n-simplex with totally degenerate faces."""
    if n == 1:
        return circle()
    word = tuple(range(n - 2, -1, -1))
    return build_space({0: ['v'], n: ['x']}, {'x': [(word, 'v')] * (n + 1)}, name=f'S{n}')


def torus():
    """
    Two triangles glued along a, b and the diagonal c:
    s has edges (d0, d1, d2) = (b, c, a) and t has (a, c, b).
    """
    loop = [((), 'v'), ((), 'v')]
    return build_space(
        {0: ['v'], 1: ['a', 'b', 'c'], 2: ['s', 't']},
        {
            'a': loop, 'b': loop, 'c': loop,
            's': [((), 'b'), ((), 'c'), ((), 'a')],
            't': [((), 'a'), ((), 'c'), ((), 'b')],
        },
        name='torus',
    )


def rp2():
    """One edge a and one triangle with boundary a a: faces (a, s0 v, a)."""
    return build_space(
        {0: ['v'], 1: ['a'], 2: ['s']},
        {'a': [((), 'v'), ((), 'v')], 's': [((), 'a'), ((0,), 'v'), ((), 'a')]},
        name='RP2',
    )


def hollow_triangle():
    return from_complex([(0, 1), (0, 2), (1, 2)], name='triangle')


RP2_FACETS = [
    (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
    (2, 3, 5), (3, 4, 6), (2, 4, 5), (3, 5, 6), (2, 4, 6),
]


def rp2_triangulation():
    """The six-vertex triangulation of the projective plane."""
    return from_complex(RP2_FACETS, name='RP2-6')


SPACES = {
    'point': point,
    'circle': circle,
    'wedge2': lambda: wedge_of_circles(2),
    'S2': lambda: sphere(2),
    'torus': torus,
    'RP2': rp2,
    'RP2-6': rp2_triangulation,
    'triangle': hollow_triangle,
}

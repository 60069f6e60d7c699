"""
Finite simplicial sets given by nondegenerate simplices and their faces.

Every simplex has a unique form ``x o eta`` with x nondegenerate and eta a
monotone surjection [n] -> [dim x]; ``Simplex(label, eta)`` stores it.
Operators act by precomposition: a monotone theta: [k] -> [n] sends an
n-simplex y to the k-simplex y o theta.
"""

import logging
from collections import deque
from functools import cached_property
from typing import NamedTuple

from apps.core.exceptions import ParseError, SimplicialIdentityViolation
from apps.doldkan.shuffles import codegeneracy, coface, compose, surjections

logger = logging.getLogger(__name__)


def identity(n):
    return tuple(range(n + 1))


def degeneracy_word(eta):
    """Indices j1 > ... > jk with x o eta = s_j1 ... s_jk x."""
    return tuple(j for j in range(len(eta) - 2, -1, -1) if eta[j] == eta[j + 1])


def from_word(word, m):
    """The surjection of s_j1 ... s_jk applied to an m-simplex."""
    eta = identity(m)
    for j in reversed(word):
        if not 0 <= j < len(eta):
            raise ParseError(f'Degeneracy s{j} does not apply in dimension {len(eta) - 1}.', witness=list(word))
        eta = compose(eta, codegeneracy(j, len(eta)))
    return eta


class Simplex(NamedTuple):
    label: str
    eta: tuple

    @property
    def dimension(self):
        return len(self.eta) - 1

    @property
    def is_degenerate(self):
        return len(set(self.eta)) < len(self.eta)

    @property
    def word(self):
        return degeneracy_word(self.eta)

    def render(self):
        if not self.is_degenerate:
            return self.label
        return ''.join(f's{j}' for j in self.word) + f'({self.label})'


class SimplicialSet:
    """
    ``simplices[n]`` lists the nondegenerate n-simplices; ``faces[label]``
    lists the faces d_0, ..., d_n of an n-simplex as ``Simplex`` values.
    """

    def __init__(self, simplices, faces, basepoint=None, name=None):
        self.nondegenerate = {n: list(labels) for n, labels in sorted(simplices.items()) if labels}
        self.dimension_of = {
            label: n for n, labels in self.nondegenerate.items() for label in labels
        }
        self.faces = {label: tuple(faces.get(label, ())) for label in self.dimension_of}
        vertices = self.nondegenerate.get(0, [])
        self.basepoint = basepoint if basepoint is not None else (vertices[0] if vertices else None)
        self.name = name
        self._simplices = {}

    def __repr__(self):
        return f'SimplicialSet({self.name or "?"}, {self.counts()})'

    @property
    def dimension(self):
        return max(self.nondegenerate, default=-1)

    @property
    def vertices(self):
        return self.nondegenerate.get(0, [])

    @property
    def is_reduced(self):
        return len(self.vertices) == 1

    def counts(self):
        return [len(self.nondegenerate.get(n, [])) for n in range(self.dimension + 1)]

    def euler_characteristic(self):
        return sum((-1) ** n * c for n, c in enumerate(self.counts()))

    def simplex(self, label):
        return Simplex(label, identity(self.dimension_of[label]))

    def simplices(self, n):
        """All n-simplices, nondegenerate ones first."""
        cached = self._simplices.get(n)
        if cached is None:
            cached = [
                Simplex(label, eta)
                for eta in surjections(n)
                for label in self.nondegenerate.get(eta[-1], [])
            ]
            self._simplices[n] = cached
        return cached

    def degenerate(self, n):
        return [y for y in self.simplices(n) if y.is_degenerate]

    def apply(self, theta, y):
        """y o theta for a monotone theta: [k] -> [dim y]."""
        label, f = y.label, compose(y.eta, theta)
        while True:
            hit = set(f)
            missing = next((j for j in range(self.dimension_of[label] + 1) if j not in hit), None)
            if missing is None:
                return Simplex(label, f)
            face = self.faces[label][missing]
            lowered = tuple(v if v < missing else v - 1 for v in f)
            label, f = face.label, compose(face.eta, lowered)

    def face(self, i, y):
        return self.apply(coface(i, y.dimension - 1), y)

    def degeneracy(self, i, y):
        return self.apply(codegeneracy(i, y.dimension + 1), y)

    def vertex(self, k, y):
        return self.apply((k,), y).label

    def edge(self, j, k, y):
        return self.apply((j, k), y)

    @cached_property
    def components(self):
        """Vertex to component representative, by breadth-first search from sorted vertices."""
        adjacency = {v: [] for v in self.vertices}
        for label in sorted(self.nondegenerate.get(1, [])):
            start, end = self.faces[label][1].label, self.faces[label][0].label
            adjacency[start].append(end)
            adjacency[end].append(start)
        found = {}
        for root in sorted(self.vertices):
            if root in found:
                continue
            found[root] = root
            queue = deque([root])
            while queue:
                v = queue.popleft()
                for w in sorted(adjacency[v]):
                    if w not in found:
                        found[w] = root
                        queue.append(w)
        return found

    @property
    def is_connected(self):
        return len(set(self.components.values())) <= 1

    def validate(self):
        """Face data is well formed and d_i d_j = d_(j-1) d_i for i < j."""
        for label, n in self.dimension_of.items():
            faces = self.faces[label]
            if n == 0:
                if faces:
                    raise SimplicialIdentityViolation('A vertex has faces.', witness={'simplex': label})
                continue
            if len(faces) != n + 1:
                raise SimplicialIdentityViolation(
                    f'Simplex of dimension {n} needs {n + 1} faces.',
                    witness={'simplex': label, 'faces': len(faces)},
                )
            for i, face in enumerate(faces):
                target = self.dimension_of.get(face.label)
                if target is None:
                    raise ParseError(f'Unknown face target {face.label!r}.', witness={'simplex': label, 'face': i})
                if face.dimension != n - 1 or face.eta[-1] != target or face.eta != tuple(sorted(face.eta)) \
                        or set(face.eta) != set(range(target + 1)):
                    raise SimplicialIdentityViolation(
                        f'Face d{i} has the wrong dimension.',
                        witness={'simplex': label, 'face': i},
                    )
        for label, n in self.dimension_of.items():
            if n < 2:
                continue
            y = self.simplex(label)
            for j in range(n + 1):
                for i in range(j):
                    left = self.face(i, self.faces[label][j])
                    right = self.face(j - 1, self.faces[label][i])
                    if left != right:
                        raise SimplicialIdentityViolation(
                            f'd{i} d{j} != d{j - 1} d{i}.',
                            witness={'simplex': y.render(), 'indices': [i, j]},
                        )
        if self.basepoint is not None and self.basepoint not in self.vertices:
            raise ParseError(f'Basepoint {self.basepoint!r} is not a vertex.', witness=[self.basepoint])
        logger.debug('Validated %r', self)
        return self


def build_space(simplices, faces, basepoint=None, name=None):
    """
    Construct from labels: ``faces[label]`` lists ``(word, target)`` pairs
    where ``word`` is the degeneracy word applied to ``target``.
    """
    dimension_of = {label: n for n, labels in simplices.items() for label in labels}
    resolved = {}
    for label, entries in faces.items():
        resolved[label] = []
        for word, target in entries:
            if target not in dimension_of:
                raise ParseError(f'Unknown face target {target!r}.', witness={'simplex': label})
            resolved[label].append(Simplex(target, from_word(tuple(word), dimension_of[target])))
    return SimplicialSet(simplices, resolved, basepoint, name).validate()


def from_complex(facets, name=None):
    """
    Simplicial set of an ordered simplicial complex given by its facets;
    each simplex is labelled by its sorted vertices joined with '-'.
    """
    closure = set()
    for facet in facets:
        vertices = tuple(sorted(str(v) for v in facet))
        for mask in range(1, 2 ** len(vertices)):
            closure.add(tuple(v for k, v in enumerate(vertices) if mask >> k & 1))
    simplices, faces = {}, {}
    for simplex in sorted(closure, key=lambda s: (len(s), s)):
        label = '-'.join(simplex)
        simplices.setdefault(len(simplex) - 1, []).append(label)
        if len(simplex) > 1:
            faces[label] = [
                ((), '-'.join(simplex[:i] + simplex[i + 1:])) for i in range(len(simplex))
            ]
    return build_space(simplices, faces, name=name)

"""
Maurer-Cartan elements and gauges of a finite simplicial set with values
in a finite simplicial group, enumerated exhaustively.

An MC element is ``{n: {z: omega_n(z)}}`` over the (n+1)-simplices z, with

    d_i omega_n(z) = omega_(n-1)(d_(i+1) z)                      i > 0
    d_0 omega_n(z) = omega_(n-1)(d_1 z) omega_(n-1)(d_0 z)^-1
    s_i omega_n(z) = omega_(n+1)(s_(i+1) z)
    omega_n(s_0 y) = 1.

A gauge is ``{n: {y: g_n(y)}}`` over the n-simplices with
d_i g_n(y) = g_(n-1)(d_i y) for i > 0 and s_i g_n(y) = g_(n+1)(s_i y); it
acts by (g * omega)_n(z) = d_0 g_(n+1)(z) omega_n(z) g_n(d_0 z)^-1.

Values on degenerate simplices follow from the lower levels, so the
search branches only over nondegenerate simplices. Levels run up to the
dimension of X; the determined level above it is checked as well.
"""

import logging
from dataclasses import dataclass, field

from django.conf import settings

from apps.core.exceptions import EnumerationBudgetExceeded, NotMC, PropertyCheckFailed

logger = logging.getLogger(__name__)


def _in_image_of_s0(z):
    return z.eta[0] == z.eta[1]


class Enumeration:
    """Shared budget bookkeeping for the searches over one space and group."""

    def __init__(self, space, group, budget=None):
        self.space = space
        self.group = group
        self.top = max(space.dimension, 0)
        self.budget = budget or settings.MALCEV['ENUMERATION_BUDGET']
        self.visited = 0
        self._faces = {}

    def tick(self):
        self.visited += 1
        if self.visited > self.budget:
            raise EnumerationBudgetExceeded(
                'Torsor enumeration exceeds the budget.',
                witness={'budget': self.budget, 'space': self.space.name, 'group': self.group.name},
            )

    def by_faces(self, n, indices):
        """Elements of G_n grouped by their faces d_i, i in ``indices``."""
        key = (n, indices)
        cached = self._faces.get(key)
        if cached is None:
            cached = {}
            for g in self.group.elements(n):
                cached.setdefault(tuple(self.group.face(i, n, g) for i in indices), []).append(g)
            self._faces[key] = cached
        return cached

    def search(self, levels, determined, candidates):
        """
        Depth-first search over ``levels``. ``determined(values, n, z)``
        returns the forced value of a degenerate simplex or None when the
        lower levels are inconsistent; ``candidates(values, n, z)`` lists
        the admissible values of a nondegenerate one.
        """
        found = []
        nondegenerate = {
            n: [z for z, degenerate in simplices if not degenerate] for n, simplices in levels.items()
        }

        def level(n, values):
            if n not in levels:
                found.append({k: dict(v) for k, v in values.items()})
                return
            current = values[n] = {}
            for z, degenerate in levels[n]:
                if degenerate:
                    h = determined(values, n, z)
                    if h is None:
                        del values[n]
                        return
                    current[z] = h
            choose(n, 0, values)
            del values[n]

        def choose(n, k, values):
            if k == len(nondegenerate[n]):
                level(n + 1, values)
                return
            z = nondegenerate[n][k]
            for h in candidates(values, n, z):
                self.tick()
                values[n][z] = h
                choose(n, k + 1, values)
            values[n].pop(z, None)

        level(min(levels), {})
        return found


class MaurerCartanSearch(Enumeration):

    def levels(self):
        return {
            n: [(z, z.is_degenerate) for z in self.space.simplices(n + 1)]
            for n in range(self.top + 1)
        }

    def expected_faces(self, values, n, z):
        g, x = self.group, self.space
        lower = values[n - 1]
        faces = [g.multiply(n - 1, lower[x.face(1, z)], g.inverse(n - 1, lower[x.face(0, z)]))]
        faces.extend(lower[x.face(i + 1, z)] for i in range(1, n + 1))
        return tuple(faces)

    def determined(self, values, n, z):
        g, x = self.group, self.space
        if _in_image_of_s0(z):
            h = g.identity(n)
        else:
            j = z.word[0]
            h = g.degeneracy(j - 1, n - 1, values[n - 1][x.face(j, z)])
        if n and tuple(g.face(i, n, h) for i in range(n + 1)) != self.expected_faces(values, n, z):
            return None
        return h

    def candidates(self, values, n, z):
        if n == 0:
            return list(self.group.elements(0))
        return self.by_faces(n, tuple(range(n + 1))).get(self.expected_faces(values, n, z), [])

    def solutions(self):
        return self.search(self.levels(), self.determined, self.candidates)


class GaugeSearch(Enumeration):

    def levels(self):
        return {
            n: [(y, y.is_degenerate) for y in self.space.simplices(n)]
            for n in range(self.top + 2)
        }

    def expected_faces(self, values, n, y):
        return tuple(values[n - 1][self.space.face(i, y)] for i in range(1, n + 1))

    def determined(self, values, n, y):
        g, x = self.group, self.space
        j = y.word[0]
        h = g.degeneracy(j, n - 1, values[n - 1][x.face(j, y)])
        if tuple(g.face(i, n, h) for i in range(1, n + 1)) != self.expected_faces(values, n, y):
            return None
        return h

    def candidates(self, values, n, y):
        if n == 0:
            return list(self.group.elements(0))
        return self.by_faces(n, tuple(range(1, n + 1))).get(self.expected_faces(values, n, y), [])

    def gauges(self):
        return self.search(self.levels(), self.determined, self.candidates)


def mc_violations(space, group, omega, top=None):
    """Every identity an MC element violates, as ``(kind, level, simplex, index)``."""
    top = max(omega) if top is None else top
    g, x = group, space
    failures = []
    for n in range(top + 1):
        for z, h in omega[n].items():
            if _in_image_of_s0(z) and h != g.identity(n):
                failures.append(('unit', n, z.render(), 0))
            if n:
                lower = omega[n - 1]
                expected = g.multiply(n - 1, lower[x.face(1, z)], g.inverse(n - 1, lower[x.face(0, z)]))
                if g.face(0, n, h) != expected:
                    failures.append(('face', n, z.render(), 0))
                for i in range(1, n + 1):
                    if g.face(i, n, h) != lower[x.face(i + 1, z)]:
                        failures.append(('face', n, z.render(), i))
            if n < top:
                for i in range(n + 1):
                    if g.degeneracy(i, n, h) != omega[n + 1][x.degeneracy(i + 1, z)]:
                        failures.append(('degeneracy', n, z.render(), i))
    return failures


def check_mc(space, group, omega, top=None):
    failures = mc_violations(space, group, omega, top)
    if failures:
        kind, n, simplex, i = failures[0]
        raise NotMC(
            f'Simplicial Maurer-Cartan {kind} identity fails at level {n}.',
            witness={'simplex': simplex, 'index': i},
        )
    return True


def gauge_act(space, group, gauge, omega):
    g, x = group, space
    moved = {}
    for n, values in omega.items():
        moved[n] = {
            z: g.multiply(
                n,
                g.multiply(n, g.face(0, n + 1, gauge[n + 1][z]), h),
                g.inverse(n, gauge[n][x.face(0, z)]),
            )
            for z, h in values.items()
        }
    return moved


def canonical(values):
    """Values on nondegenerate simplices; they determine the rest."""
    return tuple(sorted(
        (n, z.label, h) for n, level in values.items() for z, h in level.items() if not z.is_degenerate
    ))


@dataclass
class TorsorReport:
    space: str
    group: str
    solutions: int
    gauges: int
    representatives: list = field(default_factory=list)
    visited: int = 0

    @property
    def orbits(self):
        return len(self.representatives)

    def document(self):
        return {
            'space': self.space,
            'group': self.group,
            'orbits': self.orbits,
            'solutions': self.solutions,
            'gauges': self.gauges,
            'representatives': self.representatives,
        }


def _render(group, omega):
    return {
        f'{n}:{z.label}': group.label(n, h)
        for n, level in sorted(omega.items()) for z, h in sorted(level.items()) if not z.is_degenerate
    }


def torsor_space(space, group, budget=None):
    """
    pi(X, G): MC elements up to gauge. Returns the orbit count and a
    representative per orbit, smallest canonical form first.
    """
    search = MaurerCartanSearch(space, group, budget)
    solutions = search.solutions()
    for omega in solutions:
        check_mc(space, group, omega)
    gauge_search = GaugeSearch(space, group, budget)
    gauge_search.visited = search.visited
    gauges = gauge_search.gauges()

    by_key = {canonical(omega): omega for omega in solutions}
    representatives, seen = [], set()
    for key in sorted(by_key):
        if key in seen:
            continue
        orbit = set()
        for gauge in gauges:
            gauge_search.tick()
            moved = gauge_act(space, group, gauge, by_key[key])
            moved_key = canonical(moved)
            if moved_key not in by_key:
                raise PropertyCheckFailed(
                    'Gauge action leaves the Maurer-Cartan set.',
                    witness=_render(group, moved),
                )
            orbit.add(moved_key)
        seen |= orbit
        representatives.append(_render(group, by_key[key]))
    report = TorsorReport(space.name, group.name, len(solutions), len(gauges), representatives,
                          gauge_search.visited)
    logger.info('pi(%s, %s): %d orbits from %d MC elements and %d gauges',
                space.name, group.name, report.orbits, report.solutions, report.gauges)
    return report


# Gauges as simplicial maps X -> VG and as simplicial group maps H(X) -> G

def v_face(group, i, n, t):
    """Face d_i on VG_n = G_n x ... x G_0, ``t[k]`` in G_(n-k)."""
    head = tuple(group.face(i - k, n - k, t[k]) for k in range(i))
    return head + t[i + 1:]


def v_degeneracy(group, i, n, t):
    head = tuple(group.degeneracy(i - k, n - k, t[k]) for k in range(i + 1))
    return head + t[i:]


def _v_value(space, group, values, y):
    """Value of a simplicial map X -> VG on any simplex."""
    t = values[y.label]
    n = space.dimension_of[y.label]
    for j in reversed(y.word):
        t = v_degeneracy(group, j, n, t)
        n += 1
    return t


def v_maps(space, group, search):
    """Hom(X, VG) by search over the nondegenerate simplices in dimension order."""
    order = [label for n in sorted(space.nondegenerate) for label in space.nondegenerate[n]]
    found = []

    def tuples(n):
        result = [()]
        for k in range(n, -1, -1):
            result = [t + (g,) for t in result for g in group.elements(k)]
        return result

    def extend(k, values):
        if k == len(order):
            found.append(dict(values))
            return
        label = order[k]
        n = space.dimension_of[label]
        for t in tuples(n):
            search.tick()
            if all(
                v_face(group, i, n, t) == _v_value(space, group, values, face)
                for i, face in enumerate(space.faces[label])
            ):
                values[label] = t
                extend(k + 1, values)
        values.pop(label, None)

    extend(0, {})
    return found


class HomSearch(Enumeration):
    """Simplicial group maps H(X) -> G: [z] in H(X)_n for z in X_(n+1)."""

    def levels(self):
        return {
            n: [(z, bool(z.word) and z.word[0] > 0) for z in self.space.simplices(n + 1)]
            for n in range(self.top + 2)
        }

    def expected_faces(self, values, n, z):
        return tuple(values[n - 1][self.space.face(i + 1, z)] for i in range(n + 1))

    def determined(self, values, n, z):
        g, x = self.group, self.space
        j = z.word[0]
        h = g.degeneracy(j - 1, n - 1, values[n - 1][x.face(j, z)])
        if tuple(g.face(i, n, h) for i in range(n + 1)) != self.expected_faces(values, n, z):
            return None
        return h

    def candidates(self, values, n, z):
        if n == 0:
            return list(self.group.elements(0))
        return self.by_faces(n, tuple(range(n + 1))).get(self.expected_faces(values, n, z), [])

    def homs(self):
        return self.search(self.levels(), self.determined, self.candidates)


def _free_key(values):
    """Values on the generators that the degeneracy relations leave free."""
    return tuple(sorted(
        (n, z, h) for n, level in values.items() for z, h in level.items()
        if not (z.word and z.word[0] > 0)
    ))


@dataclass
class GaugeFunctorReport:
    space: str
    group: str
    gauges: int
    v_maps: int
    h_maps: int

    def document(self):
        return {
            'space': self.space,
            'group': self.group,
            'gauges': self.gauges,
            'maps_to_V': self.v_maps,
            'maps_from_H': self.h_maps,
            'bijective': True,
        }


def gauge_functor_checks(space, group, budget=None):
    """
    Computes the gauge group, Hom(X, VG) and Hom(H(X), G) independently and
    checks that g -> (x -> (g_n x, g_(n-1) d_0 x, ...)) and
    g -> ([z] -> d_0 g_(n+1) z) are bijections onto them.
    """
    gauge_search = GaugeSearch(space, group, budget)
    gauges = gauge_search.gauges()
    maps_to_v = v_maps(space, group, gauge_search)
    h_search = HomSearch(space, group, budget)
    h_search.visited = gauge_search.visited
    maps_from_h = h_search.homs()

    v_keys = {tuple(sorted(values.items())) for values in maps_to_v}
    h_keys = {_free_key(values) for values in maps_from_h}
    v_images, h_images = set(), set()
    for gauge in gauges:
        v_image = {}
        for label, n in space.dimension_of.items():
            y = space.simplex(label)
            entries = []
            for k in range(n + 1):
                entries.append(gauge[n - k][y])
                if k < n:
                    y = space.face(0, y)
            v_image[label] = tuple(entries)
        v_images.add(tuple(sorted(v_image.items())))

        h_image = {
            n: {z: group.face(0, n + 1, gauge[n + 1][z]) for z in space.simplices(n + 1)}
            for n in range(gauge_search.top + 1)
        }
        recovered = {
            n: {y: h_image[n][space.degeneracy(0, y)] for y in space.simplices(n)}
            for n in range(gauge_search.top + 1)
        }
        if any(recovered[n] != gauge[n] for n in recovered):
            raise PropertyCheckFailed('g(x) = f[s_0 x] does not recover the gauge.')
        h_images.add(_free_key(h_image))

    for name, images, keys in (('X -> VG', v_images, v_keys), ('H(X) -> G', h_images, h_keys)):
        if len(images) != len(gauges) or images != keys:
            raise PropertyCheckFailed(
                f'Gauges do not correspond to maps {name}.',
                witness={'gauges': len(gauges), 'images': len(images), 'maps': len(keys)},
            )
    report = GaugeFunctorReport(space.name, group.name, len(gauges), len(maps_to_v), len(maps_from_h))
    logger.info('Gauge functor checks on %s with %s: %d elements each', space.name, group.name, len(gauges))
    return report

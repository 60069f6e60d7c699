"""
Kan loop group presentations and fundamental groups.

For a reduced X, level n of the loop group is free on the (n+1)-simplices
modulo those of the form s_0 y, with

    d_0 [x] = [d_1 x][d_0 x]^-1,   d_i [x] = [d_(i+1) x] (i > 0),
    s_i [x] = [s_(i+1) x].

Words are sympy ``FreeGroupElement``s over the symbols x0, x1, ...; the
k-th symbol stands for the k-th generator of the level or presentation.
"""

import logging
from dataclasses import dataclass, field
from itertools import product

from django.conf import settings
from sympy import Symbol
from sympy.combinatorics.free_groups import free_group

from apps.core.exceptions import EnumerationBudgetExceeded, NotConnected, NotReduced

logger = logging.getLogger(__name__)


def free_on(count):
    """Free group of rank ``count``."""
    return free_group([Symbol(f'x{k}') for k in range(count)])[0]


def rewrite(word, free, renumber):
    """``word`` in ``free``, moving the k-th letter to ``renumber[k]``."""
    symbols = word.group.symbols
    result = free.identity
    for symbol, exponent in word.array_form:
        result = result * free.generators[renumber[symbols.index(symbol)]] ** exponent
    return result


def spell(word):
    """``[(generator index, exponent), ...]`` of a word."""
    symbols = word.group.symbols
    return [(symbols.index(symbol), exponent) for symbol, exponent in word.array_form]


def render_word(word, names=None):
    if word.is_identity:
        return '1'
    parts = []
    for g, e in spell(word):
        name = names[g] if names is not None else str(g)
        parts.extend([name if e > 0 else f'{name}^-1'] * abs(e))
    return '*'.join(parts)


def _killed(y):
    """y lies in the image of s_0."""
    return y.eta[0] == y.eta[1]


@dataclass
class LoopLevel:
    generators: list
    free: object = None
    faces: dict = field(default_factory=dict)
    degeneracies: dict = field(default_factory=dict)


@dataclass
class LoopGroup:
    space: object
    levels: dict

    def pi0(self):
        """pi_0 = G_0 modulo d_0 w = d_1 w for every generator w of G_1."""
        level0, level1 = self.levels[0], self.levels.get(1)
        names = [y.label for y in level0.generators]
        relators = []
        for w in (level1.generators if level1 else []):
            relator = (level1.faces[0][w] * level1.faces[1][w].inverse()).cyclic_reduction()
            if not relator.is_identity:
                relators.append(relator)
        return Presentation(names, relators, level0.free).simplified()


def loop_group(space, levels=1):
    """Levels ``0..levels`` of the loop group of a reduced simplicial set."""
    if not space.is_reduced:
        raise NotReduced(
            f'Loop group needs one vertex; found {len(space.vertices)}.',
            witness=space.vertices,
        )

    result, positions = {}, {}
    for n in range(levels + 2):
        generators = [y for y in space.simplices(n + 1) if not _killed(y)]
        result[n] = LoopLevel(generators, free_on(len(generators)))
        positions[n] = {y: k for k, y in enumerate(generators)}

    def letter(n, y, exponent=1):
        """[y] in level n."""
        level = result[n]
        if _killed(y):
            return level.free.identity
        return level.free.generators[positions[n][y]] ** exponent

    for n in range(levels + 1):
        level = result[n]
        if n:
            level.faces[0] = {
                x: letter(n - 1, space.face(1, x)) * letter(n - 1, space.face(0, x), -1)
                for x in level.generators
            }
            for i in range(1, n + 1):
                level.faces[i] = {x: letter(n - 1, space.face(i + 1, x)) for x in level.generators}
        for i in range(n + 1):
            level.degeneracies[i] = {x: letter(n + 1, space.degeneracy(i + 1, x)) for x in level.generators}
    del result[levels + 1]
    logger.debug('Loop group of %s: generators per level %s',
                 space.name, [len(level.generators) for level in result.values()])
    return LoopGroup(space, result)


class Presentation:
    """Generator names and relators in the free group on them."""

    def __init__(self, generators, relators, free=None):
        self.generators = list(generators)
        self.free = free if free is not None else free_on(len(self.generators))
        self.relators = list(relators)

    def __repr__(self):
        return f'Presentation({self.render()!r})'

    def render(self):
        return {
            'generators': list(self.generators),
            'relators': [render_word(r, self.generators) for r in self.relators],
        }

    def simplified(self):
        """Drop generators that a relator of length one kills."""
        generators, free = list(self.generators), self.free
        relators = [r.cyclic_reduction() for r in self.relators]
        while True:
            killed = next((spell(r)[0][0] for r in relators if len(r) == 1), None)
            if killed is None:
                break
            keep = [g for g in range(len(generators)) if g != killed]
            renumber = {g: k for k, g in enumerate(keep)}
            generators = [generators[g] for g in keep]
            target = free_on(len(keep))
            relators = [
                rewrite(r.eliminate_word(free.generators[killed], free.identity), target, renumber)
                .cyclic_reduction()
                for r in relators
            ]
            relators, free = [r for r in relators if not r.is_identity], target
        unique = list(dict.fromkeys(r for r in relators if not r.is_identity))
        return Presentation(generators, unique, free)


def spanning_tree(space):
    """Edges of a breadth-first spanning forest, lexicographic tie-breaking."""
    tree, reached = set(), set()
    for root in sorted(space.vertices):
        if root in reached:
            continue
        reached.add(root)
        frontier = [root]
        while frontier:
            following = []
            for v in frontier:
                for label in sorted(space.nondegenerate.get(1, [])):
                    start, end = space.faces[label][1].label, space.faces[label][0].label
                    if v not in (start, end):
                        continue
                    other = end if v == start else start
                    if other not in reached:
                        reached.add(other)
                        tree.add(label)
                        following.append(other)
            frontier = following
    return tree


def fundamental_group(space):
    """
    pi_1 of a connected simplicial set: the loop group pi_0 for a reduced
    X, the edge-path group after collapsing a spanning tree otherwise.
    """
    if space.is_reduced:
        presentation = loop_group(space, 1).pi0()
    else:
        if not space.is_connected:
            raise NotConnected('Fundamental group needs a connected space.',
                               witness=sorted(set(space.components.values())))
        tree = spanning_tree(space)
        edges = [label for label in space.nondegenerate.get(1, []) if label not in tree]
        position = {label: k for k, label in enumerate(edges)}
        free = free_on(len(edges))

        def letter(y, exponent=1):
            if y.is_degenerate or y.label not in position:
                return free.identity
            return free.generators[position[y.label]] ** exponent

        relators = []
        for label in space.nondegenerate.get(2, []):
            y = space.simplex(label)
            word = letter(space.face(2, y)) * letter(space.face(0, y)) * letter(space.face(1, y), -1)
            relators.append(word.cyclic_reduction())
        presentation = Presentation(edges, [r for r in relators if not r.is_identity], free).simplified()
    logger.debug('pi_1(%s): %s', space.name, presentation.render())
    return presentation


def hom_count(presentation, group, budget=None):
    """Every homomorphism pi -> G as a tuple of generator images."""
    budget = budget or settings.MALCEV['ENUMERATION_BUDGET']
    words = [spell(r) for r in presentation.relators]
    found, visited = [], 0
    for values in product(group.elements, repeat=len(presentation.generators)):
        visited += 1
        if visited > budget:
            raise EnumerationBudgetExceeded(
                'Homomorphism enumeration exceeds the budget.', witness={'budget': budget},
            )
        if all(group.evaluate(word, values) == group.identity for word in words):
            found.append(values)
    return found


def hom_orbits(presentation, group, budget=None):
    """Representatives of Hom(pi, G) modulo conjugation, smallest first."""
    orbits, seen = [], set()
    for values in hom_count(presentation, group, budget):
        if values in seen:
            continue
        orbit = {tuple(group.conjugate(g, a) for a in values) for g in group.elements}
        seen |= orbit
        orbits.append(min(orbit))
    return sorted(orbits)

"""
Covering complexes of finite monodromy.

An edge labelling rho in a finite group is a cocycle when
rho(z_01) rho(z_12) = rho(z_02) on every 2-simplex, degenerate edges
carrying the identity. The cover has simplices ``label@gamma``: the lift
of ``label`` whose vertex 0 lies on sheet gamma; its vertex k lies on
sheet gamma rho(z_0k). The group acts on sheets from the left.
"""

import logging
from fractions import Fraction

from apps.core.exceptions import NotACocycle, NotSurjectiveMonodromy, ParseError
from apps.linear.matrix import Matrix

from .loops import fundamental_group, hom_count
from .sets import Simplex, SimplicialSet

logger = logging.getLogger(__name__)


def edge_value(group, rho, edge):
    if edge.is_degenerate:
        return group.identity
    return rho.get(edge.label, group.identity)


def check_cocycle(space, group, rho):
    unknown = sorted(set(rho) - set(space.nondegenerate.get(1, [])))
    if unknown:
        raise ParseError(f'Monodromy labels unknown edges {unknown}.', witness=unknown)
    for label in space.nondegenerate.get(2, []):
        z = space.simplex(label)
        front = edge_value(group, rho, space.edge(0, 1, z))
        back = edge_value(group, rho, space.edge(1, 2, z))
        if group.multiply(front, back) != edge_value(group, rho, space.edge(0, 2, z)):
            raise NotACocycle(
                f'Monodromy is not a cocycle on {label!r}.',
                witness={'simplex': label},
            )
    return True


def is_surjective(group, rho):
    return group.subgroup(set(rho.values())) == set(group.elements)


class CoveringSpace(SimplicialSet):
    """The cover of ``base`` with monodromy ``rho``, with its deck action."""

    def __init__(self, base, group, rho, name=None):
        check_cocycle(base, group, rho)
        self.base = base
        self.group = group
        self.rho = dict(rho)
        simplices, faces = {}, {}
        self.sheets = {}
        for n, labels in base.nondegenerate.items():
            for label in labels:
                z = base.simplex(label)
                for gamma in group.elements:
                    lifted = self.lift(label, gamma)
                    self.sheets[lifted] = (label, gamma)
                    simplices.setdefault(n, []).append(lifted)
                    if not n:
                        continue
                    shifted = group.multiply(gamma, edge_value(group, rho, base.edge(0, 1, z)))
                    faces[lifted] = [
                        Simplex(self.lift(face.label, shifted if i == 0 else gamma), face.eta)
                        for i, face in enumerate(base.faces[label])
                    ]
        basepoint = self.lift(base.basepoint, group.identity) if base.basepoint is not None else None
        super().__init__(simplices, faces, basepoint, name or f'{base.name}~{group.name}')
        self.validate()

    def lift(self, label, gamma):
        return f'{label}@{self.group.label(gamma)}'

    def deck(self, gamma, label):
        base, delta = self.sheets[label]
        return self.lift(base, self.group.multiply(gamma, delta))

    def deck_matrix(self, gamma, n, basis=None):
        """
        Action (gamma f)(y) = f(gamma^-1 y) on cochains of degree n, in the
        basis of nondegenerate n-simplices (or a given basis).
        """
        basis = basis or self.nondegenerate.get(n, [])
        position = {label: k for k, label in enumerate(basis)}
        rows = [[Fraction(0)] * len(basis) for _ in basis]
        for label in basis:
            rows[position[self.deck(gamma, label)]][position[label]] = Fraction(1)
        return Matrix(rows, len(basis))


def covering_complex(space, group, rho, name=None):
    """
    The |group|-fold cover of ``space`` with monodromy ``rho`` (edge label to
    group element). Raises NotACocycle with the witnessing 2-simplex.
    """
    cover = CoveringSpace(space, group, rho, name)
    logger.info('Cover of %s by %s: simplices %s, chi %d',
                space.name, group.name, cover.counts(), cover.euler_characteristic())
    return cover


def nontrivial_monodromy(space, group, budget=None):
    """
    The first monodromy, in spanning-tree order, whose image generates the
    group; edges outside the presentation carry the identity.
    """
    presentation = fundamental_group(space)
    for values in hom_count(presentation, group, budget):
        rho = {label: g for label, g in zip(presentation.generators, values) if g != group.identity}
        if is_surjective(group, rho):
            logger.debug('Monodromy for %s in %s: %s', space.name, group.name, rho)
            return rho
    raise NotSurjectiveMonodromy(
        f'No monodromy of {space.name} generates {group.name}.',
        witness={'space': space.name, 'group': group.name},
    )


def parse_monodromy(space, group, spec):
    """``'trivial'``, ``'nontrivial'`` or a mapping of edge labels to element labels."""
    if spec in (None, 'trivial'):
        return {}
    if spec == 'nontrivial':
        return nontrivial_monodromy(space, group)
    if not isinstance(spec, dict):
        raise ParseError('Monodromy must be "trivial", "nontrivial" or an edge labelling.', witness=[str(spec)])
    return {edge: group.index(label) for edge, label in spec.items()}

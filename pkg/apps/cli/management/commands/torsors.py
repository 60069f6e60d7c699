"""
Torsor space of a simplicial set with coefficients in a finite group.
"""

import logging

from apps.cli.base import MalcevCommand
from apps.simplicial.groups import ConstantGroup
from apps.simplicial.loader import load_simplicial_group_file, load_space_file
from apps.simplicial.loops import fundamental_group, hom_orbits
from apps.simplicial.torsors import gauge_functor_checks, torsor_space

logger = logging.getLogger(__name__)


class Command(MalcevCommand):
    help = 'Maurer-Cartan elements up to gauge, compared with Hom(pi_1, G) up to conjugacy'
    window = False

    def add_arguments(self, parser):
        parser.add_argument('space', type=str, help='Space document (JSON)')
        parser.add_argument('group', type=str, help='Group document (JSON)')
        parser.add_argument(
            '--budget',
            type=int,
            help='Enumeration budget (default: the ENUMERATION_BUDGET setting)'
        )
        parser.add_argument(
            '--functors',
            action='store_true',
            help='Also check the gauge group against Hom(X, VG) and Hom(H(X), G)'
        )
        super().add_arguments(parser)

    def compute(self, options):
        space = load_space_file(options['space'])
        group = load_simplicial_group_file(options['group'])
        budget = options['budget']
        report = torsor_space(space, group, budget)
        document = report.document()
        if isinstance(group, ConstantGroup) and space.is_connected:
            orbits = hom_orbits(fundamental_group(space), group.group, budget)
            document['hom_orbits'] = len(orbits)
            document['matches_hom_orbits'] = len(orbits) == report.orbits
        if options['functors']:
            document['functors'] = gauge_functor_checks(space, group, budget).document()
        logger.info('Torsors of %s with %s: %d orbits', space.name, group.name, report.orbits)
        return document

    def failed(self, document):
        return document.get('matches_hom_orbits') is False

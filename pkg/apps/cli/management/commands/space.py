"""
Cohomology of a simplicial set, and its homotopy when asserted formal.
"""

import logging

from apps.api.documents import space_document
from apps.cli.base import MalcevCommand, parse_monodromy_option
from apps.core.exceptions import ParseError
from apps.simplicial.loader import load_group_file, load_space_file

logger = logging.getLogger(__name__)


class Command(MalcevCommand):
    help = 'Cohomology ring of a space; homotopy with --formal, relative to a finite group with --group'

    def add_arguments(self, parser):
        parser.add_argument('space', type=str, help='Space document (JSON)')
        parser.add_argument(
            '--formal',
            action='store_true',
            help='Assert the cochains are formal and compute homotopy from cohomology'
        )
        parser.add_argument(
            '--group',
            type=str,
            help='Finite group document (JSON) for the relative computation'
        )
        parser.add_argument(
            '--monodromy',
            type=str,
            help='trivial, nontrivial, or edge labels as JSON (inline or a file)'
        )
        super().add_arguments(parser)

    def compute(self, options):
        space = load_space_file(options['space'])
        group = None
        if options['group']:
            group, _ = load_group_file(options['group'])
        elif options['monodromy']:
            raise ParseError('--monodromy needs --group.')
        monodromy = parse_monodromy_option(options['monodromy'])
        t = self.truncation(options)
        logger.info('Space %s: formal=%s group=%s', space.name, options['formal'], group.name if group else None)
        return space_document(space, t, options['formal'], group, monodromy)

"""
Homotopy table of a ring's free chain Lie model.
"""

import logging

from apps.api.documents import homotopy_document
from apps.cli.base import MalcevCommand
from apps.rings.loader import load_ring_file

logger = logging.getLogger(__name__)


class Command(MalcevCommand):
    help = 'Rational homotopy groups of a formal space from its cohomology ring'
    formats = ('json', 'csv')

    def add_arguments(self, parser):
        parser.add_argument('ring', type=str, help='Ring document (JSON)')
        super().add_arguments(parser)

    def compute(self, options):
        ring = load_ring_file(options['ring'])
        t = self.truncation(options)
        logger.info('Homotopy of %s with N=%d, L=%d', ring.name, t.max_degree, t.max_weight)
        return homotopy_document(ring, t)

    def csv_table(self, document):
        rows = [
            [
                row['n'],
                row['dim'],
                ';'.join(f'{w}:{d}' for w, d in row['weights'].items()),
                row['stable'],
            ]
            for row in document['homotopy']
        ]
        return ['n', 'dim', 'weights', 'stable'], rows

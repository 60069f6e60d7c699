"""
Adams E^1 page of a ring.
"""

from apps.api.documents import adams_document
from apps.cli.base import MalcevCommand
from apps.rings.loader import load_ring_file


class Command(MalcevCommand):
    help = 'E^1 page (and E^2 where complete) of the Adams spectral sequence of a ring'
    formats = ('json', 'csv')

    def add_arguments(self, parser):
        parser.add_argument('ring', type=str, help='Ring document (JSON)')
        super().add_arguments(parser)

    def compute(self, options):
        return adams_document(load_ring_file(options['ring']), self.truncation(options))

    def csv_table(self, document):
        rows = []
        for i, p in enumerate(document['p']):
            for j, q in enumerate(document['q']):
                e1 = document['E1'][i][j]
                if e1:
                    e2 = document['E2'][i][j]
                    rows.append([p, q, e1, '' if e2 is None else e2])
        return ['p', 'q', 'E1', 'E2'], rows

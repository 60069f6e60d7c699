"""
Round trip ring -> free chain Lie model -> Chevalley-Eilenberg cochains.
"""

from apps.cli.base import MalcevCommand
from apps.quillen.chevalley import round_trip
from apps.rings.loader import load_ring_file


class Command(MalcevCommand):
    help = 'Compare the betti numbers of a ring with the CE cohomology of its model'

    def add_arguments(self, parser):
        parser.add_argument('ring', type=str, help='Ring document (JSON)')
        super().add_arguments(parser)

    def compute(self, options):
        return round_trip(load_ring_file(options['ring']), self.truncation(options)).document()

    def failed(self, document):
        return not document['ok']
